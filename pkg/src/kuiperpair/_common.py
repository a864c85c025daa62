"""Shared handling of the infinite-sample-size sentinel."""

from __future__ import annotations

import math

# Sample sizes at or beyond this threshold (or math.inf) are treated as the
# exact n -> infinity limit: every O(1/sqrt(n)) and O(1/n) term is dropped
# rather than evaluated at a huge n, avoiding pointless cancellation.
INFINITE_N = 1e16


def is_infinite_n(n: int | float) -> bool:
    """True when ``n`` requests the exact large-sample limit."""
    return math.isinf(n) or n >= INFINITE_N
