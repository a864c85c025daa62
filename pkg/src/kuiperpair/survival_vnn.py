"""Tail mathematics of the equal-size two-sample Kuiper test.

For two samples of common size n the normalized statistic is
sqrt(n) * V_{n,n}.  Writing x = c^2, the two-term truncation of its tail
series gives

    alpha_hat = U1(c, n) * exp(-x) + U2(c, n) * exp(-4x)

where U1 absorbs the series' standalone -1/(6n) constant as -exp(x)/(6n) so
the approximation keeps the same two-exponential shape as the one-sample
case.  ``f_nlm2`` / ``f_ctm2`` are the residual and contraction forms used by
the solvers.  There is no modified small-n variant of this statistic: the
truncation error is already O(1/n^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._common import is_infinite_n
from .errors import ExponentOverflowError, NumericalDomainError

# exp(x) overflows double precision shortly after x = 709; stop earlier.
EXP_OVERFLOW_LIMIT = 700.0


@dataclass(frozen=True)
class VnnFactors:
    """Values of the two factors at a given (c, n)."""

    u1: float
    u2: float


def u1(c: float, n: float) -> float:
    """First factor: 2(2x-1) - x(2x-7)/(6n) - exp(x)/(6n) with x = c^2."""
    x = c * c
    if is_infinite_n(n):
        return 2.0 * (2.0 * x - 1.0)
    if x > EXP_OVERFLOW_LIMIT:
        raise ExponentOverflowError(
            f"exp(c^2) overflows for c={c:.6g} (c^2={x:.6g} > {EXP_OVERFLOW_LIMIT:g})"
        )
    return 2.0 * (2.0 * x - 1.0) - x * (2.0 * x - 7.0) / (6.0 * n) - math.exp(x) / (6.0 * n)


def u2(c: float, n: float) -> float:
    """Second factor: 2(8x-1) - 2x(8x-7)/(3n) with x = c^2."""
    x = c * c
    if is_infinite_n(n):
        return 2.0 * (8.0 * x - 1.0)
    return 2.0 * (8.0 * x - 1.0) - 2.0 * x * (8.0 * x - 7.0) / (3.0 * n)


def vnn_factors(c: float, n: float) -> VnnFactors:
    """Both factors bundled."""
    return VnnFactors(u1=u1(c, n), u2=u2(c, n))


def survival_vnn(c: float, n: float) -> float:
    """Two-term approximation of Pr{sqrt(n) * V_{n,n} > c}."""
    x = c * c
    return u1(c, n) * math.exp(-x) + u2(c, n) * math.exp(-4.0 * x)


def _log_argument(c: float, alpha: float, n: float) -> tuple[float, float]:
    x = c * c
    arg = u1(c, n) + u2(c, n) * math.exp(-3.0 * x)
    if arg <= 0.0:
        raise NumericalDomainError(
            f"U1 + U2*exp(-3c^2) = {arg:.6g} is not positive at c={c:.6g}, n={n:g}"
        )
    return math.log(arg), math.log(alpha)


def f_nlm2(c: float, alpha: float, n: float) -> float:
    """Residual c^2 + ln(alpha) - ln[U1 + U2 exp(-3c^2)]; root = critical value."""
    log_arg, log_alpha = _log_argument(c, alpha, n)
    return c * c + log_alpha - log_arg


def f_ctm2(c: float, alpha: float, n: float) -> float:
    """Contraction sqrt(ln[U1 + U2 exp(-3c^2)] - ln alpha); fixed point = root of f_nlm2."""
    log_arg, log_alpha = _log_argument(c, alpha, n)
    radicand = log_arg - log_alpha
    if radicand < 0.0:
        raise NumericalDomainError(
            f"negative radicand {radicand:.6g} at c={c:.6g}, alpha={alpha:g}, n={n:g}"
        )
    return math.sqrt(radicand)
