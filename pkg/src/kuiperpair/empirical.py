"""Empirical Kuiper statistics, test decisions and a Monte Carlo oracle.

The one-sample kernel is distribution-free: it expects probability-integral
transformed values u_(i) = F0(x_(i)), already sorted ascending, and measures
how far their empirical CDF strays above and below the uniform CDF.  The
two-sample kernel compares two equal-size empirical CDFs over their merged
breakpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    EmptyInputError,
    LengthMismatchError,
    OutOfRangeError,
    UnsortedInputError,
)
from .quantile import (
    DEFAULT_GUESS,
    IterationMethod,
    TestKind,
    kuiper_pair_solver,
    kuiper_utq,
)
from .survival_vn import survival_vn

# Replication chunks are capped at this many uniforms so the simulator's
# memory stays bounded; the chunk layout is a pure function of (n, reps),
# keeping results reproducible for a fixed seed.
_ELEMENT_BUDGET = 10_000_000


@dataclass(frozen=True)
class EmpiricalResult:
    """D+, D-, their sum V and the normalized statistic k = sqrt(n)*V."""

    d_plus: float
    d_minus: float
    v: float
    k: float
    n: int


@dataclass(frozen=True)
class TestDecision:
    """Outcome of comparing an observed statistic against a solved quantile."""

    __test__ = False  # not a pytest class despite the name

    statistic: EmpiricalResult
    alpha: float
    quantile: float
    reject: bool


def kuiper_statistic_one_sample(
    probabilities: Sequence[float] | np.ndarray,
) -> EmpiricalResult:
    """Kuiper statistic of sorted probability-scale values against uniform.

    d_plus  = max_i (i/n - u_(i)),  d_minus = max_i (u_(i) - (i-1)/n),
    both floored at zero, with v = d_plus + d_minus and k = sqrt(n) * v.

    Raises EmptyInputError, OutOfRangeError (value outside [0, 1]) or
    UnsortedInputError.
    """
    u = np.asarray(probabilities, dtype=float)
    if u.ndim != 1:
        raise ValueError(f"expected a 1-D sequence, got shape {u.shape}")
    n = u.size
    if n == 0:
        raise EmptyInputError("one-sample statistic needs at least one value")
    in_range = (u >= 0.0) & (u <= 1.0)  # False for NaN as well
    if not np.all(in_range):
        bad = float(u[~in_range][0])
        raise OutOfRangeError(f"probability-scale value {bad!r} outside [0, 1]")
    if np.any(np.diff(u) < 0.0):
        raise UnsortedInputError("values must be sorted ascending")
    positions = np.arange(1.0, n + 1.0)
    d_plus = max(0.0, float(np.max(positions / n - u)))
    d_minus = max(0.0, float(np.max(u - (positions - 1.0) / n)))
    v = d_plus + d_minus
    return EmpiricalResult(
        d_plus=d_plus, d_minus=d_minus, v=v, k=math.sqrt(n) * v, n=n
    )


def kuiper_statistic_two_sample(
    sample_a: Sequence[float] | np.ndarray,
    sample_b: Sequence[float] | np.ndarray,
) -> EmpiricalResult:
    """Kuiper statistic between two equal-size sorted samples.

    The two right-continuous empirical CDFs are compared at every distinct
    merged value, which is where their difference can change; ties within and
    across samples are handled by the shared breakpoint grid.

    Raises EmptyInputError, LengthMismatchError (only n = m is supported by
    the matching quantiles) or UnsortedInputError.
    """
    a = np.asarray(sample_a, dtype=float)
    b = np.asarray(sample_b, dtype=float)
    if a.size == 0 or b.size == 0:
        raise EmptyInputError("two-sample statistic needs nonempty samples")
    if a.size != b.size:
        raise LengthMismatchError(
            f"sample sizes differ ({a.size} vs {b.size}); only equal sizes "
            "have a matching quantile"
        )
    if np.any(np.diff(a) < 0.0) or np.any(np.diff(b) < 0.0):
        raise UnsortedInputError("both samples must be sorted ascending")
    n = a.size
    grid = np.unique(np.concatenate([a, b]))
    ecdf_a = np.searchsorted(a, grid, side="right") / n
    ecdf_b = np.searchsorted(b, grid, side="right") / n
    diff = ecdf_a - ecdf_b
    d_plus = max(0.0, float(np.max(diff)))
    d_minus = max(0.0, float(np.max(-diff)))
    v = d_plus + d_minus
    return EmpiricalResult(
        d_plus=d_plus, d_minus=d_minus, v=v, k=math.sqrt(n) * v, n=int(n)
    )


def run_test(
    result: EmpiricalResult, alpha: float, kind: TestKind = TestKind.ONE_SAMPLE
) -> TestDecision:
    """Decide accept/reject: reject exactly when v exceeds the alpha-quantile.

    Equality keeps the null (the quantile is defined through a strict
    exceedance probability).  Solver errors propagate.
    """
    if kind is TestKind.ONE_SAMPLE:
        threshold = kuiper_utq(alpha, result.n)
    else:
        threshold = kuiper_pair_solver(
            DEFAULT_GUESS, alpha, result.n, kind, IterationMethod.NEWTON
        ).quantile
    return TestDecision(
        statistic=result,
        alpha=alpha,
        quantile=threshold,
        reject=result.v > threshold,
    )


def approximate_p_value(result: EmpiricalResult) -> float:
    """One-sample tail probability of the observed statistic, clamped to [0, 1].

    Evaluates the two-term tail approximation at k = sqrt(n) * v; outside its
    validity region the raw expression can leave [0, 1], hence the clamp.
    """
    return min(1.0, max(0.0, survival_vn(result.k, result.n)))


def monte_carlo_exceedance(
    n: int, v_threshold: float, replications: int, seed: int
) -> float:
    """Fraction of simulated uniform samples whose statistic v exceeds a threshold.

    Draws ``replications`` samples of ``n`` uniforms from a generator seeded
    with ``seed`` and is fully deterministic for fixed arguments.  Serves as
    the independent check that Pr{V_n > v(alpha, n)} is indeed close to alpha.
    """
    if n < 1:
        raise ValueError(f"n must be a positive sample size, got {n!r}")
    if replications < 1:
        raise ValueError(f"replications must be at least 1, got {replications!r}")
    rng = np.random.default_rng(seed)
    positions = np.arange(1.0, n + 1.0)
    upper = positions / n
    lower = (positions - 1.0) / n
    chunk_rows = max(1, _ELEMENT_BUDGET // n)
    exceeded = 0
    remaining = replications
    while remaining > 0:
        rows = min(chunk_rows, remaining)
        u = np.sort(rng.random((rows, n)), axis=1)
        d_plus = np.maximum((upper - u).max(axis=1), 0.0)
        d_minus = np.maximum((u - lower).max(axis=1), 0.0)
        exceeded += int(np.count_nonzero(d_plus + d_minus > v_threshold))
        remaining -= rows
    return exceeded / replications
