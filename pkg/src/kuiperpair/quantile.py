"""User-facing solving layer: Kuiper pairs, tail quantiles and inverse CDF.

A "Kuiper pair" couples the critical value c on the sqrt(n)*V scale with the
quantile v = c / sqrt(n) on the V scale, solved jointly for a significance
level alpha and sample size n.  The pair solver dispatches one of four
residual/updater combinations: {one-sample, two-sample-equal} x
{direct, Newton}.
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass
from enum import Enum

from . import survival_vn, survival_vnn
from .errors import InadmissibleRootError, UnboundedQuantileError
from .fixed_point import (
    SolverConfig,
    direct_update,
    distance,
    newton_update,
    solve_fixed_point,
)

SOLVER_EPSILON = 1e-5
DEFAULT_GUESS = 2.45
# One-sample critical values at or below 1/2 are artifacts of the truncated
# series (the factors turn negative in the large-n limit) and are rejected.
MIN_ADMISSIBLE_ROOT = 0.5

# Guards of the quantile routines: alpha pinned to the degenerate end of the
# distribution short-circuits to a zero quantile instead of a solve.
UPPER_TAIL_GUARD = 0.9999
LOWER_TAIL_GUARD = 0.0001


class TestKind(Enum):
    """Which Kuiper statistic a quantity refers to."""

    __test__ = False  # not a pytest class despite the name

    ONE_SAMPLE = "vn"
    TWO_SAMPLE_EQUAL = "vnn"


class IterationMethod(Enum):
    """Fixed-point update rule used by the solver."""

    DIRECT = "direct"
    NEWTON = "newton"


class GuessWindowWarning(UserWarning):
    """Initial guess lies outside the empirically safe window for the method."""


# Empirically safe initial-guess windows per (test, method); a guess outside
# its window still attempts the solve but draws a warning.
GUESS_WINDOWS: dict[tuple[TestKind, IterationMethod], tuple[float, float]] = {
    (TestKind.ONE_SAMPLE, IterationMethod.DIRECT): (0.5, 2.5),
    (TestKind.ONE_SAMPLE, IterationMethod.NEWTON): (1.1, 2.5),
    (TestKind.TWO_SAMPLE_EQUAL, IterationMethod.DIRECT): (2.4, 2.6),
    (TestKind.TWO_SAMPLE_EQUAL, IterationMethod.NEWTON): (2.2, 2.6),
}

_RESIDUALS = {
    (TestKind.ONE_SAMPLE, IterationMethod.DIRECT): survival_vn.f_ctm1,
    (TestKind.ONE_SAMPLE, IterationMethod.NEWTON): survival_vn.f_nlm1,
    (TestKind.TWO_SAMPLE_EQUAL, IterationMethod.DIRECT): survival_vnn.f_ctm2,
    (TestKind.TWO_SAMPLE_EQUAL, IterationMethod.NEWTON): survival_vnn.f_nlm2,
}


@dataclass(frozen=True)
class KuiperPair:
    """Solved critical value and tail quantile for one (alpha, n, kind)."""

    critical_value: float
    quantile: float
    alpha: float
    n: int | float
    kind: TestKind


def _validate_alpha_n(alpha: float, n: int | float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
    if n < 1:
        raise ValueError(f"n must be a positive sample size, got {n!r}")


def kuiper_pair_solver(
    guess: float,
    alpha: float,
    n: int | float,
    kind: TestKind = TestKind.ONE_SAMPLE,
    method: IterationMethod = IterationMethod.NEWTON,
) -> KuiperPair:
    """Solve the Kuiper pair (c, v = c/sqrt(n)) for the given test and method.

    ``n`` may be ``math.inf`` (or any value >= 1e16) to request the exact
    large-sample limit.  Raises NonConvergenceError, NumericalDomainError or
    InadmissibleRootError (one-sample root at or below 1/2).
    """
    _validate_alpha_n(alpha, n)
    window = GUESS_WINDOWS[(kind, method)]
    if not window[0] < guess < window[1]:
        warnings.warn(
            f"guess {guess:g} outside the recommended window {window} for "
            f"{kind.value}/{method.value}; attempting the solve anyway",
            GuessWindowWarning,
            stacklevel=2,
        )
    config = SolverConfig(epsilon=SOLVER_EPSILON, guess=guess)
    residual = _RESIDUALS[(kind, method)]
    if method is IterationMethod.NEWTON:
        updater = functools.partial(newton_update, step=config.derivative_step)
    else:
        updater = direct_update
    critical, _trace = solve_fixed_point(updater, residual, distance, config, alpha, n)
    if kind is TestKind.ONE_SAMPLE and critical <= MIN_ADMISSIBLE_ROOT:
        raise InadmissibleRootError(
            f"solved critical value {critical:.6g} is at or below "
            f"{MIN_ADMISSIBLE_ROOT} for alpha={alpha:g}, n={n:g}"
        )
    return KuiperPair(
        critical_value=critical,
        quantile=critical / math.sqrt(n),
        alpha=alpha,
        n=n,
        kind=kind,
    )


def kuiper_utq(alpha: float, n: int | float) -> float:
    """Upper tail quantile v(alpha, n) with Pr{V_n > v} = alpha.

    Returns 0.0 outright for alpha >= 0.9999, where the quantile is pinned to
    the bottom of the distribution's support.
    """
    if alpha >= UPPER_TAIL_GUARD:
        return 0.0
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    pair = kuiper_pair_solver(
        DEFAULT_GUESS, alpha, n, TestKind.ONE_SAMPLE, IterationMethod.NEWTON
    )
    return pair.quantile


def kuiper_ltq(alpha: float, n: int | float) -> float:
    """Lower tail quantile, the complement identity of :func:`kuiper_utq`.

    Returns 0.0 for alpha <= 0.0001; otherwise the lower tail quantile at
    level alpha equals the upper tail quantile at level 1 - alpha.
    """
    if alpha <= LOWER_TAIL_GUARD:
        return 0.0
    return kuiper_utq(1.0 - alpha, n)


def kuiper_inv_cdf(p: float, n: int | float) -> float:
    """Inverse CDF of the one-sample statistic V_n at probability p.

    Delegates to :func:`kuiper_utq` at level 1 - p and therefore inherits its
    guard: F^-1(p) = 0 for p <= 0.0001.  The truncated-series model has no
    finite 100th percentile, so p = 1 raises UnboundedQuantileError.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    if p == 1.0:
        raise UnboundedQuantileError(
            "the tail approximation has no finite quantile at p = 1"
        )
    return kuiper_utq(1.0 - p, n)
