"""Critical values, tail quantiles and empirical statistics for Kuiper's tests.

The central object is the "Kuiper pair": the critical value c of the
normalized statistic sqrt(n) * V together with the quantile v = c / sqrt(n)
of V itself, solved by fixed-point iteration on a two-term truncation of the
statistic's asymptotic tail series.  One-sample (V_n) and equal-size
two-sample (V_{n,n}) variants are supported, along with the empirical
statistic, accept/reject decisions, and a Monte Carlo validation oracle.
"""

from ._common import INFINITE_N, is_infinite_n
from .empirical import (
    EmpiricalResult,
    TestDecision,
    approximate_p_value,
    kuiper_statistic_one_sample,
    kuiper_statistic_two_sample,
    monte_carlo_exceedance,
    run_test,
)
from .errors import (
    DerivativeNearZeroError,
    EmptyInputError,
    ExponentOverflowError,
    InadmissibleRootError,
    KuiperError,
    LengthMismatchError,
    NonConvergenceError,
    NumericalDomainError,
    OutOfRangeError,
    UnboundedQuantileError,
    UnsortedInputError,
)
from .fixed_point import (
    IterationTrace,
    SolverConfig,
    direct_update,
    distance,
    newton_update,
    solve_fixed_point,
)
from .quantile import (
    DEFAULT_GUESS,
    GUESS_WINDOWS,
    GuessWindowWarning,
    IterationMethod,
    KuiperPair,
    TestKind,
    kuiper_inv_cdf,
    kuiper_ltq,
    kuiper_pair_solver,
    kuiper_utq,
)
from .survival_vn import (
    VnFactors,
    a1,
    a2,
    f_ctm1,
    f_nlm1,
    series_survival_vn,
    survival_vn,
    vn_factors,
)
from .survival_vnn import (
    VnnFactors,
    f_ctm2,
    f_nlm2,
    survival_vnn,
    u1,
    u2,
    vnn_factors,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE_N",
    "is_infinite_n",
    "EmpiricalResult",
    "TestDecision",
    "approximate_p_value",
    "kuiper_statistic_one_sample",
    "kuiper_statistic_two_sample",
    "monte_carlo_exceedance",
    "run_test",
    "DerivativeNearZeroError",
    "EmptyInputError",
    "ExponentOverflowError",
    "InadmissibleRootError",
    "KuiperError",
    "LengthMismatchError",
    "NonConvergenceError",
    "NumericalDomainError",
    "OutOfRangeError",
    "UnboundedQuantileError",
    "UnsortedInputError",
    "IterationTrace",
    "SolverConfig",
    "direct_update",
    "distance",
    "newton_update",
    "solve_fixed_point",
    "DEFAULT_GUESS",
    "GUESS_WINDOWS",
    "GuessWindowWarning",
    "IterationMethod",
    "KuiperPair",
    "TestKind",
    "kuiper_inv_cdf",
    "kuiper_ltq",
    "kuiper_pair_solver",
    "kuiper_utq",
    "VnFactors",
    "a1",
    "a2",
    "f_ctm1",
    "f_nlm1",
    "series_survival_vn",
    "survival_vn",
    "vn_factors",
    "VnnFactors",
    "f_ctm2",
    "f_nlm2",
    "survival_vnn",
    "u1",
    "u2",
    "vnn_factors",
]
