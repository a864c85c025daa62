"""Exception hierarchy shared by the solver and statistic modules."""


class KuiperError(Exception):
    """Base class for all errors raised by this package."""


class NonConvergenceError(KuiperError):
    """Fixed-point iteration exhausted its iteration budget.

    The partial iterate history is attached as ``trace`` when available.
    """

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class NumericalDomainError(KuiperError):
    """An intermediate quantity left the domain of log or sqrt."""


class DerivativeNearZeroError(KuiperError):
    """Newton slope estimate too close to zero to divide by safely."""


class InadmissibleRootError(KuiperError):
    """Solved critical value violates the one-sample admissibility bound c > 1/2."""


class UnboundedQuantileError(KuiperError):
    """The requested quantile has no finite value under the tail approximation."""


class ExponentOverflowError(KuiperError):
    """exp(c^2) is not representable in double precision."""


class EmptyInputError(KuiperError):
    """Statistic requested on an empty sample."""


class UnsortedInputError(KuiperError):
    """Statistic input must be sorted ascending."""


class OutOfRangeError(KuiperError):
    """Probability-scale input fell outside [0, 1]."""


class LengthMismatchError(KuiperError):
    """Two-sample statistic requires equal sample sizes."""
