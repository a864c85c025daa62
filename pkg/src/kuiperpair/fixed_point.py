"""Scalar fixed-point iteration framework with direct and Newton updaters.

The solver repeatedly applies an updating operator ``T(f, c, alpha, n)`` until
two successive iterates are closer than a tolerance.  The operator is either
the contraction itself (direct iteration) or a Newton step built from a
residual function (Newton iteration); both share one loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DerivativeNearZeroError, NonConvergenceError

ResidualFn = Callable[[float, float, float], float]
Updater = Callable[[ResidualFn, float, float, float], float]
DistanceFn = Callable[[float, float], float]

# Below this magnitude a forward-difference slope is treated as flat; dividing
# by it would turn a quiet plateau into an enormous Newton step.
DERIVATIVE_FLOOR = 1e-12


@dataclass(frozen=True)
class SolverConfig:
    """Tolerance, starting point and safety limits for one solve.

    ``epsilon`` is the stopping distance between successive iterates,
    ``guess`` the initial iterate, ``max_iterations`` the update budget and
    ``derivative_step`` the forward-difference step used by Newton updates.
    """

    epsilon: float = 1e-5
    guess: float = 2.45
    max_iterations: int = 200
    derivative_step: float = 1e-5

    def __post_init__(self) -> None:
        if self.epsilon <= 0.0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.guess <= 0.0:
            raise ValueError(f"guess must be positive, got {self.guess}")
        if self.max_iterations < 1:
            raise ValueError(
                f"max_iterations must be at least 1, got {self.max_iterations}"
            )
        if self.derivative_step <= 0.0:
            raise ValueError(
                f"derivative_step must be positive, got {self.derivative_step}"
            )


@dataclass(frozen=True)
class IterationTrace:
    """Diagnostic record of the iterate sequence c0, c1, c2, ... of one solve."""

    iterates: tuple[float, ...]
    converged: bool
    final_distance: float


def distance(x: float, y: float) -> float:
    """Absolute difference |x - y|."""
    return abs(x - y)


def newton_update(
    residual_fn: ResidualFn,
    c: float,
    alpha: float,
    n: float,
    step: float = 1e-5,
) -> float:
    """One Newton step c - f/f' with a forward-difference slope estimate.

    Raises DerivativeNearZeroError when the residual is locally flat, the
    failure mode of Newton iteration on plateaued residuals.
    """
    value = residual_fn(c, alpha, n)
    slope = (residual_fn(c + step, alpha, n) - value) / step
    if abs(slope) < DERIVATIVE_FLOOR:
        raise DerivativeNearZeroError(
            f"residual slope {slope:.3e} at c={c:.6g} is below {DERIVATIVE_FLOOR:g}"
        )
    return c - value / slope


def direct_update(
    contraction_fn: ResidualFn, c: float, alpha: float, n: float
) -> float:
    """One direct step: apply the contraction to the current iterate."""
    return contraction_fn(c, alpha, n)


def solve_fixed_point(
    updater: Updater,
    residual_fn: ResidualFn,
    dist: DistanceFn,
    config: SolverConfig,
    alpha: float,
    n: float,
) -> tuple[float, IterationTrace]:
    """Iterate ``c <- updater(residual_fn, c, alpha, n)`` to a fixed point.

    Starting from ``config.guess``, the loop stops as soon as the distance
    between two successive iterates drops below ``config.epsilon`` and returns
    the latest iterate together with the full trace.

    Raises NonConvergenceError (with the partial trace attached) once
    ``config.max_iterations`` updates have been spent without meeting the
    tolerance.  Domain errors raised by the updater or residual propagate.
    """
    current = config.guess
    iterates = [current]
    improved = updater(residual_fn, current, alpha, n)
    iterates.append(improved)
    gap = dist(improved, current)
    updates = 1
    while gap >= config.epsilon:
        if updates >= config.max_iterations:
            raise NonConvergenceError(
                f"no convergence within {config.max_iterations} iterations "
                f"(last distance {gap:.3e}, alpha={alpha:g}, n={n:g})",
                trace=IterationTrace(tuple(iterates), False, gap),
            )
        current = improved
        improved = updater(residual_fn, current, alpha, n)
        iterates.append(improved)
        gap = dist(improved, current)
        updates += 1
    return improved, IterationTrace(tuple(iterates), True, gap)
