"""Adaptive and fixed-step explicit Runge-Kutta integration."""
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .dop853 import (OK, STEP_UNDERFLOW, NONFINITE, MAX_STEPS,
                     dop853_core, get_compiled_core)

__all__ = [
    "VectorField", "IntegrationResult", "OdeError", "StepSizeUnderflow",
    "NonFiniteDerivative", "integrate_adaptive", "integrate_fixed",
    "dop853_core", "get_compiled_core",
]


class OdeError(RuntimeError):
    pass


class StepSizeUnderflow(OdeError):
    """Step control collapsed below the minimum step; not converged."""

    def __init__(self, t, state):
        super().__init__(f"step size underflow at t={t!r}")
        self.t = t
        self.state = state


class NonFiniteDerivative(OdeError):
    """The field returned a non-finite derivative."""

    def __init__(self, t, state):
        super().__init__(f"non-finite derivative near t={t!r}, state={state!r}")
        self.t = t
        self.state = state


@dataclass(frozen=True)
class VectorField:
    """Autonomous vector field: eval maps a state to its derivative."""
    dimension: int
    eval: Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class IntegrationResult:
    final_state: np.ndarray
    steps_taken: int
    max_error_estimate: float
    dense_samples: Optional[list]


def integrate_adaptive(field: VectorField, y0, t0: float, tf: float,
                       rel_tol: float = 1e-10, abs_tol: float = 1e-12,
                       dense: bool = False,
                       max_steps: int = 200_000) -> IntegrationResult:
    """Propagate ``field`` from t0 to tf with local error control.

    Backward integration (tf < t0) is supported. Local error per step is
    held to the mixed tolerance abs_tol + rel_tol*|y| in RMS norm.

    Raises:
        StepSizeUnderflow: step control cannot meet the tolerance.
        NonFiniteDerivative: the field produced nan/inf.
        OdeError: step budget exhausted.
    """
    if rel_tol <= 0 or abs_tol <= 0:
        raise ValueError("tolerances must be positive")
    y0 = np.asarray(y0, dtype=float)
    if y0.shape != (field.dimension,):
        raise ValueError(f"y0 must have shape ({field.dimension},)")
    if tf == t0:
        return IntegrationResult(y0.copy(), 1, 0.0,
                                 [(t0, y0.copy())] if dense else None)

    def rhs(y, _params):
        return np.asarray(field.eval(y), dtype=float)

    cap = max_steps + 2 if dense else 1
    rec_t = np.empty(cap)
    rec_y = np.empty((cap, field.dimension))
    y, status, nsteps, max_err, nrec = dop853_core(
        rhs, np.empty(0), y0, float(t0), float(tf), rel_tol, abs_tol,
        max_steps, dense, rec_t, rec_y)

    if status == STEP_UNDERFLOW:
        raise StepSizeUnderflow(rec_t[nrec - 1] if nrec else t0, y)
    if status == NONFINITE:
        raise NonFiniteDerivative(rec_t[nrec - 1] if nrec else t0, y)
    if status == MAX_STEPS:
        raise OdeError(f"no convergence within {max_steps} steps")

    samples = None
    if dense:
        samples = [(rec_t[i], rec_y[i].copy()) for i in range(nrec)]
    return IntegrationResult(y, max(nsteps, 1), max_err, samples)


def integrate_fixed(field: VectorField, y0, t0: float, tf: float,
                    n_steps: int) -> np.ndarray:
    """Classical fixed-step RK4 over n_steps equal steps."""
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    y = np.asarray(y0, dtype=float).copy()
    h = (tf - t0) / n_steps
    for _ in range(n_steps):
        k1 = np.asarray(field.eval(y), dtype=float)
        k2 = np.asarray(field.eval(y + 0.5 * h * k1), dtype=float)
        k3 = np.asarray(field.eval(y + 0.5 * h * k2), dtype=float)
        k4 = np.asarray(field.eval(y + h * k3), dtype=float)
        if not (np.all(np.isfinite(k1)) and np.all(np.isfinite(k4))):
            raise NonFiniteDerivative(t0, y)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y
