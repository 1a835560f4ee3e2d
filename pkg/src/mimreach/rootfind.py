"""Powell-hybrid (dogleg) solver for square nonlinear systems.

Backed by the MINPACK hybrd implementation (forward-difference Jacobian,
QR factorization with Broyden rank-1 updates, trust-region dogleg steps,
internal variable scaling) exposed through scipy. Convergence is judged
here on the max-norm of the residual, not on MINPACK's step criterion.
"""
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.optimize import root as _scipy_root

CONVERGED = "converged"
STALLED = "stalled"
MAX_EVALS = "max_evals"
SINGULAR_JACOBIAN = "singular_jacobian"


@dataclass(frozen=True)
class RootProblem:
    """Square system F(x) = 0 of the given dimension.

    ``scale`` optionally supplies per-variable magnitudes used for the
    solver's internal diagonal scaling and finite-difference steps.
    """
    dimension: int
    residual: Callable[[np.ndarray], np.ndarray]
    scale: Optional[np.ndarray] = None


@dataclass(frozen=True)
class RootReport:
    solution: np.ndarray
    residual_norm: float        # max-norm of F at the solution
    evaluations: int
    status: str

    @property
    def converged(self) -> bool:
        return self.status == CONVERGED


def solve_hybrd(problem: RootProblem, x0, tol: float = 1e-8,
                max_evals: int = 2000, xtol: float = 1e-12) -> RootReport:
    """Solve F(x) = 0 by Powell's hybrid method.

    ``converged`` requires max|F| <= tol at the returned point; a point
    that satisfies MINPACK's step criterion but not the residual bound
    is reported as ``stalled``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (problem.dimension,):
        raise ValueError(f"x0 must have shape ({problem.dimension},)")
    if not np.all(np.isfinite(x0)):
        raise ValueError("x0 must be finite")

    nfev = 0

    def fun(x):
        nonlocal nfev
        nfev += 1
        return np.asarray(problem.residual(x), dtype=float)

    options = {"xtol": xtol, "maxfev": int(max_evals)}
    if problem.scale is not None:
        options["diag"] = 1.0 / np.asarray(problem.scale, dtype=float)

    sol = _scipy_root(fun, x0, method="hybr", options=options)
    fnorm = float(np.max(np.abs(sol.fun)))

    if fnorm <= tol:
        status = CONVERGED
    elif sol.status == 2:
        status = MAX_EVALS
    else:
        # covers xtol-satisfied-but-inaccurate and no-progress exits;
        # MINPACK folds rank-deficiency recovery failures into the latter
        status = STALLED
    return RootReport(sol.x, fnorm, nfev, status)
