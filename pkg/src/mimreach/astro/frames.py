"""Local orbital frames."""
import numpy as np

from .elements import CartesianState


def rtn_basis(state: CartesianState) -> np.ndarray:
    """Radial-transverse-normal triad of an orbital state.

    Returns a 3x3 matrix whose columns are (radial, transverse, normal):
    radial along the position, normal along the angular momentum, and
    transverse completing the right-handed triad in the orbit plane.
    Rotate an inertial vector into RTN components with ``basis.T @ vec``.
    """
    r = state.position
    v = state.velocity
    rn = np.linalg.norm(r)
    hvec = np.cross(r, v)
    hn = np.linalg.norm(hvec)
    if rn == 0.0 or hn == 0.0:
        raise ValueError("degenerate state: zero radius or angular momentum")
    rhat = r / rn
    nhat = hvec / hn
    that = np.cross(nhat, rhat)
    return np.column_stack((rhat, that, nhat))
