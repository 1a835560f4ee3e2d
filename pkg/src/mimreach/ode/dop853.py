"""Adaptive Dormand-Prince 8(5,3) integration core.

``dop853_core`` is written in numba-compilable numpy so the identical
source runs two ways: interpreted, for arbitrary Python right-hand
sides, and JIT-compiled (via :func:`get_compiled_core`) for the
shooting solvers whose right-hand sides are themselves compiled.
"""
import math

import numpy as np

from . import _dop853_tables as tbl

# status codes returned by dop853_core
OK = 0
STEP_UNDERFLOW = 1
NONFINITE = 2
MAX_STEPS = 3

_A = tbl.A
_B = tbl.B
_C = tbl.C
_E3 = tbl.E3
_E5 = tbl.E5
_N_STAGES = tbl.N_STAGES

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 10.0
_ERR_EXPONENT = -1.0 / 8.0
_EPS = 2.220446049250313e-16


def dop853_core(rhs, params, y0, t0, tf, rtol, atol, max_steps,
                record, rec_t, rec_y):
    """Integrate dy/dt = rhs(y, params) from t0 to tf (either order).

    Returns (y, status, n_accepted, max_err, n_recorded). When ``record``
    is true, accepted-step times/states (including the endpoints) are
    written into rec_t / rec_y up to their capacity.
    """
    n = y0.shape[0]
    direction = 1.0 if tf >= t0 else -1.0
    span = abs(tf - t0)
    h_min = 1e3 * _EPS * span

    t = t0
    y = y0.copy()
    f = rhs(y, params)
    for j in range(n):
        if not np.isfinite(f[j]):
            return y, NONFINITE, 0, 0.0, 0

    # Hairer's initial-step heuristic
    scale = atol + rtol * np.abs(y)
    d0 = math.sqrt(np.sum((y / scale) ** 2) / n)
    d1 = math.sqrt(np.sum((f / scale) ** 2) / n)
    if d0 < 1e-5 or d1 < 1e-5:
        h0 = 1e-6
    else:
        h0 = 0.01 * d0 / d1
    y1 = y + h0 * direction * f
    f1 = rhs(y1, params)
    d2 = math.sqrt(np.sum(((f1 - f) / scale) ** 2) / n) / h0
    if d1 <= 1e-15 and d2 <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** 0.125
    h = min(100.0 * h0, h1, span)

    K = np.empty((_N_STAGES + 1, n))
    nrec = 0
    cap = rec_t.shape[0]
    if record and cap > 0:
        rec_t[0] = t
        for j in range(n):
            rec_y[0, j] = y[j]
        nrec = 1

    max_err = 0.0
    n_accepted = 0
    n_attempts = 0
    while direction * (tf - t) > 0.0:
        if n_attempts >= max_steps:
            return y, MAX_STEPS, n_accepted, max_err, nrec
        n_attempts += 1
        if h > span:
            h = span
        if h >= abs(tf - t):
            h = abs(tf - t)
        elif h < h_min:
            return y, STEP_UNDERFLOW, n_accepted, max_err, nrec
        hs = h * direction

        for j in range(n):
            K[0, j] = f[j]
        for i in range(1, _N_STAGES):
            acc = np.zeros(n)
            for s in range(i):
                a = _A[i, s]
                if a != 0.0:
                    acc += a * K[s]
            K[i] = rhs(y + hs * acc, params)

        acc = np.zeros(n)
        for s in range(_N_STAGES):
            b = _B[s]
            if b != 0.0:
                acc += b * K[s]
        y_new = y + hs * acc
        f_new = rhs(y_new, params)
        K[_N_STAGES] = f_new

        finite = True
        for j in range(n):
            if not np.isfinite(y_new[j]) or not np.isfinite(f_new[j]):
                finite = False
        if not finite:
            return y, NONFINITE, n_accepted, max_err, nrec

        # combined 5th/3rd-order error estimate, RMS-normalized
        scale = atol + rtol * np.maximum(np.abs(y), np.abs(y_new))
        err5 = np.zeros(n)
        err3 = np.zeros(n)
        for s in range(_N_STAGES + 1):
            if _E5[s] != 0.0:
                err5 += _E5[s] * K[s]
            if _E3[s] != 0.0:
                err3 += _E3[s] * K[s]
        err5_2 = np.sum((err5 / scale) ** 2)
        err3_2 = np.sum((err3 / scale) ** 2)
        if err5_2 == 0.0 and err3_2 == 0.0:
            err = 0.0
        else:
            err = h * err5_2 / math.sqrt((err5_2 + 0.01 * err3_2) * n)

        if err <= 1.0:
            t = t + hs
            y = y_new
            f = f_new
            n_accepted += 1
            if err > max_err:
                max_err = err
            if record and nrec < cap:
                rec_t[nrec] = t
                for j in range(n):
                    rec_y[nrec, j] = y[j]
                nrec += 1
            if err == 0.0:
                factor = _MAX_FACTOR
            else:
                factor = min(_MAX_FACTOR,
                             max(_MIN_FACTOR, _SAFETY * err ** _ERR_EXPONENT))
            h = h * factor
        else:
            h = h * max(_MIN_FACTOR, _SAFETY * err ** _ERR_EXPONENT)

    return y, OK, n_accepted, max_err, nrec


_COMPILED = None


def get_compiled_core():
    """JIT-compiled dop853_core; specializes per compiled rhs argument."""
    global _COMPILED
    if _COMPILED is None:
        import numba
        _COMPILED = numba.njit(cache=True, nogil=True)(dop853_core)
    return _COMPILED
