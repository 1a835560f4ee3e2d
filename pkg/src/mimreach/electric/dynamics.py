"""Electric low-thrust PMP dynamics in modified equinoctial elements.

The augmented state is z = (p, f, g, h, k, L, m, lam[6], lam_m) with the
translational part in canonical heliocentric units and the mass in units
of the reference spacecraft mass. The costate rates are exact gradients
of the Hamiltonian, obtained by forward-mode dual arithmetic through the
Gauss variational equations; ``gauss_matrices`` provides an independent
plain-numpy evaluation of the same dynamics for cross-checks.

Parameter vector layout for the compiled right-hand side:
    params = [mu, c_t, c_f, eps]
with c_t the full-thrust acceleration at unit (scaled) mass and c_f the
full-thrust propellant flow in scaled mass per canonical time.
"""
import math

import numba
import numpy as np

from .._duals import (d6_con, d6_add, d6_sub, d6_mul, d6_div, d6_smul,
                      d6_sadd, d6_sqrt, d6_sin, d6_cos)

N_STATE = 14


def gauss_matrices(x, mu):
    """Drift vector A and control-influence matrix B of the MEE rates.

    x = (p, f, g, h, k, L); the perturbing acceleration is expressed in
    the RTN frame. Plain-numpy reference path, kept independent of the
    dual-number evaluation used inside the compiled dynamics.
    """
    p, f, g, h, k, L = x
    cl, sl = math.cos(L), math.sin(L)
    w = 1.0 + f * cl + g * sl
    s2 = 1.0 + h * h + k * k
    sqpm = math.sqrt(p / mu)
    hsk = h * sl - k * cl

    a = np.zeros(6)
    a[5] = math.sqrt(mu * p) * (w / p) ** 2

    b = np.zeros((6, 3))
    b[0, 1] = sqpm * 2.0 * p / w
    b[1, 0] = sqpm * sl
    b[1, 1] = sqpm * ((w + 1.0) * cl + f) / w
    b[1, 2] = -sqpm * g * hsk / w
    b[2, 0] = -sqpm * cl
    b[2, 1] = sqpm * ((w + 1.0) * sl + g) / w
    b[2, 2] = sqpm * f * hsk / w
    b[3, 2] = sqpm * s2 * cl / (2.0 * w)
    b[4, 2] = sqpm * s2 * sl / (2.0 * w)
    b[5, 2] = sqpm * hsk / w
    return a, b


def optimal_control(costate_v, epsilon: float = 0.0):
    """Thrust direction minimizing the Hamiltonian: -lv / |lv|.

    ``costate_v`` is the velocity-costate (primer) vector; in the
    equinoctial representation that is B(x)^T lam. A positive ``epsilon``
    smooths the norm: -lv / sqrt(|lv|^2 + eps^2).
    """
    lv = np.asarray(costate_v, dtype=float)
    nrm2 = float(np.dot(lv, lv))
    if epsilon == 0.0:
        if nrm2 == 0.0:
            raise ValueError("degenerate direction: zero velocity costate "
                             "with no smoothing")
        return -lv / math.sqrt(nrm2)
    return -lv / math.sqrt(nrm2 + epsilon * epsilon)


def hamiltonian(x, m_scaled, lam, lam_m, u, mu, c_t, c_f):
    """PMP Hamiltonian at a point, for an explicit control u.

    H = lam . (A + B (c_t/m) u) - lam_m c_f |u|. Uses the plain-numpy
    Gauss matrices so it can serve as a finite-difference oracle for the
    compiled costate rates.
    """
    a, b = gauss_matrices(x, mu)
    u = np.asarray(u, dtype=float)
    rate = a + b @ ((c_t / m_scaled) * u)
    return float(np.dot(lam, rate)) - lam_m * c_f * float(np.linalg.norm(u))


def electric_rhs(z, params):
    """Augmented PMP rates: d/dt (x, m, lam, lam_m)."""
    mu = params[0]
    c_t = params[1]
    c_f = params[2]
    eps = params[3]

    pv = z[0]
    mt = z[6]
    if pv <= 0.0 or mt <= 0.0:
        out = np.empty(N_STATE)
        for i in range(N_STATE):
            out[i] = np.nan
        return out

    p = (z[0], 1.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    f = (z[1], 0.0, 1.0, 0.0, 0.0, 0.0, 0.0)
    g = (z[2], 0.0, 0.0, 1.0, 0.0, 0.0, 0.0)
    h = (z[3], 0.0, 0.0, 0.0, 1.0, 0.0, 0.0)
    k = (z[4], 0.0, 0.0, 0.0, 0.0, 1.0, 0.0)
    L = (z[5], 0.0, 0.0, 0.0, 0.0, 0.0, 1.0)

    l0 = z[7]
    l1 = z[8]
    l2 = z[9]
    l3 = z[10]
    l4 = z[11]
    l5 = z[12]

    cl = d6_cos(L)
    sl = d6_sin(L)
    w = d6_sadd(1.0, d6_add(d6_mul(f, cl), d6_mul(g, sl)))
    s2 = d6_sadd(1.0, d6_add(d6_mul(h, h), d6_mul(k, k)))
    sqpm = d6_sqrt(d6_smul(1.0 / mu, p))
    hsk = d6_sub(d6_mul(h, sl), d6_mul(k, cl))
    winv = d6_div(d6_con(1.0), w)
    sq_w = d6_mul(sqpm, winv)           # sqrt(p/mu) / w
    wp1 = d6_sadd(1.0, w)

    b01 = d6_smul(2.0, d6_mul(sq_w, p))
    b10 = d6_mul(sqpm, sl)
    b11 = d6_mul(sq_w, d6_add(d6_mul(wp1, cl), f))
    b12 = d6_smul(-1.0, d6_mul(sq_w, d6_mul(g, hsk)))
    b20 = d6_smul(-1.0, d6_mul(sqpm, cl))
    b21 = d6_mul(sq_w, d6_add(d6_mul(wp1, sl), g))
    b22 = d6_mul(sq_w, d6_mul(f, hsk))
    b32 = d6_smul(0.5, d6_mul(sq_w, d6_mul(s2, cl)))
    b42 = d6_smul(0.5, d6_mul(sq_w, d6_mul(s2, sl)))
    b52 = d6_mul(sq_w, hsk)
    # drift: sqrt(mu p) (w/p)^2 = sqrt(mu) w^2 / p^(3/2)
    a5 = d6_smul(math.sqrt(mu),
                 d6_div(d6_mul(w, w), d6_mul(p, d6_sqrt(p))))

    # primer vector B^T lam and the max-thrust direction
    pv0 = l1 * b10[0] + l2 * b20[0]
    pv1 = l0 * b01[0] + l1 * b11[0] + l2 * b21[0]
    pv2 = l1 * b12[0] + l2 * b22[0] + l3 * b32[0] + l4 * b42[0] + l5 * b52[0]
    pn2 = pv0 * pv0 + pv1 * pv1 + pv2 * pv2
    sden = math.sqrt(pn2 + eps * eps)
    if sden == 0.0:
        u0 = 0.0
        u1 = 0.0
        u2 = 0.0
        unorm = 0.0
    else:
        u0 = -pv0 / sden
        u1 = -pv1 / sden
        u2 = -pv2 / sden
        unorm = math.sqrt(pn2) / sden

    acc = c_t / mt
    dl0 = acc * u0
    dl1 = acc * u1
    dl2 = acc * u2

    # scalar lam . xdot as a dual in the six elements (control held fixed)
    gd = d6_smul(l5, a5)
    gd = d6_add(gd, d6_smul(l1 * dl0, b10))
    gd = d6_add(gd, d6_smul(l2 * dl0, b20))
    gd = d6_add(gd, d6_smul(l0 * dl1, b01))
    gd = d6_add(gd, d6_smul(l1 * dl1, b11))
    gd = d6_add(gd, d6_smul(l2 * dl1, b21))
    gd = d6_add(gd, d6_smul(l1 * dl2, b12))
    gd = d6_add(gd, d6_smul(l2 * dl2, b22))
    gd = d6_add(gd, d6_smul(l3 * dl2, b32))
    gd = d6_add(gd, d6_smul(l4 * dl2, b42))
    gd = d6_add(gd, d6_smul(l5 * dl2, b52))

    out = np.empty(N_STATE)
    out[0] = b01[0] * dl1
    out[1] = b10[0] * dl0 + b11[0] * dl1 + b12[0] * dl2
    out[2] = b20[0] * dl0 + b21[0] * dl1 + b22[0] * dl2
    out[3] = b32[0] * dl2
    out[4] = b42[0] * dl2
    out[5] = a5[0] + b52[0] * dl2
    out[6] = -c_f * unorm
    out[7] = -gd[1]
    out[8] = -gd[2]
    out[9] = -gd[3]
    out[10] = -gd[4]
    out[11] = -gd[5]
    out[12] = -gd[6]
    # lam_m rate: (c_t/m^2) primer.u  (<= 0 along the max-thrust law)
    out[13] = (c_t / (mt * mt)) * (pv0 * u0 + pv1 * u1 + pv2 * u2)
    return out


_COMPILED_RHS = None


def get_compiled_rhs():
    global _COMPILED_RHS
    if _COMPILED_RHS is None:
        _COMPILED_RHS = numba.njit(cache=True, nogil=True)(electric_rhs)
    return _COMPILED_RHS
