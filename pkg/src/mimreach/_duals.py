"""Forward-mode dual-number arithmetic on fixed-width tuples.

A dual carries a value and a fixed number of partial derivatives as a
flat tuple (v, d1, ..., dn). Tuples stay in registers under numba's
nopython mode, so the Hamiltonian gradient evaluations inside the
integration hot loops cost no heap traffic. Two widths are provided:
six partials (equinoctial-element Hamiltonians) and three (position
gradients of the sail Hamiltonian).

Validated against central finite differences in the solver test suites.
"""
import math

import numba

_inline = numba.njit(inline="always", cache=True)


# ---------------------------------------------------------------- width 6

@_inline
def d6_con(c):
    return (c, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)


@_inline
def d6_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3],
            a[4] + b[4], a[5] + b[5], a[6] + b[6])


@_inline
def d6_sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3],
            a[4] - b[4], a[5] - b[5], a[6] - b[6])


@_inline
def d6_mul(a, b):
    return (a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[2] * b[0],
            a[0] * b[3] + a[3] * b[0],
            a[0] * b[4] + a[4] * b[0],
            a[0] * b[5] + a[5] * b[0],
            a[0] * b[6] + a[6] * b[0])


@_inline
def d6_div(a, b):
    v = a[0] / b[0]
    inv = 1.0 / b[0]
    return (v,
            (a[1] - v * b[1]) * inv,
            (a[2] - v * b[2]) * inv,
            (a[3] - v * b[3]) * inv,
            (a[4] - v * b[4]) * inv,
            (a[5] - v * b[5]) * inv,
            (a[6] - v * b[6]) * inv)


@_inline
def d6_smul(c, a):
    return (c * a[0], c * a[1], c * a[2], c * a[3],
            c * a[4], c * a[5], c * a[6])


@_inline
def d6_sadd(c, a):
    return (c + a[0], a[1], a[2], a[3], a[4], a[5], a[6])


@_inline
def d6_sqrt(a):
    v = math.sqrt(a[0])
    half = 0.5 / v
    return (v, half * a[1], half * a[2], half * a[3],
            half * a[4], half * a[5], half * a[6])


@_inline
def d6_sin(a):
    s, c = math.sin(a[0]), math.cos(a[0])
    return (s, c * a[1], c * a[2], c * a[3], c * a[4], c * a[5], c * a[6])


@_inline
def d6_cos(a):
    s, c = math.sin(a[0]), math.cos(a[0])
    return (c, -s * a[1], -s * a[2], -s * a[3],
            -s * a[4], -s * a[5], -s * a[6])


# ---------------------------------------------------------------- width 3

@_inline
def d3_con(c):
    return (c, 0.0, 0.0, 0.0)


@_inline
def d3_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


@_inline
def d3_sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])


@_inline
def d3_mul(a, b):
    return (a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[2] * b[0],
            a[0] * b[3] + a[3] * b[0])


@_inline
def d3_div(a, b):
    v = a[0] / b[0]
    inv = 1.0 / b[0]
    return (v,
            (a[1] - v * b[1]) * inv,
            (a[2] - v * b[2]) * inv,
            (a[3] - v * b[3]) * inv)


@_inline
def d3_smul(c, a):
    return (c * a[0], c * a[1], c * a[2], c * a[3])


@_inline
def d3_sqrt(a):
    v = math.sqrt(a[0])
    half = 0.5 / v
    return (v, half * a[1], half * a[2], half * a[3])
