"""Orbital element sets and conversions (elliptic two-body).

Conventions: classical elements (a, e, i, raan, argp, true anomaly) with
angles stored in [0, 2pi); modified equinoctial elements (p, f, g, h, k, L)
with f = e*cos(argp+raan), g = e*sin(argp+raan), h = tan(i/2)*cos(raan),
k = tan(i/2)*sin(raan), L = raan + argp + nu.
"""
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_2pi(angle):
    """Reduce an angle to [0, 2pi)."""
    a = math.fmod(angle, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    return a


@dataclass(frozen=True)
class GravityModel:
    """Central-body gravitational parameter in canonical units."""
    mu: float = 1.0

    def __post_init__(self):
        if self.mu <= 0:
            raise ValueError("mu must be positive")


@dataclass(frozen=True)
class KeplerElements:
    sma: float            # semi-major axis
    ecc: float            # eccentricity, [0, 1)
    inc: float            # inclination (rad)
    raan: float           # right ascension of ascending node (rad)
    argp: float           # argument of periapsis (rad)
    true_anomaly: float   # rad

    def __post_init__(self):
        if self.sma <= 0:
            raise ValueError("sma must be positive")
        if not 0.0 <= self.ecc < 1.0:
            raise ValueError("ecc must lie in [0, 1)")

    def canonical(self) -> "KeplerElements":
        """Same orbit with all angles wrapped to [0, 2pi)."""
        return KeplerElements(self.sma, self.ecc, wrap_2pi(self.inc),
                              wrap_2pi(self.raan), wrap_2pi(self.argp),
                              wrap_2pi(self.true_anomaly))


@dataclass(frozen=True)
class CartesianState:
    position: np.ndarray
    velocity: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "position",
                           np.asarray(self.position, dtype=float))
        object.__setattr__(self, "velocity",
                           np.asarray(self.velocity, dtype=float))
        if np.linalg.norm(self.position) <= 0:
            raise ValueError("position norm must be positive")


@dataclass(frozen=True)
class MeeState:
    p: float
    f: float
    g: float
    h: float
    k: float
    L: float

    def __post_init__(self):
        if self.p <= 0:
            raise ValueError("semi-latus rectum must be positive")

    def as_array(self):
        return np.array([self.p, self.f, self.g, self.h, self.k, self.L])

    @staticmethod
    def from_array(x) -> "MeeState":
        return MeeState(float(x[0]), float(x[1]), float(x[2]),
                        float(x[3]), float(x[4]), float(x[5]))


def fold_inclination(inc, raan):
    """Fold an inclination sampled in [0, 2pi] into the geometric [0, pi].

    i -> pi - |pi - i|, shifting the node by pi whenever folding occurs.
    """
    i = wrap_2pi(inc)
    if i > math.pi:
        return TWO_PI - i, wrap_2pi(raan + math.pi)
    return i, wrap_2pi(raan)


def kepler_to_cartesian(el: KeplerElements, grav: GravityModel) -> CartesianState:
    """Position/velocity of an elliptic orbit at the stored true anomaly."""
    mu = grav.mu
    p = el.sma * (1.0 - el.ecc ** 2)
    cnu, snu = math.cos(el.true_anomaly), math.sin(el.true_anomaly)
    r = p / (1.0 + el.ecc * cnu)

    r_pf = np.array([r * cnu, r * snu, 0.0])
    v_pf = math.sqrt(mu / p) * np.array([-snu, el.ecc + cnu, 0.0])

    co, so = math.cos(el.raan), math.sin(el.raan)
    ci, si = math.cos(el.inc), math.sin(el.inc)
    cw, sw = math.cos(el.argp), math.sin(el.argp)
    rot = np.array([
        [co * cw - so * sw * ci, -co * sw - so * cw * ci, so * si],
        [so * cw + co * sw * ci, -so * sw + co * cw * ci, -co * si],
        [sw * si, cw * si, ci],
    ])
    return CartesianState(rot @ r_pf, rot @ v_pf)


def cartesian_to_kepler(state: CartesianState, grav: GravityModel,
                        tol: float = 1e-11) -> KeplerElements:
    """Classical elements of a bound, non-degenerate state.

    Raises ValueError for unbound (energy >= 0) or zero-angular-momentum
    input. Near-circular / near-equatorial degeneracies fall back to the
    usual conventions (argp or raan set to zero).
    """
    mu = grav.mu
    r = state.position
    v = state.velocity
    rn = np.linalg.norm(r)
    vn = np.linalg.norm(v)

    hvec = np.cross(r, v)
    hn = np.linalg.norm(hvec)
    if hn <= tol * rn * vn or hn == 0.0:
        raise ValueError("zero angular momentum: orbit plane undefined")

    energy = 0.5 * vn ** 2 - mu / rn
    if energy >= 0.0:
        raise ValueError("state is not a bound elliptic orbit")
    sma = -mu / (2.0 * energy)

    evec = np.cross(v, hvec) / mu - r / rn
    ecc = np.linalg.norm(evec)
    if ecc >= 1.0:
        raise ValueError("eccentricity >= 1: not elliptic")

    inc = math.acos(max(-1.0, min(1.0, hvec[2] / hn)))
    node = np.cross(np.array([0.0, 0.0, 1.0]), hvec)
    nn = np.linalg.norm(node)

    equatorial = nn <= tol * hn
    circular = ecc <= tol

    if equatorial:
        raan = 0.0
        node_dir = np.array([1.0, 0.0, 0.0])
    else:
        raan = wrap_2pi(math.atan2(node[1], node[0]))
        node_dir = node / nn

    if circular:
        argp = 0.0
        # anomaly measured from the node line (or x-axis if equatorial)
        cn = np.dot(node_dir, r) / rn
        sn = np.dot(np.cross(node_dir, r), hvec) / (rn * hn)
        nu = wrap_2pi(math.atan2(sn, cn))
    else:
        edir = evec / ecc
        ca = np.dot(node_dir, edir)
        sa = np.dot(np.cross(node_dir, edir), hvec) / hn
        argp = wrap_2pi(math.atan2(sa, ca))
        cnu = np.dot(edir, r) / rn
        snu = np.dot(np.cross(edir, r), hvec) / (rn * hn)
        nu = wrap_2pi(math.atan2(snu, cnu))

    return KeplerElements(sma, ecc, inc, raan, argp, nu)


def mee_from_kepler(el: KeplerElements) -> MeeState:
    p = el.sma * (1.0 - el.ecc ** 2)
    lon_peri = el.argp + el.raan
    ti2 = math.tan(el.inc / 2.0)
    return MeeState(p,
                    el.ecc * math.cos(lon_peri),
                    el.ecc * math.sin(lon_peri),
                    ti2 * math.cos(el.raan),
                    ti2 * math.sin(el.raan),
                    wrap_2pi(lon_peri + el.true_anomaly))


def kepler_from_mee(mee: MeeState) -> KeplerElements:
    ecc = math.hypot(mee.f, mee.g)
    sma = mee.p / (1.0 - ecc ** 2)
    ti2 = math.hypot(mee.h, mee.k)
    inc = 2.0 * math.atan(ti2)
    if ti2 > 0:
        raan = wrap_2pi(math.atan2(mee.k, mee.h))
    else:
        raan = 0.0
    if ecc > 0:
        lon_peri = math.atan2(mee.g, mee.f)
        argp = wrap_2pi(lon_peri - raan)
    else:
        lon_peri = 0.0
        argp = 0.0
    nu = wrap_2pi(mee.L - lon_peri)
    return KeplerElements(sma, ecc, inc, raan, argp, nu)


def mee_from_cartesian(state: CartesianState, grav: GravityModel) -> MeeState:
    """Modified equinoctial elements of a Cartesian state.

    Raises ValueError at the retrograde singularity (inclination pi).
    """
    mu = grav.mu
    r = state.position
    v = state.velocity
    rn = np.linalg.norm(r)

    hvec = np.cross(r, v)
    hn = np.linalg.norm(hvec)
    if hn == 0.0:
        raise ValueError("zero angular momentum: orbit plane undefined")
    hdir = hvec / hn

    denom = 1.0 + hdir[2]
    if denom <= 1e-12:
        raise ValueError(
            "retrograde singularity: inclination = pi is not representable "
            "in (p, f, g, h, k, L) equinoctial elements")
    h = -hdir[1] / denom
    k = hdir[0] / denom

    p = hn ** 2 / mu
    evec = np.cross(v, hvec) / mu - r / rn

    s2 = 1.0 + h ** 2 + k ** 2
    fhat = np.array([1.0 - k ** 2 + h ** 2, 2.0 * h * k, -2.0 * k]) / s2
    ghat = np.array([2.0 * h * k, 1.0 + k ** 2 - h ** 2, 2.0 * h]) / s2

    f = float(np.dot(evec, fhat))
    g = float(np.dot(evec, ghat))
    L = wrap_2pi(math.atan2(float(np.dot(r, ghat)), float(np.dot(r, fhat))))
    return MeeState(p, f, g, h, k, L)


def mee_to_cartesian(mee: MeeState, grav: GravityModel) -> CartesianState:
    mu = grav.mu
    p, f, g, h, k, L = mee.p, mee.f, mee.g, mee.h, mee.k, mee.L
    cl, sl = math.cos(L), math.sin(L)
    s2 = 1.0 + h ** 2 + k ** 2
    a2 = h ** 2 - k ** 2
    w = 1.0 + f * cl + g * sl
    if w <= 0:
        raise ValueError("non-elliptic branch: 1 + f cosL + g sinL <= 0")
    r = p / w
    sqmp = math.sqrt(mu / p)

    pos = np.array([
        (r / s2) * (cl + a2 * cl + 2.0 * h * k * sl),
        (r / s2) * (sl - a2 * sl + 2.0 * h * k * cl),
        (2.0 * r / s2) * (h * sl - k * cl),
    ])
    vel = np.array([
        -(sqmp / s2) * (sl + a2 * sl - 2.0 * h * k * cl + g
                        - 2.0 * f * h * k + a2 * g),
        -(sqmp / s2) * (-cl + a2 * cl + 2.0 * h * k * sl - f
                        + 2.0 * g * h * k + a2 * f),
        (2.0 * sqmp / s2) * (h * cl + k * sl + f * h + g * k),
    ])
    return CartesianState(pos, vel)


def propagate_kepler(state: CartesianState, dt: float,
                     grav: GravityModel, tol: float = 1e-14,
                     max_iter: int = 60) -> CartesianState:
    """Ballistic propagation of a bound orbit by dt (either sign).

    Lagrange f-and-g solution through the eccentric-anomaly difference;
    the generalized Kepler equation is solved by safeguarded Newton.
    """
    mu = grav.mu
    r0 = state.position
    v0 = state.velocity
    rn0 = np.linalg.norm(r0)
    energy = 0.5 * np.dot(v0, v0) - mu / rn0
    if energy >= 0.0:
        raise ValueError("propagate_kepler requires a bound orbit")
    if dt == 0.0:
        return CartesianState(r0.copy(), v0.copy())

    a = -mu / (2.0 * energy)
    n = math.sqrt(mu / a ** 3)
    ecos0 = 1.0 - rn0 / a
    esin0 = float(np.dot(r0, v0)) / math.sqrt(mu * a)

    m = n * dt

    def geq(de):
        return de - ecos0 * math.sin(de) + esin0 * (1.0 - math.cos(de)) - m

    # F is monotone increasing (F' = 1 - e*cos(E1) >= 1 - e > 0)
    e_amp = math.hypot(ecos0, esin0)
    lo, hi = m - e_amp - 1.0, m + e_amp + 1.0
    de = m
    ok = False
    for _ in range(max_iter):
        fval = geq(de)
        if abs(fval) < tol * max(1.0, abs(m)):
            ok = True
            break
        if fval > 0:
            hi = de
        else:
            lo = de
        dprime = 1.0 - ecos0 * math.cos(de) + esin0 * math.sin(de)
        step = fval / dprime
        de_new = de - step
        if not lo < de_new < hi:
            de_new = 0.5 * (lo + hi)
        de = de_new
    if not ok:
        raise RuntimeError(
            f"Kepler iteration did not converge: residual {geq(de):.3e}")

    cde, sde = math.cos(de), math.sin(de)
    rn1 = a * (1.0 - (ecos0 * cde - esin0 * sde))
    fl = 1.0 - (a / rn0) * (1.0 - cde)
    gl = dt + (sde - de) / n
    fdot = -math.sqrt(mu * a) * sde / (rn1 * rn0)
    gdot = 1.0 - (a / rn1) * (1.0 - cde)

    r1 = fl * r0 + gl * v0
    v1 = fdot * r0 + gdot * v0
    return CartesianState(r1, v1)


def orbital_period(sma: float, grav: GravityModel) -> float:
    return TWO_PI * math.sqrt(sma ** 3 / grav.mu)


def specific_energy(state: CartesianState, grav: GravityModel) -> float:
    return 0.5 * float(np.dot(state.velocity, state.velocity)) \
        - grav.mu / float(np.linalg.norm(state.position))
