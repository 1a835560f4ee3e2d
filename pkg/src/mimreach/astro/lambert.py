"""Multi-revolution Lambert solver.

Lancaster-Blanchard formulation with Householder iterations on the
universal variable x, nondimensional time T = sqrt(2 mu / s^3) * tof.
Multi-rev families expose their two period branches, named by the
semi-major axis of the transfer ellipse ("low" = lower-energy = smaller
sma, "high" = larger sma).
"""
import math

import numpy as np


class LambertNoSolution(ValueError):
    """No transfer exists for the requested revolutions and time of flight."""


class DegenerateGeometry(ValueError):
    """r1 and r2 do not define a transfer plane."""


def _hypergeometric(z, tol=1e-11):
    sj, cj = 1.0, 1.0
    j = 0
    while True:
        cj = cj * (3.0 + j) * (1.0 + j) / (2.5 + j) * z / (j + 1.0)
        sj += cj
        if abs(cj) < tol:
            return sj
        j += 1
        if j > 10_000:
            raise RuntimeError("hypergeometric series did not converge")


def _x2tof(x, lam, m):
    """Nondimensional time of flight T(x) for given lambda and rev count."""
    battin = 0.01
    lagrange = 0.2
    dist = abs(x - 1.0)
    lam2 = lam * lam
    if battin < dist < lagrange:
        # Lagrange form
        a = 1.0 / (1.0 - x * x)
        if a > 0:
            alfa = 2.0 * math.acos(max(-1.0, min(1.0, x)))
            beta = 2.0 * math.asin(math.sqrt(lam2 / a))
            if lam < 0:
                beta = -beta
            return (a * math.sqrt(a)
                    * ((alfa - math.sin(alfa)) - (beta - math.sin(beta))
                       + 2.0 * math.pi * m)) / 2.0
        alfa = 2.0 * math.acosh(x)
        beta = 2.0 * math.asinh(math.sqrt(-lam2 / a))
        if lam < 0:
            beta = -beta
        return -a * math.sqrt(-a) * ((beta - math.sinh(beta))
                                     - (alfa - math.sinh(alfa))) / 2.0
    k = lam2
    e = x * x - 1.0
    rho = abs(e)
    z = math.sqrt(1.0 + k * e)
    if dist < battin:
        # Battin series, accurate near x = 1
        eta = z - lam * x
        s1 = 0.5 * (1.0 - lam - x * eta)
        q = _hypergeometric(s1) * 4.0 / 3.0
        return (eta ** 3 * q + 4.0 * lam * eta) / 2.0 \
            + m * math.pi / rho ** 1.5
    # Lancaster form
    y = math.sqrt(rho)
    g = x * z - lam * e
    if e < 0:
        l = math.acos(max(-1.0, min(1.0, g)))
        d = m * math.pi + l
    else:
        f = y * (z - lam * x)
        d = math.log(f + g)
    return (x - lam * z - d / y) / e


def _tof_derivatives(x, tof, lam):
    lam2 = lam * lam
    lam3 = lam2 * lam
    umx2 = 1.0 - x * x
    y = math.sqrt(1.0 - lam2 * umx2)
    dt = (3.0 * tof * x - 2.0 + 2.0 * lam3 * x / y) / umx2
    ddt = (3.0 * tof + 5.0 * x * dt + 2.0 * (1.0 - lam2) * lam3 / y ** 3) / umx2
    dddt = (7.0 * x * ddt + 8.0 * dt
            - 6.0 * (1.0 - lam2) * lam2 * lam3 * x / y ** 5) / umx2
    return dt, ddt, dddt


def _householder(t_target, x0, lam, m, tol=1e-13, max_iter=20):
    x = x0
    for _ in range(max_iter):
        tof = _x2tof(x, lam, m)
        dt, ddt, dddt = _tof_derivatives(x, tof, lam)
        delta = tof - t_target
        dt2 = dt * dt
        xnew = x - delta * (dt2 - delta * ddt / 2.0) \
            / (dt * (dt2 - delta * ddt) + dddt * delta * delta / 6.0)
        if abs(x - xnew) < tol:
            return xnew
        x = xnew
    return x


def _min_tof_multirev(lam, m, tol=1e-13, max_iter=30):
    """(x, T) at the minimum of the m-rev time curve (Halley on dT=0)."""
    x = 0.0
    t = _x2tof(x, lam, m)
    for _ in range(max_iter):
        dt, ddt, dddt = _tof_derivatives(x, t, lam)
        if dt != 0.0:
            xnew = x - dt * ddt / (ddt * ddt - dt * dddt / 2.0)
        else:
            return x, t
        if abs(x - xnew) < tol:
            x = xnew
            break
        x = xnew
        t = _x2tof(x, lam, m)
    return x, _x2tof(x, lam, m)


def _reconstruct_velocities(x, lam, r1, r2, rhat1, rhat2, that1, that2,
                            s, mu):
    r1n = np.linalg.norm(r1)
    r2n = np.linalg.norm(r2)
    cn = np.linalg.norm(r2 - r1)
    gamma = math.sqrt(mu * s / 2.0)
    if cn == 0.0:
        rho = 0.0
    else:
        rho = (r1n - r2n) / cn
    sigma = math.sqrt(max(0.0, 1.0 - rho * rho))
    y = math.sqrt(1.0 - lam * lam * (1.0 - x * x))

    vr1 = gamma * ((lam * y - x) - rho * (lam * y + x)) / r1n
    vr2 = -gamma * ((lam * y - x) + rho * (lam * y + x)) / r2n
    vt = gamma * sigma * (y + lam * x)
    v1 = vr1 * rhat1 + (vt / r1n) * that1
    v2 = vr2 * rhat2 + (vt / r2n) * that2
    return v1, v2


def lambert(r1, r2, tof, grav, revs: int = 0, branch: str = "low",
            normal=None):
    """Ballistic arc from r1 to r2 in time tof with ``revs`` full turns.

    The transfer runs prograde about ``normal`` (default +z); pass the
    departure orbit's angular-momentum direction to keep multi-rev arcs
    consistent with the orbital motion. For revs >= 1 the two period
    branches are selected with ``branch`` in {"low", "high"} (named by
    transfer-ellipse energy, i.e. semi-major axis).

    Returns (v1, v2).

    Raises:
        LambertNoSolution: tof below the revs-rev minimum.
        DegenerateGeometry: transfer plane undefined.
    """
    mu = grav.mu
    if tof <= 0:
        raise ValueError("tof must be positive")
    if revs < 0:
        raise ValueError("revs must be non-negative")
    branch = branch.split("-")[0]
    if branch not in ("low", "high"):
        raise ValueError("branch must be 'low(-energy)' or 'high(-energy)'")

    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    r1n = np.linalg.norm(r1)
    r2n = np.linalg.norm(r2)
    if r1n == 0.0 or r2n == 0.0:
        raise DegenerateGeometry("endpoint at the gravitational center")
    rhat1 = r1 / r1n
    rhat2 = r2 / r2n

    if normal is None:
        normal = np.array([0.0, 0.0, 1.0])
    else:
        normal = np.asarray(normal, dtype=float)
        normal = normal / np.linalg.norm(normal)

    cross = np.cross(r1, r2)
    crossn = np.linalg.norm(cross)
    if crossn <= 1e-12 * r1n * r2n:
        if np.dot(rhat1, rhat2) < 0:
            raise DegenerateGeometry("anti-parallel endpoints: plane undefined")
        return _same_ray_arc(r1, r2, tof, mu, revs, rhat1, normal)

    hdir = cross / crossn
    if np.dot(hdir, normal) < 0:
        hdir = -hdir
        short_way = False     # sweep about hdir exceeds pi
    else:
        short_way = True
    that1 = np.cross(hdir, rhat1)
    that2 = np.cross(hdir, rhat2)

    cn = np.linalg.norm(r2 - r1)
    s = 0.5 * (r1n + r2n + cn)
    lam = math.sqrt(max(0.0, 1.0 - cn / s))
    if not short_way:
        lam = -lam

    t_nd = math.sqrt(2.0 * mu / s ** 3) * tof

    if revs == 0:
        t00 = math.acos(lam) + lam * math.sqrt(1.0 - lam * lam)
        t1 = (2.0 / 3.0) * (1.0 - lam ** 3)
        if t_nd >= t00:
            x0 = (t00 / t_nd) ** (2.0 / 3.0) - 1.0
        elif t_nd <= t1:
            x0 = 2.5 * t1 * (t1 - t_nd) / ((1.0 - lam ** 5) * t_nd) + 1.0
        else:
            x0 = (t00 / t_nd) ** (math.log2(t1 / t00)) - 1.0
        x = _householder(t_nd, x0, lam, 0)
    else:
        _, t_min = _min_tof_multirev(lam, revs)
        if t_nd < t_min * (1.0 - 1e-12):
            raise LambertNoSolution(
                f"tof below the {revs}-rev minimum "
                f"(T={t_nd:.6g} < Tmin={t_min:.6g})")
        tmp = ((revs * math.pi + math.pi) / (8.0 * t_nd)) ** (2.0 / 3.0)
        x_left = (tmp - 1.0) / (tmp + 1.0)
        tmp = ((8.0 * t_nd) / (revs * math.pi)) ** (2.0 / 3.0)
        x_right = (tmp - 1.0) / (tmp + 1.0)
        xl = _householder(t_nd, x_left, lam, revs)
        xr = _householder(t_nd, x_right, lam, revs)
        # branch by transfer-ellipse sma: a = s / (2 (1 - x^2))
        a_l = s / (2.0 * (1.0 - xl * xl))
        a_r = s / (2.0 * (1.0 - xr * xr))
        if branch == "low":
            x = xl if a_l <= a_r else xr
        else:
            x = xl if a_l > a_r else xr

    v1, v2 = _reconstruct_velocities(x, lam, r1, r2, rhat1, rhat2,
                                     that1, that2, s, mu)
    return v1, v2


def _same_ray_arc(r1, r2, tof, mu, revs, rhat1, normal):
    """Degenerate r1 || r2 geometry: only the closed-orbit case is solvable."""
    if revs < 1:
        raise DegenerateGeometry(
            "parallel endpoints with zero revolutions: plane undefined")
    r1n = np.linalg.norm(r1)
    r2n = np.linalg.norm(r2)
    a_req = (mu * (tof / (2.0 * math.pi * revs)) ** 2) ** (1.0 / 3.0)
    if abs(r1n - r2n) > 1e-9 * r1n or abs(a_req - r1n) > 1e-6 * r1n:
        raise DegenerateGeometry(
            "parallel endpoints: no circular closed-orbit match")
    that = np.cross(normal, rhat1)
    tn = np.linalg.norm(that)
    if tn <= 1e-12:
        raise DegenerateGeometry("normal parallel to position")
    that = that / tn
    v = math.sqrt(mu / r1n) * that
    return v.copy(), v.copy()
