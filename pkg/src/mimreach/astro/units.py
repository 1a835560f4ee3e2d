"""Canonical heliocentric units.

Distance unit = 1 AU; time unit chosen so the Sun's gravitational
parameter is exactly 1 (one canonical time unit is about year/2pi).
All solver-internal state is nondimensional; masses stay in kg.
"""
import math

AU_M = 1.495978707e11            # astronomical unit (m)
MU_SUN_M3S2 = 1.32712440018e20   # heliocentric gravitational parameter (m^3/s^2)
G0_MS2 = 9.80665                 # standard gravity (m/s^2), exact by convention

TU_S = math.sqrt(AU_M**3 / MU_SUN_M3S2)   # canonical time unit (s), ~5.0226e6
VU_MS = AU_M / TU_S                       # canonical velocity (m/s), ~29.78 km/s
ACU_MS2 = AU_M / TU_S**2                  # canonical acceleration (m/s^2)

DAY_S = 86400.0
YEAR_S = 365.25 * DAY_S


def seconds_to_canonical(t_s):
    return t_s / TU_S


def canonical_to_seconds(t_tu):
    return t_tu * TU_S


def years_to_canonical(t_yr):
    return t_yr * YEAR_S / TU_S


def accel_to_canonical(a_ms2):
    return a_ms2 / ACU_MS2


def thrust_accel_canonical(t_max_n, mass_kg):
    """Thrust acceleration (canonical) of a thruster of t_max newton on mass_kg."""
    return (t_max_n / mass_kg) / ACU_MS2


def mass_flow_canonical(t_max_n, isp_s):
    """Propellant flow in kg per canonical time unit at full throttle."""
    return t_max_n / (isp_s * G0_MS2) * TU_S
