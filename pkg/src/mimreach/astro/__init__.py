"""Orbital-mechanics primitives: elements, propagation, Lambert, frames, units."""
from . import units
from .elements import (GravityModel, KeplerElements, CartesianState, MeeState,
                       wrap_2pi, fold_inclination, kepler_to_cartesian,
                       cartesian_to_kepler, mee_from_kepler, kepler_from_mee,
                       mee_from_cartesian, mee_to_cartesian, propagate_kepler,
                       orbital_period, specific_energy)
from .frames import rtn_basis
from .lambert import lambert, LambertNoSolution, DegenerateGeometry

__all__ = [
    "units", "GravityModel", "KeplerElements", "CartesianState", "MeeState",
    "wrap_2pi", "fold_inclination", "kepler_to_cartesian",
    "cartesian_to_kepler", "mee_from_kepler", "kepler_from_mee",
    "mee_from_cartesian", "mee_to_cartesian", "propagate_kepler",
    "orbital_period", "specific_energy", "rtn_basis", "lambert",
    "LambertNoSolution", "DegenerateGeometry",
]
