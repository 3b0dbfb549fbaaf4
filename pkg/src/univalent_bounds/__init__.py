"""Numerical verification of sharp bounds for a class of close-to-convex functions."""

from .bounds import (
    FeketeCoefficients,
    OmegaProblem,
    UnsupportedCase,
    distortion_bounds,
    fekete_szego_bound,
    growth_bounds,
    omega_closed_form,
    omega_coefficients,
    pre_schwarzian_bound,
    radius_of_convexity_constant,
)
from .classes import (
    ClassMember,
    StarlikeWitness,
    a2_a3_from_witness,
    build_member,
    build_starlike,
    fekete_functional,
    membership_margin,
)
from .grid import GridSpec, default_grid
from .power_series import TruncatedSeries
from .schwarz import SchwarzFunction, sample_random
from .verify import BoundReport, omega_brute_force

__version__ = "0.1.0"
