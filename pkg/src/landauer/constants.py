"""SI constants (exact values of the 2019 SI redefinition) and numerical tolerances."""

import math

PLANCK_H = 6.62607015e-34  # J s
BOLTZMANN_K = 1.380649e-23  # J / K

# Entropic uncertainty bound in units with h = 1: ln(e/2) = 1 - ln 2.
JOINT_BOUND_H1 = 1.0 - math.log(2.0)

# Absolute slack for declaring the joint-information bound satisfied.
BOUND_TOLERANCE = 1e-6

NORMALIZATION_TOL = 1e-10
DENSITY_NORMALIZATION_TOL = 1e-8
TAIL_FRACTION = 0.05
TAIL_MASS_TOL = 1e-9
