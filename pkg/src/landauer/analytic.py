"""
Closed-form reference values.

Written against ``math`` only so that it shares no code with the grid
numerics it is used to check.
"""

import math

from .errors import NonPositiveH, NonPositiveLength, NonPositiveSigma


def gaussian_entropy(sigma: float) -> float:
    """Differential entropy ``0.5 ln(2 pi e sigma^2)`` of a normal density, in nats."""
    if not sigma > 0:
        raise NonPositiveSigma(f"sigma must be positive, got {sigma}")
    return 0.5 * math.log(2.0 * math.pi * math.e) + math.log(sigma)


def uniform_entropy(length: float) -> float:
    if not length > 0:
        raise NonPositiveLength(f"length must be positive, got {length}")
    return math.log(length)


def min_uncertainty_sigma_p(sigma_x: float) -> float:
    """Momentum spread of a minimum-uncertainty Gaussian, ``1/(4 pi sigma_x)`` (h = 1)."""
    if not sigma_x > 0:
        raise NonPositiveSigma(f"sigma_x must be positive, got {sigma_x}")
    return 1.0 / (4.0 * math.pi * sigma_x)


def joint_bound(h_constant: float = 1.0) -> float:
    """Lower bound ``ln(h e / 2)`` on the joint position/momentum entropy."""
    if not h_constant > 0:
        raise NonPositiveH(f"h must be positive, got {h_constant}")
    return math.log(h_constant) + 1.0 - math.log(2.0)
