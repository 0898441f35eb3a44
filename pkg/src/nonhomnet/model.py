"""Network geometry, node sampling, and the limiting scaled-power distribution.

A circular network of radius R holds n nodes drawn from a radial power-law
intensity rho * r^epsilon. After scaling interferer powers by R^alpha the
empirical power distribution converges to a Pareto-type law H(x) on [1, inf).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidParameter, ZeroRadiusNode


@dataclass(frozen=True)
class PowerLawIntensity:
    """Node intensity rho * r^epsilon (nodes per unit area at radius r)."""

    rho: float
    epsilon: float

    def __post_init__(self):
        if not self.rho > 0:
            raise InvalidParameter(f"rho={self.rho} must be positive")
        if not self.epsilon > -2:
            raise InvalidParameter(f"epsilon={self.epsilon} must exceed -2")


def radius_for_count(intensity: PowerLawIntensity, n: float) -> float:
    """Disk radius holding n expected nodes: ((2+eps) n / (2 pi rho))^(1/(2+eps))."""
    if n < 1:
        raise InvalidParameter(f"n={n} must be >= 1")
    e = intensity.epsilon
    return ((2.0 + e) * n / (2.0 * math.pi * intensity.rho)) ** (1.0 / (2.0 + e))


def count_for_radius(intensity: PowerLawIntensity, radius: float) -> float:
    """Expected node count in a disk of the given radius (inverse of radius_for_count)."""
    if radius < 0:
        raise InvalidParameter(f"radius={radius} must be non-negative")
    e = intensity.epsilon
    return 2.0 * math.pi * intensity.rho / (2.0 + e) * radius ** (2.0 + e)


@dataclass(frozen=True)
class NetworkGeometry:
    """A disk radius, node count, and the intensity tying them together."""

    n_nodes: int
    radius: float
    intensity: PowerLawIntensity

    @classmethod
    def from_count(cls, intensity: PowerLawIntensity, n: int) -> "NetworkGeometry":
        return cls(n_nodes=n, radius=radius_for_count(intensity, n), intensity=intensity)

    @classmethod
    def from_radius(cls, intensity: PowerLawIntensity, radius: float) -> "NetworkGeometry":
        # n rounds to nearest integer; radius is kept exact
        return cls(n_nodes=int(round(count_for_radius(intensity, radius))),
                   radius=radius, intensity=intensity)


@dataclass(frozen=True)
class NodeSet:
    """Polar coordinates of sampled interferers."""

    radii: np.ndarray
    angles: np.ndarray


def sample_nodes(geometry: NetworkGeometry, rng: np.random.Generator) -> NodeSet:
    """Draw node locations: radial density proportional to r^(epsilon+1), uniform angles.

    Inverse-CDF sampling r = R * U^(1/(2+eps)) with U uniform on (0, 1],
    which excludes the degenerate r = 0 draw.
    """
    n = geometry.n_nodes
    e = geometry.intensity.epsilon
    u = 1.0 - rng.random(n)  # (0, 1]
    radii = geometry.radius * u ** (1.0 / (2.0 + e))
    angles = 2.0 * math.pi * (1.0 - rng.random(n))  # (0, 2*pi]
    return NodeSet(radii=radii, angles=angles)


class ScaledPowerDistribution:
    """Limiting CDF H(x) of interferer powers scaled by R^alpha; support [1, inf)."""

    support_lower: float

    def cdf(self, x: float) -> float:
        raise NotImplementedError

    def density(self, x: float) -> float:
        raise NotImplementedError


@dataclass(frozen=True)
class PowerLawScaledPowers(ScaledPowerDistribution):
    """H(x) = 1 - x^(-(2+eps)/alpha) on x >= 1, the power-law intensity limit."""

    alpha: float
    epsilon: float
    support_lower: float = field(default=1.0, init=False)

    def __post_init__(self):
        if not self.alpha > 2:
            raise InvalidParameter(f"alpha={self.alpha} must exceed 2")
        if not self.epsilon > -2:
            raise InvalidParameter(f"epsilon={self.epsilon} must exceed -2")

    def cdf(self, x: float) -> float:
        if x < 1.0:
            return 0.0
        return 1.0 - x ** (-(2.0 + self.epsilon) / self.alpha)

    def density(self, x: float) -> float:
        if x <= 1.0:
            return 0.0
        e, a = self.epsilon, self.alpha
        return (2.0 + e) / a * x ** (-(2.0 + e + a) / a)


@dataclass(frozen=True)
class GeneralScaledPowers(ScaledPowerDistribution):
    """Caller-supplied limiting distribution (CDF, density, support edge)."""

    cdf_fn: Callable[[float], float]
    density_fn: Callable[[float], float]
    support_lower: float = 1.0

    def __post_init__(self):
        if self.support_lower < 1.0:
            raise InvalidParameter("support_lower must be >= 1")

    def cdf(self, x: float) -> float:
        if x < self.support_lower:
            return 0.0
        return self.cdf_fn(x)

    def density(self, x: float) -> float:
        if x < self.support_lower:
            return 0.0
        return self.density_fn(x)


def scaled_power_cdf(dist: ScaledPowerDistribution, x: float) -> float:
    """Evaluate H(x); zero below the support edge."""
    if x < 0:
        raise InvalidParameter(f"x={x} must be non-negative")
    return dist.cdf(x)


def empirical_scaled_powers(nodes: NodeSet, radius: float, alpha: float) -> np.ndarray:
    """Scaled interferer powers (r_i / R)^(-alpha); diagnostics against H(x)."""
    if not alpha > 2:
        raise InvalidParameter(f"alpha={alpha} must exceed 2")
    if np.any(nodes.radii == 0.0):
        raise ZeroRadiusNode("node drawn at radius zero")
    return (nodes.radii / radius) ** (-alpha)
