"""Real-valued special functions: Gauss hypergeometric series and the cosecant prefactor.

Only the parameter families reachable from the power-law closed form are
hardened: z <= 0 (routed through the Pfaff transform) and 0 <= z < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameter, NonConvergence, PoleError

_POLE_TOL = 1e-12


@dataclass(frozen=True)
class SeriesControl:
    """Truncation control for the hypergeometric series."""

    rel_tolerance: float = 1e-12
    max_terms: int = 10**6

    def __post_init__(self):
        if not self.rel_tolerance > 0:
            raise InvalidParameter("rel_tolerance must be positive")
        if self.max_terms < 1:
            raise InvalidParameter("max_terms must be >= 1")


DEFAULT_CONTROL = SeriesControl()


def _series(a: float, b: float, c: float, z: float, ctl: SeriesControl) -> float:
    # direct Gauss series, valid for 0 <= z < 1
    term = 1.0
    total = 1.0
    for k in range(ctl.max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        total += term
        if abs(term) <= ctl.rel_tolerance * abs(total):
            return total
    raise NonConvergence(
        f"hypergeometric series did not converge in {ctl.max_terms} terms (z={z})"
    )


def hyp2f1(a: float, b: float, c: float, z: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.

    Negative arguments are evaluated through the Pfaff transform
    2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)), whose transformed
    argument lies in [0, 1).
    """
    if c <= 0 and c == math.floor(c):
        raise InvalidParameter(f"c={c} is a non-positive integer")
    if z >= 1:
        raise InvalidParameter(f"argument z={z} outside supported range z < 1")
    if z == 0.0:
        return 1.0
    if z < 0:
        w = z / (z - 1.0)  # in (0, 1)
        return (1.0 - z) ** (-a) * _series(a, c - b, c, w, ctl)
    return _series(a, b, c, z, ctl)


def pi_csc(alpha: float, epsilon: float) -> float:
    """pi * csc(pi (2+epsilon)/alpha), the power-law tail-integral prefactor."""
    if not alpha > 2:
        raise InvalidParameter(f"alpha={alpha} must exceed 2")
    if not epsilon > -2:
        raise InvalidParameter(f"epsilon={epsilon} must exceed -2")
    ratio = (2.0 + epsilon) / alpha
    if abs(ratio - round(ratio)) < _POLE_TOL:
        raise PoleError(f"csc pole: (2+epsilon)/alpha = {ratio} is an integer")
    return math.pi / math.sin(math.pi * ratio)
