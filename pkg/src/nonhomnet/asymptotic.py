"""Asymptotic SINR predictions: the fixed-point equation, its power-law closed
form, and the large-N approximation chain.

The normalized asymptotic SINR beta solves

    1 - beta * sigma2 = beta * c * integral( x dH(x) / (1 + x beta) )

with H the limiting scaled-power distribution. For power-law intensities the
integral collapses to a cosecant term plus a Gauss hypergeometric term, which
also yields the closed-form large-N approximations for SINR, spectral
efficiency, and the antenna count needed to hit a target spectral efficiency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from scipy.integrate import quad

from .errors import (
    BracketFailure,
    DomainError,
    InvalidParameter,
    PoleError,
    QuadratureFailure,
)
from .model import PowerLawIntensity, PowerLawScaledPowers, ScaledPowerDistribution, radius_for_count
from .specfun import DEFAULT_CONTROL, SeriesControl, hyp2f1, pi_csc

_MAX_BRACKET = 2.0**60
_REL_WIDTH = 1e-13
_DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class FixedPointProblem:
    """Inputs to the fixed-point equation: load ratio c, noise sigma2, power law H."""

    c: float
    sigma2: float
    dist: ScaledPowerDistribution

    def __post_init__(self):
        if self.c < 0 or self.sigma2 < 0:
            raise InvalidParameter("c and sigma2 must be non-negative")
        if self.c == 0 and self.sigma2 == 0:
            raise InvalidParameter("c and sigma2 cannot both be zero")


@dataclass(frozen=True)
class AsymptoticSolution:
    """Solver output: normalized SINR beta and, for power laws, eta = c^(alpha/(2+eps)) beta."""

    beta: float
    eta: Optional[float]
    residual: float
    iterations: int
    c: float


@dataclass(frozen=True)
class LinkParameters:
    """Target link length and path-loss exponent."""

    r_t: float
    alpha: float

    def __post_init__(self):
        if not self.r_t > 0:
            raise InvalidParameter(f"r_t={self.r_t} must be positive")
        if not self.alpha > 2:
            raise InvalidParameter(f"alpha={self.alpha} must exceed 2")


_POWER_FLATTEN = 16


def _tail_integral(dist: ScaledPowerDistribution, beta: float, tol: float) -> float:
    """integral over [L, inf) of x h(x)/(1 + x beta) dx.

    Substituting u = 1/x maps the tail onto (0, 1/L]; a further power
    transform u = u_max s^16 flattens the algebraic endpoint singularity the
    heavy-tailed densities produce, and the denominator knee at u ~ beta is
    passed to the integrator as a breakpoint.
    """
    u_max = 1.0 / dist.support_lower
    q = _POWER_FLATTEN

    def integrand(s: float) -> float:
        u = u_max * s**q
        if u == 0.0:
            return 0.0
        return dist.density(1.0 / u) / (u * u * (u + beta)) * u_max * q * s ** (q - 1)

    points = None
    if 0.0 < beta < u_max:
        points = [(beta / u_max) ** (1.0 / q)]
    value, abserr = quad(integrand, 0.0, 1.0, points=points,
                         epsabs=1e-300, epsrel=1e-11, limit=500)
    if abserr > tol / 10.0 * max(abs(value), 1.0):
        raise QuadratureFailure(
            f"tail integral error {abserr} exceeds budget at beta={beta}"
        )
    return value


def _check_finite_root(c: float, sigma2: float) -> None:
    # sup over beta of beta*c*integral(x dH/(1+x beta)) is c, so without noise
    # the residual never crosses zero for c <= 1 (beta diverges)
    if sigma2 == 0.0 and c <= 1.0:
        raise BracketFailure(
            f"no finite solution: sigma2=0 with c={c} <= 1 (noise-free, "
            "underloaded receiver has unbounded normalized SINR)")


def _bisect(residual_fn, tol: float) -> tuple[float, float, int]:
    """Bisection on a strictly decreasing residual with f(0) = 1 > 0."""
    lo, hi = 0.0, 1.0
    iters = 0
    while residual_fn(hi) > 0.0:
        lo = hi
        hi *= 2.0
        iters += 1
        if hi > _MAX_BRACKET:
            raise BracketFailure("no sign change below 2^60; degenerate problem")
    while hi - lo > _REL_WIDTH * hi and iters < 300:
        mid = 0.5 * (lo + hi)
        if residual_fn(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
        iters += 1
    beta = 0.5 * (lo + hi)
    return beta, residual_fn(beta), iters


def solve_general(problem: FixedPointProblem, tol: float = 1e-10) -> AsymptoticSolution:
    """Solve the fixed-point equation by quadrature plus bisection.

    Works for any supplied scaled-power distribution; this is the fallback
    route when the closed form degenerates (alpha near 2+epsilon).
    """
    _check_finite_root(problem.c, problem.sigma2)

    def residual(beta: float) -> float:
        if beta == 0.0:
            return 1.0
        return 1.0 - beta * problem.sigma2 - beta * problem.c * _tail_integral(
            problem.dist, beta, tol)

    beta, res, iters = _bisect(residual, tol)
    eta = None
    if isinstance(problem.dist, PowerLawScaledPowers) and problem.c > 0:
        d = problem.dist
        eta = problem.c ** (d.alpha / (2.0 + d.epsilon)) * beta
    return AsymptoticSolution(beta=beta, eta=eta, residual=res, iterations=iters,
                              c=problem.c)


def solve_power_law(alpha: float, epsilon: float, c: float, sigma2: float,
                    tol: float = 1e-10,
                    ctl: SeriesControl = DEFAULT_CONTROL) -> AsymptoticSolution:
    """Solve the power-law closed form: cosecant term minus hypergeometric term.

    Requires alpha > 2 + epsilon; at or below that the closed form degenerates
    and callers should fall back to solve_general.
    """
    if not alpha > 2:
        raise InvalidParameter(f"alpha={alpha} must exceed 2")
    if not epsilon > -2:
        raise InvalidParameter(f"epsilon={epsilon} must exceed -2")
    if not c > 0:
        raise InvalidParameter(f"c={c} must be positive")
    gap = alpha - 2.0 - epsilon
    if abs(gap) < _DEGENERACY_TOL:
        raise PoleError(f"alpha={alpha} within 1e-9 of 2+epsilon={2 + epsilon}")
    if gap < 0:
        raise DomainError(
            f"alpha={alpha} <= 2+epsilon={2 + epsilon}: closed form not valid, "
            "use solve_general")
    _check_finite_root(c, sigma2)

    csc = pi_csc(alpha, epsilon)
    e_ratio = (2.0 + epsilon) / alpha
    b = gap / alpha
    cc = (2.0 * alpha - 2.0 - epsilon) / alpha

    def residual(beta: float) -> float:
        if beta == 0.0:
            return 1.0
        rhs = (e_ratio * c * beta ** e_ratio * csc
               - (2.0 + epsilon) * beta * c / gap * hyp2f1(1.0, b, cc, -beta, ctl))
        return 1.0 - beta * sigma2 - rhs

    beta, res, iters = _bisect(residual, tol)
    eta = c ** (alpha / (2.0 + epsilon)) * beta
    return AsymptoticSolution(beta=beta, eta=eta, residual=res, iterations=iters, c=c)


def sinr_from_beta(sol: AsymptoticSolution, link: LinkParameters,
                   intensity: PowerLawIntensity, n_antennas: int) -> float:
    """De-normalize beta into a predicted SINR: r_T^(-alpha) beta R^alpha."""
    if n_antennas < 1:
        raise InvalidParameter("n_antennas must be >= 1")
    n = round(n_antennas * sol.c)
    radius = radius_for_count(intensity, n)
    return link.r_t ** (-link.alpha) * sol.beta * radius ** link.alpha


def sinr_approx(link: LinkParameters, epsilon: float, rho: float,
                n_antennas: float) -> float:
    """Large-N closed-form SINR approximation for power-law intensities."""
    alpha = link.alpha
    if not alpha > 2.0 + epsilon:
        raise DomainError(f"approximation needs alpha > 2+epsilon, got {alpha} vs {2 + epsilon}")
    if not rho > 0:
        raise InvalidParameter(f"rho={rho} must be positive")
    if n_antennas < 0:
        raise InvalidParameter("n_antennas must be non-negative")
    s = math.sin(math.pi * (2.0 + epsilon) / alpha)
    base = alpha / (2.0 * math.pi ** 2) * s
    return link.r_t ** (-alpha) * (base * n_antennas / rho) ** (alpha / (2.0 + epsilon))


def spec_eff_approx(link: LinkParameters, epsilon: float, rho: float,
                    n_antennas: float) -> float:
    """Spectral efficiency (bits/s/Hz) under the large-N SINR approximation."""
    return math.log2(1.0 + sinr_approx(link, epsilon, rho, n_antennas))


def antennas_required(gamma_target: float, link: LinkParameters, epsilon: float,
                      rho: float) -> float:
    """Real-valued antenna count achieving a target spectral efficiency.

    Algebraic inverse of spec_eff_approx; callers round up to an integer.
    """
    if not gamma_target > 0:
        raise InvalidParameter(f"gamma_target={gamma_target} must be positive")
    alpha = link.alpha
    if not alpha > 2.0 + epsilon:
        raise DomainError(f"planner needs alpha > 2+epsilon, got {alpha} vs {2 + epsilon}")
    csc = pi_csc(alpha, epsilon)
    return (rho * link.r_t ** (2.0 + epsilon)
            * (2.0 ** gamma_target - 1.0) ** ((2.0 + epsilon) / alpha)
            * 2.0 * math.pi * csc / alpha)
