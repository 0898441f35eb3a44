"""SINR and spectral efficiency of multi-antenna MMSE links in non-homogeneous
wireless networks: Monte Carlo simulation plus asymptotic predictions."""

__version__ = "0.1.0"

from .asymptotic import (
    AsymptoticSolution,
    FixedPointProblem,
    LinkParameters,
    antennas_required,
    sinr_approx,
    sinr_from_beta,
    solve_general,
    solve_power_law,
    spec_eff_approx,
)
from .model import (
    GeneralScaledPowers,
    NetworkGeometry,
    NodeSet,
    PowerLawIntensity,
    PowerLawScaledPowers,
    count_for_radius,
    empirical_scaled_powers,
    radius_for_count,
    sample_nodes,
    scaled_power_cdf,
)
from .simulate import (
    ChannelModel,
    SimConfig,
    SweepSummary,
    TrialResult,
    interference_covariance,
    mmse_sinr,
    run_sweep,
    run_trial,
)
from .specfun import SeriesControl, hyp2f1, pi_csc

__all__ = [
    "AsymptoticSolution",
    "ChannelModel",
    "FixedPointProblem",
    "GeneralScaledPowers",
    "LinkParameters",
    "NetworkGeometry",
    "NodeSet",
    "PowerLawIntensity",
    "PowerLawScaledPowers",
    "SeriesControl",
    "SimConfig",
    "SweepSummary",
    "TrialResult",
    "antennas_required",
    "count_for_radius",
    "empirical_scaled_powers",
    "hyp2f1",
    "interference_covariance",
    "mmse_sinr",
    "pi_csc",
    "radius_for_count",
    "run_sweep",
    "run_trial",
    "sample_nodes",
    "scaled_power_cdf",
    "sinr_approx",
    "sinr_from_beta",
    "solve_general",
    "solve_power_law",
    "spec_eff_approx",
]
