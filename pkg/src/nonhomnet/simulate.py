"""Monte Carlo engine: sample a network, draw channels, and compute the exact
linear-MMSE SINR quadratic form per trial.

Noise is a constant absolute power (interference-limited regime), so the
asymptotic comparison column uses the noise-free approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve, solve_triangular

from .errors import DimensionMismatch, FactorizationFailure, InvalidParameter
from .asymptotic import LinkParameters, spec_eff_approx
from .model import NetworkGeometry, NodeSet, PowerLawIntensity, sample_nodes
from .streams import PURPOSE_TRIAL, derive_stream

CHANNEL_LAWS = ("gaussian", "qpsk")


@dataclass(frozen=True)
class ChannelModel:
    """IID zero-mean unit-variance complex channel entries."""

    entry_law: str = "gaussian"

    def __post_init__(self):
        if self.entry_law not in CHANNEL_LAWS:
            raise InvalidParameter(f"unknown channel law {self.entry_law!r}")

    def draw(self, rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
        if self.entry_law == "gaussian":
            return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)
        # qpsk: entries (+-1 +- 1j)/sqrt(2)
        re = rng.integers(0, 2, size=shape) * 2 - 1
        im = rng.integers(0, 2, size=shape) * 2 - 1
        return (re + 1j * im) / math.sqrt(2.0)


@dataclass(frozen=True)
class SimConfig:
    """One simulation setup: geometry, link, array size, noise, RNG provenance."""

    intensity: PowerLawIntensity
    link: LinkParameters
    n_nodes: int
    antennas: int
    noise_power: float
    channel: ChannelModel = field(default_factory=ChannelModel)
    master_seed: int = 0
    trials: int = 1

    def __post_init__(self):
        if self.n_nodes < 0:
            raise InvalidParameter("n_nodes must be non-negative")
        if self.antennas < 1:
            raise InvalidParameter("antennas must be >= 1")
        if not self.noise_power > 0:
            raise InvalidParameter("noise_power must be positive")
        if self.trials < 1:
            raise InvalidParameter("trials must be >= 1")


@dataclass(frozen=True)
class TrialResult:
    """One realization of the MMSE SINR and its normalizations."""

    sinr: float
    beta_n: float
    eta_n: float
    spec_eff: float
    trial_index: int


@dataclass(frozen=True)
class SweepRow:
    """Aggregate statistics at one antenna count."""

    antennas: int
    mean_spec_eff: float
    std_spec_eff: float
    mean_eta: float
    std_eta: float
    q05: float
    q50: float
    q95: float
    asymptotic_spec_eff: float
    rel_error: float


@dataclass(frozen=True)
class SweepSummary:
    rows: tuple[SweepRow, ...]


def interference_covariance(nodes: NodeSet, channels: np.ndarray, alpha: float,
                            noise_power: float) -> np.ndarray:
    """Sum of r_i^(-alpha) h_i h_i^H plus noise_power * I (Hermitian PD)."""
    if not noise_power > 0:
        raise InvalidParameter("noise_power must be positive")
    n_ant, n_int = channels.shape
    if n_int != len(nodes.radii):
        raise DimensionMismatch(
            f"channel columns {n_int} != node count {len(nodes.radii)}")
    powers = nodes.radii ** (-alpha)
    cov = (channels * powers) @ channels.conj().T
    cov += noise_power * np.eye(n_ant)
    return 0.5 * (cov + cov.conj().T)


def mmse_sinr(target_channel: np.ndarray, target_power: float,
              covariance: np.ndarray) -> float:
    """target_power * h^H C^(-1) h via Cholesky factorization and triangular solves."""
    if not target_power > 0:
        raise InvalidParameter("target_power must be positive")
    try:
        factor = cho_factor(covariance, lower=True)
    except LinAlgError as exc:
        raise FactorizationFailure("covariance not positive definite") from exc
    solved = cho_solve(factor, target_channel)
    return float(target_power * np.real(np.vdot(target_channel, solved)))


def mmse_sinr_from_factor(target_channel: np.ndarray, target_power: float,
                          factor: np.ndarray) -> float:
    """MMSE SINR from a square-root factor A with C = A A^H.

    QR of A^H gives C = R^H R without ever forming C, halving the condition
    exponent; needed because near-origin nodes (legitimate draws for
    epsilon < 0) can push C's condition number past float64.
    """
    r_factor = np.linalg.qr(factor.conj().T, mode="r")
    y = solve_triangular(r_factor.conj().T, target_channel, lower=True)
    return float(target_power * np.real(np.vdot(y, y)))


def _normalizations(config: SimConfig, antennas: int, sinr: float,
                    radius: float) -> tuple[float, float]:
    alpha = config.link.alpha
    eps = config.intensity.epsilon
    rho = config.intensity.rho
    r_t = config.link.r_t
    beta_n = r_t ** alpha * radius ** (-alpha) * sinr
    eta_n = ((2.0 + eps) * antennas / (2.0 * math.pi * rho)) ** (-alpha / (2.0 + eps)) \
        * r_t ** alpha * sinr
    return beta_n, eta_n


def run_trial(config: SimConfig, trial_index: int) -> TrialResult:
    """One Monte Carlo realization, deterministic in (config, trial_index)."""
    rng = derive_stream(config.master_seed, PURPOSE_TRIAL, config.antennas, trial_index)
    geometry = NetworkGeometry.from_count(config.intensity, max(config.n_nodes, 1))
    radius = geometry.radius
    alpha = config.link.alpha

    noise_eye = math.sqrt(config.noise_power) * np.eye(config.antennas)
    if config.n_nodes > 0:
        nodes = sample_nodes(geometry, rng)
        channels = config.channel.draw(rng, (config.antennas, config.n_nodes))
        factor = np.concatenate(
            [channels * np.sqrt(nodes.radii ** (-alpha)), noise_eye], axis=1)
    else:
        factor = noise_eye
    target = config.channel.draw(rng, (config.antennas,))
    sinr = mmse_sinr_from_factor(target, config.link.r_t ** (-alpha), factor)

    beta_n, eta_n = _normalizations(config, config.antennas, sinr, radius)
    return TrialResult(sinr=sinr, beta_n=beta_n, eta_n=eta_n,
                       spec_eff=math.log2(1.0 + sinr), trial_index=trial_index)


def run_trials(config: SimConfig) -> list[TrialResult]:
    """All trials at the configured antenna count."""
    return [run_trial(config, t) for t in range(config.trials)]


def _nearest_rank(sorted_values: np.ndarray, q: float) -> float:
    idx = max(int(math.ceil(q * len(sorted_values))) - 1, 0)
    return float(sorted_values[idx])


def summarize(config: SimConfig, antennas: int,
              results: Sequence[TrialResult]) -> SweepRow:
    # sorting first makes every reduction independent of trial execution order
    spec_effs = np.sort([r.spec_eff for r in results])
    etas = np.sort([r.eta_n for r in results])
    spec_sorted = spec_effs
    asym = spec_eff_approx(config.link, config.intensity.epsilon,
                           config.intensity.rho, antennas)
    mean_se = float(spec_effs.mean())
    return SweepRow(
        antennas=antennas,
        mean_spec_eff=mean_se,
        std_spec_eff=float(spec_effs.std(ddof=1)) if len(results) > 1 else 0.0,
        mean_eta=float(etas.mean()),
        std_eta=float(etas.std(ddof=1)) if len(results) > 1 else 0.0,
        q05=_nearest_rank(spec_sorted, 0.05),
        q50=_nearest_rank(spec_sorted, 0.50),
        q95=_nearest_rank(spec_sorted, 0.95),
        asymptotic_spec_eff=asym,
        rel_error=abs(mean_se - asym) / asym,
    )


def run_sweep(config: SimConfig, antenna_list: Sequence[int]) -> tuple[SweepSummary, dict[int, list[TrialResult]]]:
    """Run the trial grid over antenna counts; streams are keyed per (N, trial)."""
    if not antenna_list:
        raise InvalidParameter("antenna_list must be non-empty")
    if list(antenna_list) != sorted(antenna_list):
        raise InvalidParameter("antenna_list must be ascending")
    rows = []
    all_results: dict[int, list[TrialResult]] = {}
    for n_ant in antenna_list:
        cfg = replace(config, antennas=n_ant)
        results = run_trials(cfg)
        all_results[n_ant] = results
        rows.append(summarize(cfg, n_ant, results))
    return SweepSummary(rows=tuple(rows)), all_results
