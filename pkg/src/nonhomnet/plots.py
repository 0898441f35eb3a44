"""Matplotlib rendering for the figure-data emitted by the CLI report path."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _finish(fig, ax, xlabel: str, ylabel: str, path: Path) -> None:
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def scatter_vs_asymptote(samples: Sequence[tuple[int, float]],
                         asymptote: Sequence[tuple[int, float]],
                         ylabel: str, path: Path) -> None:
    """Per-N sample scatter with the asymptotic line overlaid."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    xs = [n for n, _ in samples]
    ys = [v for _, v in samples]
    ax.semilogy(xs, ys, ".", ms=4, alpha=0.6, label="simulated")
    ax.semilogy([n for n, _ in asymptote], [v for _, v in asymptote],
                "-", color="k", label="asymptotic")
    _finish(fig, ax, "number of receiver antennas", ylabel, path)


def mean_curves(curves: Mapping[str, tuple[Sequence[int], Sequence[float], Sequence[float]]],
                ylabel: str, path: Path) -> None:
    """Mean spectral efficiency per parameter value with the approximation overlay.

    curves maps a label to (antenna counts, simulated means, approximations).
    """
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for label, (ns, sim, approx) in curves.items():
        line, = ax.plot(ns, approx, "-")
        ax.plot(ns, sim, "o", color=line.get_color(), label=label)
    _finish(fig, ax, "number of receiver antennas", ylabel, path)


def scatter_curves(groups: Mapping[str, Sequence[tuple[int, float]]],
                   overlays: Mapping[str, Sequence[tuple[int, float]]],
                   ylabel: str, path: Path) -> None:
    """Per-group sample scatter plus per-group approximation lines."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for label, pts in groups.items():
        sc = ax.plot([n for n, _ in pts], [v for _, v in pts], ".", ms=4,
                     alpha=0.6, label=label)
        over = overlays.get(label)
        if over:
            ax.plot([n for n, _ in over], [v for _, v in over], "-",
                    color=sc[0].get_color())
    _finish(fig, ax, "number of receiver antennas", ylabel, path)


def antennas_vs_epsilon(curves: Mapping[str, tuple[Sequence[float], Sequence[float]]],
                        path: Path) -> None:
    """Required antenna count vs the intensity exponent, one curve per target rate."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for label, (eps, ns) in curves.items():
        ax.semilogy(eps, ns, "-", label=label)
    _finish(fig, ax, "intensity exponent", "antennas required", path)
