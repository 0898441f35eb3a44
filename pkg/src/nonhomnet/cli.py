"""Command-line front end: solvers, planners, Monte Carlo sweeps, and figure data.

Subcommands: solve, approx, plan, simulate, figures. Simulation and figure
commands write CSV data files plus a JSON manifest sufficient to reproduce
them; the figures command also renders a PNG next to each CSV.

Exit codes: 0 success, 2 invalid parameters, 3 solver non-convergence,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import asdict
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Sequence

from . import __version__, plots
from .asymptotic import (
    LinkParameters,
    antennas_required,
    sinr_approx,
    solve_general,
    solve_power_law,
)
from .errors import (
    BracketFailure,
    DomainError,
    InvalidParameter,
    NonConvergence,
    NonhomError,
    PoleError,
    QuadratureFailure,
)
from .model import PowerLawIntensity, PowerLawScaledPowers
from .asymptotic import FixedPointProblem
from .simulate import ChannelModel, SimConfig, run_sweep

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NONCONVERGENCE = 3
EXIT_IO = 4

SEED_ENV_VAR = "NONHOM_SEED"

# section-IV defaults
DEFAULT_RHO = 0.01
DEFAULT_RT = 10.0
DEFAULT_N_NODES = 10_000
DEFAULT_NOISE = 1e-14
DEFAULT_ANTENNAS = (2, 4, 8, 16, 32)
ALPHA_SWEEP = (2.5, 3.0, 3.5, 4.0, 4.5)
EPSILON_SWEEP = (-1.0, -0.75, -0.5, -0.25, 0.0)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])


def _write_json(path: Path, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _write_manifest(path: Path, config: dict, seed: int) -> None:
    manifest = {
        "artifact_version": __version__,
        "command_line": sys.argv,
        "config": config,
        "master_seed": seed,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    _write_json(path, manifest)


def _resolve_seed(seed: int) -> int:
    env = os.environ.get(SEED_ENV_VAR)
    return int(env) if env is not None else seed


def _parse_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidParameter(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _parse_antennas(text: str) -> list[int]:
    try:
        antennas = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise InvalidParameter(f"bad antenna list {text!r}") from exc
    if not antennas or antennas != sorted(antennas):
        raise InvalidParameter("antenna list must be non-empty and ascending")
    return antennas


def cmd_solve(args) -> int:
    if args.general:
        dist = PowerLawScaledPowers(alpha=args.alpha, epsilon=args.epsilon)
        sol = solve_general(FixedPointProblem(c=args.c, sigma2=args.sigma2, dist=dist),
                            tol=args.tol)
    else:
        sol = solve_power_law(args.alpha, args.epsilon, args.c, args.sigma2,
                              tol=args.tol)
    print(f"beta      {_fmt(sol.beta)}")
    if sol.eta is not None:
        print(f"eta       {_fmt(sol.eta)}")
    print(f"residual  {_fmt(sol.residual)}")
    print(f"iterations {sol.iterations}")
    return EXIT_OK


def cmd_approx(args) -> int:
    link = LinkParameters(r_t=args.rt, alpha=args.alpha)
    sinr = sinr_approx(link, args.epsilon, args.rho, args.antennas)
    gamma = math.log2(1.0 + sinr)
    print(f"sinr_linear {_fmt(sinr)}")
    print(f"sinr_db     {_fmt(10.0 * math.log10(sinr))}")
    print(f"spec_eff    {_fmt(gamma)}")
    return EXIT_OK


def cmd_plan(args) -> int:
    link = LinkParameters(r_t=args.rt, alpha=args.alpha)
    n_real = antennas_required(args.gamma, link, args.epsilon, args.rho)
    print(f"antennas_real    {_fmt(n_real)}")
    print(f"antennas_rounded {math.ceil(n_real)}")
    return EXIT_OK


def _sim_config_from_args(args) -> tuple[SimConfig, list[int], str, str]:
    defaults = {
        "alpha": "4.0", "epsilon": "0.0", "rho": str(DEFAULT_RHO),
        "rt": str(DEFAULT_RT), "n_nodes": str(DEFAULT_N_NODES),
        "noise": str(DEFAULT_NOISE), "antennas": ",".join(map(str, DEFAULT_ANTENNAS)),
        "trials": "1000", "seed": "0", "channel": "gaussian",
        "out": "out", "format": "csv",
    }
    if args.config:
        file_values = _parse_config_file(args.config)
        unknown = set(file_values) - set(defaults)
        if unknown:
            raise InvalidParameter(f"unknown config keys: {sorted(unknown)}")
        defaults.update(file_values)
    for key in defaults:
        flag = getattr(args, key, None)
        if flag is not None:
            defaults[key] = str(flag)
    if defaults["format"] not in ("csv", "json"):
        raise InvalidParameter(f"unknown format {defaults['format']!r}")
    antennas = _parse_antennas(defaults["antennas"])
    seed = _resolve_seed(int(defaults["seed"]))
    config = SimConfig(
        intensity=PowerLawIntensity(rho=float(defaults["rho"]),
                                    epsilon=float(defaults["epsilon"])),
        link=LinkParameters(r_t=float(defaults["rt"]), alpha=float(defaults["alpha"])),
        n_nodes=int(defaults["n_nodes"]),
        antennas=antennas[0],
        noise_power=float(defaults["noise"]),
        channel=ChannelModel(entry_law=defaults["channel"]),
        master_seed=seed,
        trials=int(defaults["trials"]),
    )
    return config, antennas, defaults["out"], defaults["format"]


def _config_echo(config: SimConfig, antennas: list[int]) -> dict:
    return {
        "alpha": config.link.alpha,
        "epsilon": config.intensity.epsilon,
        "rho": config.intensity.rho,
        "rt": config.link.r_t,
        "n_nodes": config.n_nodes,
        "noise": config.noise_power,
        "antennas": antennas,
        "trials": config.trials,
        "channel": config.channel.entry_law,
        "seed": config.master_seed,
    }


def cmd_simulate(args) -> int:
    config, antennas, out, fmt = _sim_config_from_args(args)
    summary, results = run_sweep(config, antennas)

    outdir = Path(out)
    outdir.mkdir(parents=True, exist_ok=True)

    trial_rows = [
        (n, r.trial_index, r.sinr, r.beta_n, r.eta_n, r.spec_eff)
        for n in antennas for r in results[n]
    ]
    summary_rows = [
        (row.antennas, row.mean_spec_eff, row.std_spec_eff, row.mean_eta,
         row.std_eta, row.q05, row.q50, row.q95, row.asymptotic_spec_eff,
         row.rel_error)
        for row in summary.rows
    ]
    if fmt == "csv":
        _write_csv(outdir / "trials.csv",
                   ["N", "trial", "sinr", "beta_n", "eta_n", "spec_eff"], trial_rows)
        _write_csv(outdir / "summary.csv",
                   ["N", "mean_se", "std_se", "mean_eta", "std_eta",
                    "q05", "q50", "q95", "asym_se", "rel_err"], summary_rows)
    else:
        _write_json(outdir / "trials.json", [
            {"N": n, "trial": t, "sinr": s, "beta_n": b, "eta_n": e, "spec_eff": g}
            for n, t, s, b, e, g in trial_rows])
        _write_json(outdir / "summary.json", [asdict(row) for row in summary.rows])
    _write_manifest(outdir / "manifest.json", _config_echo(config, antennas),
                    config.master_seed)
    print(f"wrote {outdir}/trials.{fmt}, {outdir}/summary.{fmt}, {outdir}/manifest.json")
    return EXIT_OK


FIG_SCATTER_SAMPLES = 50


def cmd_figures(args) -> int:
    fig = args.figure
    seed = _resolve_seed(args.seed)
    rho, rt, n_nodes, noise = args.rho, args.rt, args.n_nodes, args.noise
    antennas = _parse_antennas(args.antennas)
    trials = args.trials
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    def sim(alpha: float, epsilon: float) -> tuple:
        cfg = SimConfig(
            intensity=PowerLawIntensity(rho=rho, epsilon=epsilon),
            link=LinkParameters(r_t=rt, alpha=alpha),
            n_nodes=n_nodes, antennas=antennas[0], noise_power=noise,
            channel=ChannelModel("gaussian"), master_seed=seed, trials=trials)
        return cfg, *run_sweep(cfg, antennas)

    config_echo = {
        "figure": fig, "rho": rho, "rt": rt, "n_nodes": n_nodes, "noise": noise,
        "antennas": antennas, "trials": trials, "seed": seed,
        "alpha": args.alpha, "epsilon": args.epsilon,
    }

    if fig == 2:
        alpha, epsilon = args.alpha, args.epsilon
        _, _, results = sim(alpha, epsilon)
        rows, samples, asym = [], [], []
        for n in antennas:
            for r in results[n][:FIG_SCATTER_SAMPLES]:
                rows.append(("sim", n, r.eta_n))
                samples.append((n, r.eta_n))
            sol = solve_power_law(alpha, epsilon, n_nodes / n, 0.0)
            rows.append(("asym", n, sol.eta))
            asym.append((n, sol.eta))
        _write_csv(outdir / "fig2.csv", ["series", "N", "eta"], rows)
        plots.scatter_vs_asymptote(samples, asym, "normalized SINR",
                                   outdir / "fig2.png")
        written = "fig2"
    elif fig in (3, 5):
        sweep_values = ALPHA_SWEEP if fig == 3 else EPSILON_SWEEP
        param_name = "alpha" if fig == 3 else "epsilon"
        rows, curves = [], {}
        for value in sweep_values:
            alpha = value if fig == 3 else args.alpha
            epsilon = args.epsilon if fig == 3 else value
            _, summary, _ = sim(alpha, epsilon)
            ns = [row.antennas for row in summary.rows]
            sim_means = [row.mean_spec_eff for row in summary.rows]
            approx = [row.asymptotic_spec_eff for row in summary.rows]
            for n, m, a in zip(ns, sim_means, approx):
                rows.append((value, n, m, a))
            curves[f"{param_name}={value:g}"] = (ns, sim_means, approx)
        _write_csv(outdir / f"fig{fig}.csv",
                   [param_name, "N", "mean_se", "approx_se"], rows)
        plots.mean_curves(curves, "mean spectral efficiency (bits/s/Hz)",
                          outdir / f"fig{fig}.png")
        written = f"fig{fig}"
    elif fig == 4:
        rows, groups, overlays = [], {}, {}
        for alpha in (2.5, 4.0):
            _, summary, results = sim(alpha, args.epsilon)
            label = f"alpha={alpha:g}"
            pts = [(n, r.spec_eff) for n in antennas
                   for r in results[n][:FIG_SCATTER_SAMPLES]]
            groups[label] = pts
            overlays[label] = [(row.antennas, row.asymptotic_spec_eff)
                               for row in summary.rows]
            rows.extend(("sim", alpha, n, v) for n, v in pts)
            rows.extend(("approx", alpha, n, v) for n, v in overlays[label])
        _write_csv(outdir / "fig4.csv", ["series", "alpha", "N", "spec_eff"], rows)
        plots.scatter_curves(groups, overlays,
                             "spectral efficiency (bits/s/Hz)", outdir / "fig4.png")
        written = "fig4"
    elif fig == 6:
        gammas = [float(g) for g in args.gammas.split(",")]
        link = LinkParameters(r_t=rt, alpha=args.alpha)
        eps_grid = [(-1.0 + i * 0.025) for i in range(41)]
        rows, curves = [], {}
        for gamma in gammas:
            ns = [antennas_required(gamma, link, e, rho) for e in eps_grid]
            rows.extend((gamma, e, n) for e, n in zip(eps_grid, ns))
            curves[f"gamma={gamma:g}"] = (eps_grid, ns)
        _write_csv(outdir / "fig6.csv", ["gamma", "epsilon", "N"], rows)
        plots.antennas_vs_epsilon(curves, outdir / "fig6.png")
        written = "fig6"
    else:
        raise InvalidParameter(f"unknown figure id {fig}")

    _write_manifest(outdir / f"{written}_manifest.json", config_echo, seed)
    print(f"wrote {outdir}/{written}.csv, {outdir}/{written}.png")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonhomnet",
        description="SINR and spectral efficiency of multi-antenna MMSE links "
                    "in non-homogeneous wireless networks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the asymptotic fixed-point equation")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--c", type=float, required=True,
                   help="interferers-per-antenna ratio")
    p.add_argument("--sigma2", type=float, required=True,
                   help="normalized noise power")
    p.add_argument("--general", action="store_true",
                   help="force the quadrature route instead of the closed form")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("approx", help="closed-form large-N SINR approximation")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--rt", type=float, required=True)
    p.add_argument("--antennas", type=float, required=True)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("plan", help="antennas required for a target spectral efficiency")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--rt", type=float, required=True)
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("simulate", help="Monte Carlo sweep over antenna counts")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--alpha", type=float)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--rho", type=float)
    p.add_argument("--rt", type=float)
    p.add_argument("--n-nodes", dest="n_nodes", type=int)
    p.add_argument("--noise", type=float)
    p.add_argument("--antennas", help="comma-separated ascending list")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--channel", choices=["gaussian", "qpsk"])
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"])
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("figures", help="emit plot-ready CSV plus rendered PNG")
    p.add_argument("--figure", type=int, required=True)
    p.add_argument("--alpha", type=float, default=3.0)
    p.add_argument("--epsilon", type=float, default=-0.5)
    p.add_argument("--rho", type=float, default=DEFAULT_RHO)
    p.add_argument("--rt", type=float, default=DEFAULT_RT)
    p.add_argument("--n-nodes", dest="n_nodes", type=int, default=DEFAULT_N_NODES)
    p.add_argument("--noise", type=float, default=DEFAULT_NOISE)
    p.add_argument("--antennas", default=",".join(map(str, DEFAULT_ANTENNAS)))
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gammas", default="1,2,3",
                   help="target spectral efficiencies for figure 6")
    p.add_argument("--out", default="out")
    p.set_defaults(func=cmd_figures)

    return parser


def _error_exit(exc: Exception, code: int) -> int:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc),
                      "exit_code": code}), file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameter, DomainError, PoleError) as exc:
        return _error_exit(exc, EXIT_INVALID)
    except (NonConvergence, BracketFailure, QuadratureFailure) as exc:
        return _error_exit(exc, EXIT_NONCONVERGENCE)
    except OSError as exc:
        return _error_exit(exc, EXIT_IO)
    except NonhomError as exc:
        return _error_exit(exc, EXIT_INVALID)


if __name__ == "__main__":
    raise SystemExit(main())
