"""Command-line front end.

Subcommands: run (one walk or ensemble), sweep (a parameter grid),
reverse (forward + conjugate steps with a fidelity report), validate
(schema check only). Every run writes CSV tables plus a JSON manifest;
identical config and seed reproduce the CSVs byte for byte.

Exit codes: 0 success, 2 configuration error, 3 numerical error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import fidelity, moments, peak_center_ratio
from .coin import CoinParams
from .config import RunSpec, load_run_spec, run_spec_to_jsonable
from .errors import ConfigError, DomainError, ResolutionError, TruncationError
from .operators import KickParams
from .protocols import (
    RATCHET,
    EnsembleTrajectory,
    WalkTrajectory,
    run_ensemble,
    run_reversed_walk,
    run_walk,
    walk_lattice,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _fmt(value: float) -> str:
    return f"{float(value):.12g}"


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def write_distributions(path: Path, traj: WalkTrajectory) -> None:
    momenta = traj.lattice.momenta()
    rows = []
    for step in range(traj.n_steps + 1):
        spin1 = traj.spin_distribution(step, 1)
        spin2 = traj.spin_distribution(step, 2)
        for i, n in enumerate(momenta):
            rows.append([step, int(n), _fmt(spin1[i] + spin2[i]),
                         _fmt(spin1[i]), _fmt(spin2[i])])
    _write_csv(path, ["step", "n", "p_total", "p_spin1", "p_spin2"], rows)


def write_moments(path: Path, traj: WalkTrajectory) -> None:
    stats = moments(traj)
    rows = [[step, _fmt(stats.mean[step]), _fmt(stats.variance[step]),
             _fmt(stats.std[step]), _fmt(stats.energy[step])]
            for step in range(traj.n_steps + 1)]
    _write_csv(path, ["step", "mean_p", "variance", "std", "energy"], rows)


def _write_manifest(out_dir: Path, command: str, spec: RunSpec,
                    outputs: list[str]) -> None:
    manifest = {
        "tool": "momentum-walk",
        "version": __version__,
        "command": command,
        "seed": spec.walk.seed,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "config": run_spec_to_jsonable(spec),
        "outputs": outputs,
    }
    with open(out_dir / "manifest.json", "w", encoding="utf-8") as handle:
        json.dump(manifest, handle, indent=2, sort_keys=True)
        handle.write("\n")


def _execute(spec: RunSpec, threads: int):
    """One walk, as an ensemble when an ensemble section is present."""
    if spec.ensemble is not None:
        return run_ensemble(spec.walk, spec.ensemble, spec.lattice,
                            threads=threads)
    return run_walk(spec.walk, spec.lattice)


def cmd_run(spec: RunSpec, out_dir: Path, threads: int) -> int:
    traj = _execute(spec, threads)
    write_distributions(out_dir / "distributions.csv", traj)
    write_moments(out_dir / "moments.csv", traj)
    _write_manifest(out_dir, "run", spec, ["distributions.csv", "moments.csv"])
    print(f"run: {traj.n_steps} step(s) -> {out_dir}")
    return EXIT_OK


def _sweep_config(spec: RunSpec, value):
    walk = spec.walk
    parameter = spec.sweep.parameter
    if parameter == "noise_eps":
        return replace(walk, noise_eps=value), _fmt(value)
    if parameter == "kick":
        k1, k2 = value
        kick = KickParams(k1, k2, walk.kick.tau)
        return replace(walk, shift_mode=RATCHET, kick=kick), f"{k1:g}/{k2:g}"
    # coin_alpha: rebalance every toss, keeping the protocol phases
    first = CoinParams(value, walk.first_coin.chi)
    step = CoinParams(value, walk.step_coin.chi)
    return replace(walk, first_coin=first, step_coin=step), _fmt(value)


def cmd_sweep(spec: RunSpec, out_dir: Path, threads: int) -> int:
    if spec.sweep is None:
        raise ConfigError("sweep: section required for the sweep command")
    rows = []
    for value in spec.sweep.values:
        walk, label = _sweep_config(spec, value)
        point = RunSpec(walk=walk, lattice=spec.lattice, ensemble=spec.ensemble)
        traj = _execute(point, threads)
        stats = moments(traj)
        for step in range(traj.n_steps + 1):
            try:
                ratio = _fmt(peak_center_ratio(traj.total_distribution(step)))
            except ValueError:
                ratio = "nan"
            rows.append([spec.sweep.parameter, label, step,
                         _fmt(stats.mean[step]), _fmt(stats.std[step]),
                         _fmt(stats.energy[step]), ratio])
    _write_csv(out_dir / "sweep.csv",
               ["parameter", "value", "step", "mean_p", "std", "energy",
                "peak_center_ratio"], rows)
    _write_manifest(out_dir, "sweep", spec, ["sweep.csv"])
    print(f"sweep: {len(spec.sweep.values)} point(s) -> {out_dir}")
    return EXIT_OK


def cmd_reverse(spec: RunSpec, out_dir: Path, threads: int) -> int:
    if spec.reverse is None:
        raise ConfigError("reverse: section required for the reverse command")
    rev = spec.reverse
    lattice = spec.lattice
    if lattice is None:
        lattice = walk_lattice(replace(spec.walk, steps=rev.j_forward))
    if spec.ensemble is not None:
        def runner(config, lat, initial, rng=None, retain_states=True):
            return run_reversed_walk(config, rev.j_forward, lat, initial,
                                     method=rev.method, rng=rng,
                                     retain_states=retain_states)

        traj = run_ensemble(spec.walk, spec.ensemble, lattice,
                            run=runner, threads=threads)
        final_fidelity = traj.mean_fidelity
        n_samples = spec.ensemble.n_samples
    else:
        traj = run_reversed_walk(spec.walk, rev.j_forward, lattice,
                                 method=rev.method)
        final_fidelity = fidelity(traj.states[0], traj.states[-1])
        n_samples = 1
    write_distributions(out_dir / "distributions.csv", traj)
    write_moments(out_dir / "moments.csv", traj)
    _write_csv(out_dir / "fidelity.csv",
               ["j_forward", "method", "n_samples", "fidelity"],
               [[rev.j_forward, rev.method, n_samples, _fmt(final_fidelity)]])
    _write_manifest(out_dir, "reverse", spec,
                    ["distributions.csv", "moments.csv", "fidelity.csv"])
    print(f"reverse: fidelity after {rev.j_forward}+{rev.j_forward} steps "
          f"= {final_fidelity:.12g} -> {out_dir}")
    return EXIT_OK


def cmd_validate(spec: RunSpec) -> int:
    print("config OK")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momentum-walk",
        description="Simulate discrete-time quantum walks in momentum space.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("run", "run one walk or ensemble and write its tables"),
        ("sweep", "run a parameter grid and write an aggregated table"),
        ("reverse", "run a forward+conjugate walk and report the fidelity"),
        ("validate", "check a config file against the schema and exit"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, help="JSON run file")
        if name != "validate":
            cmd.add_argument("--out-dir", default="out",
                             help="output directory (created if missing)")
            cmd.add_argument("--seed", type=int, default=None,
                             help="override the config seed")
            cmd.add_argument("--threads", type=int, default=1,
                             help="ensemble worker threads (0 = auto)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_run_spec(args.config)
        if args.command == "validate":
            return cmd_validate(spec)
        if args.seed is not None:
            if not 0 <= args.seed < 2 ** 64:
                raise ConfigError(f"--seed must be a 64-bit unsigned integer, "
                                  f"got {args.seed}")
            spec = replace(spec, walk=replace(spec.walk, seed=args.seed))
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        if args.command == "run":
            return cmd_run(spec, out_dir, args.threads)
        if args.command == "sweep":
            return cmd_sweep(spec, out_dir, args.threads)
        return cmd_reverse(spec, out_dir, args.threads)
    except ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except TruncationError as err:
        where = f" at step {err.step}" if err.step is not None else ""
        print(f"numerical error{where}: {err}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DomainError, ResolutionError) as err:
        print(f"numerical error: {err}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
