"""Command line front end: one subcommand per experiment kind.

Each subcommand reads an optional key-value config file and applies flag
overrides on top.  Success exits 0 and prints the manifest; any failure
prints a machine-readable JSON error record to stderr and exits nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields

from .runner import KINDS, MEASURES, RunConfig, run

_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _parse_value(key: str, raw: str):
    raw = raw.strip()
    if key in ("measures",):
        names = tuple(v.strip() for v in raw.split(",") if v.strip())
        return tuple(MEASURES) if names == ("all",) else names
    if key in ("window",):
        parts = [float(v) for v in raw.split(",")]
        if len(parts) != 2:
            raise ValueError(f"window needs two comma-separated times, got {raw!r}")
        return (parts[0], parts[1])
    if key in ("concurrence_distances", "bonds"):
        return tuple(int(v) for v in raw.split(",") if v.strip())
    if key in ("initial", "out_dir", "kind"):
        return raw
    if key in ("L", "sample_every", "steps", "samples", "seed", "workers", "period", "k0", "q_max"):
        return int(raw)
    if key in ("rho0", "t_max", "dt", "hopping", "tolerance"):
        return float(raw)
    raise ValueError(f"unknown config key {key!r}")


def read_config_file(path: str) -> dict:
    """Parse a `key = value` text file; '#' starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, raw = (part.strip() for part in line.split("=", 1))
            values[key] = _parse_value(key, raw)
    return values


_FLAGS = {
    "--length": ("L", int, "lattice size L"),
    "--initial": ("initial", str, "initial bitstring, site 1 leftmost"),
    "--density": ("rho0", float, "initial alive density for random Fock states"),
    "--tmax": ("t_max", float, "integration time"),
    "--dt": ("dt", float, "integrator step (default 0.01)"),
    "--sample-every": ("sample_every", int, "steps between snapshots"),
    "--steps": ("steps", int, "discrete steps for classical/strobe runs"),
    "--samples": ("samples", int, "ensemble size"),
    "--seed": ("seed", int, "master random seed"),
    "--measures": ("measures", str, "comma list: " + ",".join(MEASURES) + " or 'all'"),
    "--window": ("window", str, "averaging window 't_a,t_b'"),
    "--distances": ("concurrence_distances", str, "comma list of concurrence distances"),
    "--bonds": ("bonds", str, "comma list of bonds for bond entropy"),
    "--out": ("out_dir", str, "output directory"),
    "--workers": ("workers", int, "parallel workers for ensembles"),
    "--period": ("period", int, "ring size n for circulant runs"),
    "--hopping": ("hopping", float, "ring hopping energy J"),
    "--k0": ("k0", int, "initial ring configuration index"),
    "--qmax": ("q_max", int, "largest denominator considered rational"),
    "--tolerance": ("tolerance", float, "continued-fraction termination tolerance"),
}

_STRING_PARSED = ("measures", "window", "concurrence_distances", "bonds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgol",
        description="Exact simulation of the quantum Game of Life spin chain.",
    )
    sub = parser.add_subparsers(dest="kind", required=True)
    for kind in KINDS:
        p = sub.add_parser(kind, help=f"run a {kind} experiment")
        p.add_argument("--config", help="key-value config file; flags override it")
        for flag, (dest, type_, help_) in _FLAGS.items():
            p.add_argument(flag, dest=dest, type=type_, default=None, help=help_)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {"kind": args.kind}
    if args.config:
        file_values = read_config_file(args.config)
        file_values.pop("kind", None)  # the subcommand owns the kind
        values.update(file_values)
    for dest, *_ in _FLAGS.values():
        raw = getattr(args, dest, None)
        if raw is None:
            continue
        values[dest] = _parse_value(dest, raw) if dest in _STRING_PARSED else raw
    return RunConfig(**values)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        manifest = run(config)
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports, never crashes
        record = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(record), file=sys.stderr)
        return 1
    print(json.dumps(manifest, indent=2, default=str))
    return 0


if __name__ == "__main__":
    sys.exit(main())
