"""Command-line front end.

Subcommands: sweep, grid, decompose (sweep with arm-amplitude columns),
wavepacket and verify.  Shared physics flags: --omega-c --xi --omega --g0
--g1 --g; axes are given as --e-range/--g-range A:B:N.  A flat key = value
config file (--config) can preset any flag; explicit flags win.

Exit codes: 0 success, 1 invariant/integration failure, 2 bad configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from ._version import __version__
from .model import ModelParams
from .sweeps import ConfigurationError, GridSpec, SweepSpec, run_grid, run_sweep
from .verify import run_checks
from .wavepacket import WavepacketConfig, evolve_wavepacket

WAVEPACKET_DEFAULTS = WavepacketConfig()


def _parse_range(text: str, name: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigurationError(
            f"{name} must be START:STOP:N, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigurationError(f"bad {name} {text!r}: {exc}") from exc


def _read_config(path: str) -> dict[str, str]:
    """Flat key = value file; '#' starts a comment, keys match flag names."""
    values: dict[str, str] = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise ConfigurationError(
                        f"{path}:{lineno}: expected 'key = value', "
                        f"got {raw.rstrip()!r}")
                values[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise ConfigurationError(f"cannot read config file: {exc}") from exc
    return values


_CONFIG_PARSERS = {
    "omega_c": float, "xi": float, "omega": float, "g0": float, "g1": float,
    "g": float, "e_range": str, "g_range": str, "out": str, "format": str,
    "seed": int, "cases": int, "tol": float, "n_sites": int,
    "source_center": int, "k0": float, "sigma": float, "dt": float,
    "t_max": float, "trace": str, "trace_every": int, "axis": str,
}


def _merge_config(args: argparse.Namespace) -> None:
    if not args.config:
        return
    for key, raw in _read_config(args.config).items():
        if key not in _CONFIG_PARSERS:
            raise ConfigurationError(f"unknown config key {key!r}")
        if getattr(args, key, None) is None:
            try:
                setattr(args, key, _CONFIG_PARSERS[key](raw))
            except ValueError as exc:
                raise ConfigurationError(
                    f"bad value for config key {key!r}: {exc}") from exc


def _build_params(args: argparse.Namespace) -> ModelParams:
    if args.g is not None and (args.g0 is not None or args.g1 is not None):
        raise ConfigurationError("--g sets both couplings; do not combine "
                                 "it with --g0/--g1")
    omega_c = args.omega_c if args.omega_c is not None else 2.0
    xi = args.xi if args.xi is not None else 1.0
    if args.g is not None:
        g0 = g1 = args.g
    else:
        g0 = args.g0 if args.g0 is not None else 0.0
        g1 = args.g1 if args.g1 is not None else 0.0
    try:
        return ModelParams.create(omega_c, xi, args.omega, g0, g1)
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from exc


def _emit(grid, args: argparse.Namespace) -> None:
    fmt = args.format or "csv"
    if fmt not in ("csv", "json"):
        raise ConfigurationError(f"format must be csv or json, got {fmt!r}")
    if args.out:
        grid.to_csv(args.out) if fmt == "csv" else grid.to_json(args.out)
    else:
        grid.dump(sys.stdout, fmt)


def _sweep_spec(args: argparse.Namespace, params: ModelParams) -> SweepSpec:
    axis = args.axis or "energy"
    if args.e_range is not None:
        start, stop, n = _parse_range(args.e_range, "--e-range")
    elif axis == "energy":
        start, stop, n = (params.lattice.band_min,
                          params.lattice.band_max, 401)
    else:
        start, stop, n = 0.0, math.pi, 401
    return SweepSpec(axis=axis, start=start, stop=stop,
                     n_points=n, params=params)


def _cmd_sweep(args: argparse.Namespace) -> int:
    params = _build_params(args)
    _emit(run_sweep(_sweep_spec(args, params)), args)
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    params = _build_params(args)
    _emit(run_sweep(_sweep_spec(args, params), with_paths=True), args)
    return 0


def _cmd_grid(args: argparse.Namespace) -> int:
    params = _build_params(args)
    if args.e_range is not None:
        e_start, e_stop, e_n = _parse_range(args.e_range, "--e-range")
    else:
        e_start, e_stop, e_n = (params.lattice.band_min,
                                params.lattice.band_max, 201)
    if args.g_range is not None:
        g_start, g_stop, g_n = _parse_range(args.g_range, "--g-range")
    else:
        g_start, g_stop, g_n = 0.0, 2.0, 201
    spec = GridSpec(e_start=e_start, e_stop=e_stop, e_points=e_n,
                    g_start=g_start, g_stop=g_stop, g_points=g_n,
                    params=params)
    _emit(run_grid(spec), args)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    params = _build_params(args)
    seed = args.seed if args.seed is not None else 42
    cases = args.cases if args.cases is not None else 1000
    tol = args.tol if args.tol is not None else 1e-10
    try:
        report = run_checks(params, seed=seed, n_cases=cases, tol=tol)
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from exc
    text = "\n".join(report.lines()) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0 if report.passed else 1


def _cmd_wavepacket(args: argparse.Namespace) -> int:
    params = _build_params(args)
    d = WAVEPACKET_DEFAULTS
    cfg = WavepacketConfig(
        n_sites=args.n_sites if args.n_sites is not None else d.n_sites,
        source_center=(args.source_center if args.source_center is not None
                       else d.source_center),
        k0=args.k0 if args.k0 is not None else d.k0,
        sigma=args.sigma if args.sigma is not None else d.sigma,
        dt=args.dt, t_max=args.t_max)
    trace_every = args.trace_every if args.trace_every is not None else 1
    result = evolve_wavepacket(cfg, params,
                               trace_every=trace_every if args.trace else 0)
    fields = [("T_num", result.T_num), ("R_num", result.R_num),
              ("residual", result.residual), ("P_e_max", result.P_e_max),
              ("norm_drift", result.norm_drift), ("t_final", result.t_final)]
    for name, value in fields:
        print(f"{name} = {value!r}")
    if args.trace:
        with open(args.trace, "w", newline="") as fh:
            fh.write("time,left_norm,right_norm,P_e\n")
            for row in result.trace:
                fh.write(",".join(repr(float(v)) for v in row) + "\n")
    if args.out:
        fmt = args.format or "json"
        with open(args.out, "w", newline="") as fh:
            if fmt == "json":
                json.dump(dict(fields), fh)
                fh.write("\n")
            else:
                fh.write(",".join(name for name, _ in fields) + "\n")
                fh.write(",".join(repr(float(v)) for _, v in fields) + "\n")
    return 0


def _add_physics_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--config", metavar="FILE",
                    help="flat key = value file presetting any flag")
    sp.add_argument("--omega-c", dest="omega_c", type=float,
                    help="cavity frequency (default 2)")
    sp.add_argument("--xi", type=float, help="inter-cavity hopping (default 1)")
    sp.add_argument("--omega", type=float,
                    help="emitter level spacing (default: omega_c)")
    sp.add_argument("--g0", type=float, help="coupling to site 0 (default 0)")
    sp.add_argument("--g1", type=float, help="coupling to site 1 (default 0)")
    sp.add_argument("--g", type=float, help="set both couplings at once")
    sp.add_argument("--out", metavar="FILE", help="output file (default: stdout)")
    sp.add_argument("--format", choices=("csv", "json"),
                    help="output format (default csv)")
    sp.add_argument("--seed", type=int,
                    help="RNG seed (default 42; only verify draws from it)")


def _add_axis_flags(sp: argparse.ArgumentParser, with_g: bool = False) -> None:
    sp.add_argument("--e-range", dest="e_range", metavar="A:B:N",
                    help="energy axis (default: full band, clipped)")
    sp.add_argument("--axis", choices=("energy", "momentum"),
                    help="sweep axis (default energy); ranges in k for momentum")
    if with_g:
        sp.add_argument("--g-range", dest="g_range", metavar="A:B:N",
                        help="coupling axis, applied as g0 = g1 = g "
                             "(default 0:2:201)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cramz",
        description="Single-excitation transport in a coupled-resonator "
                    "array with a two-site-coupled emitter.")
    parser.add_argument("--version", action="version",
                        version=f"cramz {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sweep", help="transmission/reflection spectrum "
                                      "along one axis")
    _add_physics_flags(sp)
    _add_axis_flags(sp)
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("decompose", help="sweep with two-arm partial "
                                          "amplitudes (needs g0 = g1)")
    _add_physics_flags(sp)
    _add_axis_flags(sp)
    sp.set_defaults(func=_cmd_decompose)

    sp = sub.add_parser("grid", help="T over an (energy x coupling) grid, "
                                     "long format")
    _add_physics_flags(sp)
    _add_axis_flags(sp, with_g=True)
    sp.set_defaults(func=_cmd_grid)

    sp = sub.add_parser("verify", help="seeded random self-check of all "
                                       "identities")
    _add_physics_flags(sp)
    sp.add_argument("--cases", type=int, help="number of draws (default 1000)")
    sp.add_argument("--tol", type=float, help="residual tolerance "
                                              "(default 1e-10)")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("wavepacket", help="time-domain Gaussian packet run")
    _add_physics_flags(sp)
    sp.add_argument("--n-sites", dest="n_sites", type=int,
                    help=f"lattice length (default {WAVEPACKET_DEFAULTS.n_sites})")
    sp.add_argument("--source-center", dest="source_center", type=int,
                    help="initial packet center "
                         f"(default {WAVEPACKET_DEFAULTS.source_center})")
    sp.add_argument("--k0", type=float, help="carrier momentum (default pi/2)")
    sp.add_argument("--sigma", type=float,
                    help=f"packet width in sites (default {WAVEPACKET_DEFAULTS.sigma})")
    sp.add_argument("--dt", type=float, help="time step (default 0.02/xi)")
    sp.add_argument("--t-max", dest="t_max", type=float,
                    help="total time (default: sized from group velocity)")
    sp.add_argument("--trace", metavar="FILE",
                    help="write per-step probability trace CSV")
    sp.add_argument("--trace-every", dest="trace_every", type=int,
                    help="trace cadence in steps (default 1)")
    sp.set_defaults(func=_cmd_wavepacket)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args)
        return args.func(args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
