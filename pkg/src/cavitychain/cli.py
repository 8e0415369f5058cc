"""Command-line front end: evolve traces, run sweeps, verify against the oracle.

Exit codes: 0 success, 1 invalid parameters, 2 verification tolerance
breach, 3 I/O failure.  Data files are deterministic; timestamps live in
the ``.meta.json`` sidecars only.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
import time

import numpy as np

from . import io as io_mod
from . import sweep as sweep_mod
from .dynamics import population_trace
from .model import STAGGERED, UNIFORM, SystemParams
from .verify import DEFAULT_TOLERANCE, run_verification

_ANGLE_RE = re.compile(r"^\s*(?:(\d+(?:\.\d*)?)\s*\*?\s*)?pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$",
                       re.IGNORECASE)

_AXIS_NAMES = {"size": sweep_mod.SIZE, "beta": sweep_mod.BETA,
               "kappa": sweep_mod.KAPPA, "k": sweep_mod.ENCODING_K,
               "hopping": sweep_mod.HOPPING}


def parse_angle(token: str) -> float:
    """Radians from a float literal or a pi expression like 'pi/4' or '3*pi/8'."""
    match = _ANGLE_RE.match(token)
    if match:
        numerator = float(match.group(1)) if match.group(1) else 1.0
        denominator = float(match.group(2)) if match.group(2) else 1.0
        return numerator * math.pi / denominator
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"cannot parse angle {token!r}") from None


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of cavities")
    parser.add_argument("--lambda", dest="lam", type=float, default=10.0,
                        help="atom-field coupling (units of xi unless --absolute-units)")
    parser.add_argument("--xi", type=float, default=1.0, help="intercavity hopping")
    parser.add_argument("--delta", type=float, default=0.0,
                        help="detuning (units of xi unless --absolute-units)")
    parser.add_argument("--beta", type=str, default="0",
                        help="injection mixing angle in radians; accepts 'pi/4' style")
    parser.add_argument("--beta-deg", type=float, default=None,
                        help="injection mixing angle in degrees (overrides --beta)")
    parser.add_argument("--pattern", choices=(UNIFORM, STAGGERED), default=UNIFORM)
    parser.add_argument("--kappa", type=float, default=None,
                        help="bond distortion for the staggered pattern")
    parser.add_argument("--absolute-units", action="store_true",
                        help="treat --lambda and --delta as absolute energies")


def _params_from_args(args) -> SystemParams:
    beta = math.radians(args.beta_deg) if args.beta_deg is not None else parse_angle(args.beta)
    scale = 1.0 if args.absolute_units else args.xi
    return SystemParams(
        n_cavities=args.n,
        coupling=args.lam * scale,
        hopping=args.xi,
        detuning=args.delta * scale,
        beta=beta,
        pattern=args.pattern,
        kappa=args.kappa,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cavitychain",
        description="Quantum state transfer through a two-photon coupled-cavity chain")
    sub = parser.add_subparsers(dest="command", required=True)

    evolve = sub.add_parser("evolve", help="site-resolved populations on a time grid")
    _add_param_flags(evolve)
    evolve.add_argument("--t-max", type=float, default=None,
                        help="end of the time grid (default 2N/xi)")
    evolve.add_argument("--grid-points", type=int, default=2001)
    evolve.add_argument("--injection-site", type=int, default=1)
    evolve.add_argument("--output", required=True, help="output data file")
    evolve.add_argument("--format", choices=("csv", "json"), default="csv")

    swp = sub.add_parser("sweep", help="optimal transfer time/probability scans")
    _add_param_flags(swp)
    swp.add_argument("--axis", choices=tuple(_AXIS_NAMES), required=True)
    swp.add_argument("--values", required=True,
                     help="comma-separated axis values (beta accepts 'pi/4' style)")
    swp.add_argument("--encoding-k", type=int, default=None,
                     help="decode with a k-site encoding instead of end-site populations")
    swp.add_argument("--t-max", type=float, default=None,
                     help="search window end (default 2N/xi per point)")
    swp.add_argument("--grid-points", type=int, default=None,
                     help="coarse scan points (default: matched to the beat structure)")
    swp.add_argument("--refine-tol", type=float, default=None,
                     help="golden-section bracket width (default 1e-4/xi)")
    swp.add_argument("--workers", type=int, default=1)
    swp.add_argument("--output", required=True)
    swp.add_argument("--format", choices=("csv", "json"), default="csv")

    ver = sub.add_parser("verify", help="analytic-vs-oracle cross-check suite")
    ver.add_argument("--n-max", type=int, default=12)
    ver.add_argument("--draws", type=int, default=50)
    ver.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    ver.add_argument("--inject-lambda-error", type=float, default=0.0,
                     help=argparse.SUPPRESS)

    return parser


def cmd_evolve(args) -> int:
    start = time.perf_counter()
    params = _params_from_args(args)
    if args.t_max is None:
        if params.hopping <= 0:
            raise ValueError("--t-max is required when the hopping is zero")
        t_max = 2.0 * params.n_cavities / params.hopping
    else:
        t_max = args.t_max
    if args.grid_points < 2:
        raise ValueError("--grid-points must be at least 2")
    times = np.linspace(0.0, t_max, args.grid_points)
    trace = population_trace(params, times, injection_site=args.injection_site)
    if args.format == "csv":
        io_mod.write_trace_csv(trace, args.output)
    else:
        io_mod.write_trace_json(trace, args.output)
    io_mod.write_metadata_sidecar(args.output, {
        "command": "evolve",
        "params": io_mod.params_to_dict(params),
        "grid": {"t_max": t_max, "points": args.grid_points},
        "injection_site": args.injection_site,
        "format": args.format,
        "wall_time_s": time.perf_counter() - start,
    })
    return 0


def cmd_sweep(args) -> int:
    start = time.perf_counter()
    params = _params_from_args(args)
    axis = _AXIS_NAMES[args.axis]
    tokens = [tok for tok in args.values.split(",") if tok.strip()]
    if not tokens:
        raise ValueError("--values must list at least one value")
    if axis == sweep_mod.BETA:
        values = tuple(parse_angle(tok) for tok in tokens)
    elif axis in (sweep_mod.SIZE, sweep_mod.ENCODING_K):
        values = tuple(int(tok) for tok in tokens)
    else:
        values = tuple(float(tok) for tok in tokens)
    window = None if args.t_max is None else (0.0, args.t_max)
    spec = sweep_mod.SweepSpec(axis=axis, values=values, fixed=params,
                               time_window=window, grid_points=args.grid_points,
                               refine_tolerance=args.refine_tol,
                               encoding_k=args.encoding_k)
    result = sweep_mod.scan(spec, workers=args.workers)
    if args.format == "csv":
        io_mod.write_sweep_csv(result, args.output)
    else:
        io_mod.write_sweep_json(result, args.output)
    io_mod.write_metadata_sidecar(args.output, {
        "command": "sweep",
        "spec": io_mod.sweep_spec_to_dict(result),
        "workers": args.workers,
        "format": args.format,
        "point_wall_times_s": [p.wall_time for p in result.points],
        "wall_time_s": time.perf_counter() - start,
    })
    return 0


def cmd_verify(args) -> int:
    report = run_verification(n_max=args.n_max, draws=args.draws,
                              tolerance=args.tolerance,
                              lambda_bias=args.inject_lambda_error)
    width = max(len(check.name) for check in report.checks)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{check.name:<{width}}  max_error={check.max_error:.3e}  "
              f"tolerance={check.tolerance:.1e}  {status}")
    if not report.passed:
        failing = [check.name for check in report.checks if not check.passed]
        print(f"FAILED: {', '.join(failing)}", file=sys.stderr)
        return 2
    print("all checks passed")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"evolve": cmd_evolve, "sweep": cmd_sweep, "verify": cmd_verify}
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
