"""Command-line front end.

    xyquench run --gamma 1 --j0 0.5 --j1 1 --t-max 20 --t-steps 201
    xyquench run --gamma 1 --j0 0.5 --j1 1 --asymptotic
    xyquench sweep --sweep-x j0:0:5:101 --sweep-y j1:0:5:101 --asymptotic
    xyquench reproduce 4a --out fig4a.csv
    xyquench oracle ed-small-n

Exit status: 0 success, 1 usage error, 2 numerical-consistency error,
3 resource error.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__
from .correlators import ASYMPTOTIC
from .errors import ConfigurationError, NumericalConsistencyError, ResourceError
from .model import GRIDS, QuenchParams, beta_from_kt
from .presets import FIGURE_IDS, reproduce
from .sweep import OBSERVABLES, Axis, SweepGrid, describe_fixed, evaluate, run_dynamics, run_sweep, to_csv

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL, EXIT_RESOURCE = 0, 1, 2, 3
ORACLE_SUITES = ("mode-propagator", "ed-small-n", "wootters-xstate")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which we reserve for numerics
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _nonneg(text):
    v = float(text)
    if not (v >= 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"expected a finite value >= 0, got {text!r}")
    return v


def _observables(text):
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    for name in names:
        if name not in OBSERVABLES:
            raise argparse.ArgumentTypeError(
                f"unknown observable {name!r}; choose from {', '.join(OBSERVABLES)}"
            )
    return names


def _add_physics(p):
    g = p.add_argument_group("physical parameters")
    g.add_argument("--gamma", type=float, default=1.0, help="anisotropy in [0, 1] (default 1)")
    g.add_argument("--j0", type=float, default=1.0, help="coupling before the quench")
    g.add_argument("--j1", type=float, default=1.0, help="coupling after the quench")
    g.add_argument("--h0", type=float, default=1.0, help="field before the quench")
    g.add_argument("--h1", type=float, default=1.0, help="field after the quench")
    g.add_argument("--kt", type=_nonneg, default=0.0, help="temperature; 0 is the ground state")
    g.add_argument("--n-spins", type=int, default=1000, help="chain length N (even, default 1000)")
    g.add_argument("--grid", choices=GRIDS, default="midpoint",
                   help="momentum grid: antiperiodic midpoints (default) or uniform 2 pi p / N")
    o = p.add_argument_group("output")
    o.add_argument("--observable", type=_observables, default=("concurrence_r1",),
                   help=f"comma-separated list from: {', '.join(OBSERVABLES)}")
    o.add_argument("--separation", type=int, default=1,
                   help="site separation r for concurrence, sx, sy, sz (default 1)")
    o.add_argument("--out", default="-", help="output CSV file (default standard output)")
    o.add_argument("--workers", type=int, default=1,
                   help="worker processes; 0 uses every CPU (default 1)")


def _add_time(p):
    g = p.add_argument_group("time")
    g.add_argument("--t-max", type=float, help="last sample time (hbar = 1, energies as given)")
    g.add_argument("--t-steps", type=int, help="number of uniformly spaced samples")
    g.add_argument("--asymptotic", action="store_true", help="use the t -> infinity limit")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xyquench", description="Entanglement after a quench of the XY chain.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True

    run = sub.add_parser("run", help="time series, or one asymptotic point")
    _add_physics(run)
    _add_time(run)

    sweep = sub.add_parser("sweep", help="1-D or 2-D parameter map")
    _add_physics(sweep)
    _add_time(sweep)
    sweep.add_argument("--time", type=_nonneg, help="fixed time for a sweep without a t axis")
    sweep.add_argument("--sweep-x", required=True, metavar="NAME:MIN:MAX:STEPS")
    sweep.add_argument("--sweep-y", metavar="NAME:MIN:MAX:STEPS")

    rep = sub.add_parser("reproduce", help="emit the CSV behind one figure")
    rep.add_argument("figure_id", help=f"one of: {', '.join(FIGURE_IDS)}")
    rep.add_argument("--n-spins", type=int, default=1000)
    rep.add_argument("--grid", choices=GRIDS, default="midpoint")
    rep.add_argument("--resolution", type=int, help="points per sweep axis (default 101)")
    rep.add_argument("--out", default="-")
    rep.add_argument("--workers", type=int, default=1)

    orc = sub.add_parser("oracle", help="run an independent cross-check")
    orc.add_argument("suite", choices=ORACLE_SUITES)
    orc.add_argument("--seed", type=int, default=0)
    return parser


def _params(args) -> QuenchParams:
    return QuenchParams(
        gamma=args.gamma, j0=args.j0, j1=args.j1, h0=args.h0, h1=args.h1,
        beta=beta_from_kt(args.kt), n_spins=args.n_spins, grid=args.grid,
    )


def _fixed(args) -> dict:
    return {
        "gamma": args.gamma, "j0": args.j0, "j1": args.j1, "h0": args.h0, "h1": args.h1,
        "kt": args.kt, "n_spins": args.n_spins, "grid": args.grid,
    }


def _workers(args):
    return None if args.workers == 0 else args.workers


def _emit(text, out):
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_run(args) -> int:
    params = _params(args)
    fixed = describe_fixed(_fixed(args))
    if args.asymptotic:
        if args.t_max is not None or args.t_steps is not None:
            raise UsageError("--asymptotic cannot be combined with --t-max/--t-steps")
        values = evaluate(params, ASYMPTOTIC, args.observable, args.separation)
        header, rows = list(args.observable), [[values[o] for o in args.observable]]
        comments = [f"{fixed} separation={args.separation} asymptotic"]
    else:
        if args.t_max is None or args.t_steps is None:
            raise UsageError("give --t-max and --t-steps, or --asymptotic")
        header, rows = run_dynamics(params, args.t_max, args.t_steps, args.observable,
                                    args.separation, workers=_workers(args))
        comments = [f"{fixed} separation={args.separation} t_max={args.t_max:g} "
                    f"t_steps={args.t_steps}"]
    _emit(to_csv(header, rows, comments), args.out)
    return EXIT_OK


# parameters overwritten by each lambda-style axis
_DERIVED = {"lambda": {"j0", "j1"}, "lambda0": {"j0"}, "lambda1": {"j1"}}


def cmd_sweep(args) -> int:
    axes = [Axis.parse(args.sweep_x)] + ([Axis.parse(args.sweep_y)] if args.sweep_y else [])
    if args.t_max is not None or args.t_steps is not None:
        raise UsageError("use a t axis (--sweep-x t:0:T:STEPS) instead of --t-max/--t-steps")
    if args.asymptotic and args.time is not None:
        raise UsageError("--asymptotic cannot be combined with --time")
    grid = SweepGrid(
        x=axes[0], y=axes[1] if len(axes) > 1 else None, fixed=_fixed(args),
        observables=args.observable, separation=args.separation,
        asymptotic=args.asymptotic, time=args.time,
    )
    swept = {a.name for a in axes}
    derived = set().union(*(_DERIVED.get(name, {name}) for name in swept))
    fixed = {k: v for k, v in grid.fixed.items() if k not in derived}
    when = "asymptotic" if grid.asymptotic else (
        "t axis" if "t" in swept else f"t={grid.time:g}")
    comments = [
        f"{describe_fixed(fixed)} separation={args.separation} {when}",
        "axes " + " ".join(f"{a.name}:{a.start:g}:{a.stop:g}:{a.steps}" for a in axes),
    ]
    header, rows = run_sweep(grid, workers=_workers(args))
    _emit(to_csv(header, rows, comments), args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    header, rows, comments = reproduce(args.figure_id, n_spins=args.n_spins,
                                       workers=_workers(args), grid=args.grid,
                                       resolution=args.resolution)
    _emit(to_csv(header, rows, comments), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    from . import checks

    report = checks.SUITES[args.suite](np.random.default_rng(args.seed))
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_NUMERICAL


COMMANDS = {"run": cmd_run, "sweep": cmd_sweep, "reproduce": cmd_reproduce, "oracle": cmd_oracle}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalConsistencyError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ResourceError, MemoryError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
