"""Command-line front end: ``nestdim render|estimate|sweep|verify``.

Exit codes: 0 success, 1 invalid arguments, 2 runtime failure.
"""
from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import acceptance
from .basesets import DBeta, EAlpha, FullCircle, Singleton, UniformCantor
from .experiments import (
    SWEEP_SCHEDULE, estimate, estimate_csv, fixed_dimension_grid, run_sweep,
    summary_line, sweep_csv, varying_dimension_grid,
)
from .nests import NestSpec, UnsupportedBaseError, generate_scene
from .render import DEFAULT_SIZE, default_eps, render
from .split import ResourceLimitError
from .theory import ParameterRangeError, alpha_interval

EXIT_OK, EXIT_VALIDATION, EXIT_RUNTIME = 0, 1, 2


class ValidationError(Exception):
    pass


def _base(args):
    if args.base == "singleton":
        return Singleton()
    if args.base == "ealpha":
        return EAlpha(_need(args.beta, "--beta (exponent of the base sequence)"))
    if args.base == "dbeta":
        return DBeta(_need(args.beta, "--beta"))
    if args.base == "cantor":
        return UniformCantor(args.N, _need(args.r, "--r"))
    return FullCircle()


def _need(value, flag):
    if value is None:
        raise ValidationError(f"{flag} is required for this base")
    return value


def nest_from_args(args) -> NestSpec:
    try:
        return NestSpec(args.kind, args.alpha, _base(args))
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def _write(path, text: str) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_render(args) -> int:
    spec = nest_from_args(args)
    eps = args.eps if args.eps is not None else default_eps(args.size)
    _write(args.out, render(generate_scene(spec, eps), args.format, args.size))
    return EXIT_OK


def cmd_estimate(args) -> int:
    spec = nest_from_args(args)
    series, report = estimate(spec, args.eps_hi, args.eps_lo, args.samples, args.counter)
    _write(args.out, estimate_csv(series, report))
    print(summary_line(report), file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_sweep(args) -> int:
    schedule = (args.eps_hi, args.eps_lo, args.samples)
    if args.mode == "fixed":
        lo, hi = alpha_interval(args.dim)
        a_lo = args.alpha_lo if args.alpha_lo is not None else lo + 0.05
        a_hi = args.alpha_hi if args.alpha_hi is not None else hi - 0.15
        grid = fixed_dimension_grid(args.dim, a_lo, a_hi, args.points)
    else:
        grid = varying_dimension_grid(args.dim_lo, args.dim_hi, args.points)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rows = run_sweep(grid, N=args.N, schedule=schedule, strict=not args.force,
                         workers=args.workers)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _write(args.out, sweep_csv(rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = acceptance.run_all(sys.stdout)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_RUNTIME


def _positive(cast):
    def parse(text):
        v = cast(text)
        if not v > 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return v
    return parse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nestdim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    nest = argparse.ArgumentParser(add_help=False)
    nest.add_argument("--kind", choices=["centre", "outer"], default="centre")
    nest.add_argument("--base", choices=["singleton", "ealpha", "dbeta", "cantor", "circle"],
                      default="singleton")
    nest.add_argument("--alpha", type=_positive(float), default=1.0)
    nest.add_argument("--beta", type=_positive(float))
    nest.add_argument("--N", type=int, default=3)
    nest.add_argument("--r", type=_positive(float))

    sched = argparse.ArgumentParser(add_help=False)
    sched.add_argument("--eps-hi", type=_positive(float), default=SWEEP_SCHEDULE[0])
    sched.add_argument("--eps-lo", type=_positive(float), default=SWEEP_SCHEDULE[1])
    sched.add_argument("--samples", type=int, default=SWEEP_SCHEDULE[2])
    sched.add_argument("--out", default="-")

    r = sub.add_parser("render", parents=[nest], help="draw a nest as SVG or EPS")
    r.add_argument("--eps", type=_positive(float))
    r.add_argument("--size", type=int, default=DEFAULT_SIZE)
    r.add_argument("--format", choices=["svg", "eps"], default="svg")
    r.add_argument("--out", default="-")
    r.set_defaults(func=cmd_render)

    e = sub.add_parser("estimate", parents=[nest, sched], help="log-log slope of one nest")
    e.add_argument("--counter", choices=["primitive", "grid"], default="primitive")
    e.set_defaults(func=cmd_estimate)

    s = sub.add_parser("sweep", parents=[sched], help="relative error across a parameter grid")
    s.add_argument("--mode", choices=["fixed", "varying"], default="fixed")
    s.add_argument("--dim", type=float, default=0.75)
    s.add_argument("--alpha-lo", type=float)
    s.add_argument("--alpha-hi", type=float)
    s.add_argument("--dim-lo", type=float, default=0.3)
    s.add_argument("--dim-hi", type=float, default=0.95)
    s.add_argument("--points", type=int, default=12)
    s.add_argument("--N", type=int, default=3)
    s.add_argument("--force", action="store_true",
                   help="accept exponents at or above 1/d (base dimension set to d)")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_VALIDATION
    try:
        if getattr(args, "samples", 3) < 3:
            raise ValidationError("--samples must be at least 3")
        return args.func(args)
    except (ValidationError, ParameterRangeError, UnsupportedBaseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
