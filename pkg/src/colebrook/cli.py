"""Command-line interface: ``colebrook {solve,sweep,approx,lambertw,table}``.

Exit codes: 0 success, 2 usage error, 3 non-convergence, 4 table mismatch,
5 I/O failure.  ``COLEBROOK_TOL`` and ``COLEBROOK_MAXITER`` override the
default solver tolerance and iteration cap.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path
from typing import Sequence

from .approx import Variant, approx_bundle
from .core import ColebrookError, FlowConditions
from .lambert_w import DEFAULT_TOL as W_TOL
from .lambert_w import DEFAULT_Z0, LambertStartError, WMethod, lambert_w, lambert_y
from .solvers import IterationTrace, Method, SolverConfig, Stop, solve
from .starting_points import StartStrategy
from .sweep import ERROR_MAP_BOUNDS, DomainSpec, Estimator, error_map, iteration_map
from .tables import TABLES, replay_table

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NONCONVERGED = 3
EXIT_TABLE_MISMATCH = 4
EXIT_IO = 5


class UsageError(Exception):
    pass


def fmt(v: float) -> str:
    return f"{v:#.15g}"


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not a number") from None


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def _grid(text: str) -> tuple[int, int]:
    try:
        nx, ny = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NXxNY, got {text!r}") from None
    return nx, ny


# --- solve ---------------------------------------------------------------------


def format_trace(trace: IterationTrace) -> str:
    """Per-iteration table: residual and derivatives at the previous iterate, new iterate."""
    keys = sorted({k for aux in trace.aux for k in aux})
    var = "lambda" if trace.method.in_lambda else "x"
    head = ["iter", "f"] + keys + [var]
    if not trace.method.in_lambda:
        head.append("lambda")
    lines = ["  ".join(f"{h:>22}" for h in head)]
    w0 = trace.iterates[0]
    start = ["0", ""] + [""] * len(keys) + [fmt(w0)]
    if not trace.method.in_lambda:
        start.append(fmt(1.0 / (w0 * w0)) if w0 > 0 else "")
    lines.append("  ".join(f"{c:>22}" for c in start))
    for k in range(1, len(trace.iterates)):
        aux = trace.aux[k - 1] if k - 1 < len(trace.aux) else {}
        w = trace.iterates[k]
        row = [str(k), fmt(trace.residuals[k - 1])]
        row += [fmt(aux[key]) if key in aux else "" for key in keys]
        row.append(fmt(w))
        if not trace.method.in_lambda:
            row.append(fmt(1.0 / (w * w)) if w > 0 and math.isfinite(w) else "")
        lines.append("  ".join(f"{c:>22}" for c in row))
    return "\n".join(lines)


def cmd_solve(args: argparse.Namespace) -> int:
    fc = FlowConditions(args.re, args.rr)
    method = Method.parse(args.method)
    start = StartStrategy.parse(args.start) if args.start else None
    cfg = SolverConfig(
        method,
        start,
        tolerance=args.tol,
        max_iterations=args.max_iter,
        strict_domain=args.strict_domain,
        stop=Stop(args.stop),
    )
    trace = solve(fc, cfg)
    if args.trace or not trace.converged:
        print(format_trace(trace))
    if not trace.converged:
        print(f"error: no convergence: {trace.failure}", file=sys.stderr)
        return EXIT_NONCONVERGED
    print(f"method      {method.value}")
    print(f"start       {cfg.effective_start}")
    print(f"iterations  {trace.iterations}")
    print(f"lambda      {fmt(trace.final_lambda)}")
    print(f"x           {fmt(trace.final_x)}")
    return EXIT_OK


# --- sweep ---------------------------------------------------------------------


def _domain(args: argparse.Namespace) -> DomainSpec:
    bounds = dict(ERROR_MAP_BOUNDS) if args.map == "error" else {}
    for name in ("re_min", "re_max", "rr_min", "rr_max"):
        value = getattr(args, name)
        if value is not None:
            bounds[name] = value
    if args.sobol is not None:
        return DomainSpec.sobol(args.sobol, **bounds)
    if args.grid is not None:
        return DomainSpec.grid(*args.grid, **bounds)
    if args.map == "error":
        return DomainSpec.sobol(**bounds)
    return DomainSpec.grid(**bounds)


def cmd_sweep(args: argparse.Namespace) -> int:
    spec = _domain(args)
    if args.map == "iteration":
        result = iteration_map(
            Method.parse(args.method),
            StartStrategy.parse(args.start) if args.start else None,
            spec,
            tol=args.tol,
            max_iterations=args.max_iter,
            jobs=args.jobs,
        )
    else:
        result = error_map(Estimator.parse(args.estimator), spec, jobs=args.jobs)
    out = Path(args.out)
    summary_path = Path(args.summary) if args.summary else out.with_suffix(".json")
    try:
        result.write_csv(out)
        result.write_summary(summary_path)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    s = result.summary()
    print(
        f"{result.label}: {s['metric_kind']} n={s['n_points']} max={fmt(s['max_value'])} "
        f"at Re={fmt(s['argmax_re'])} rr={fmt(s['argmax_rr'])} mean={fmt(s['mean'])} "
        f"nonconverged={s['n_nonconverged']}"
    )
    print(f"wrote {out} and {summary_path}")
    return EXIT_OK


# --- approx --------------------------------------------------------------------


def cmd_approx(args: argparse.Namespace) -> int:
    fc = FlowConditions(args.re, args.rr)
    bundle = approx_bundle(fc, args.level, Variant(args.variant))
    print(f"A           {fmt(bundle.a)}")
    print(f"B           {fmt(bundle.b)}")
    print(f"C           {fmt(bundle.c)}")
    print(f"nabla       {fmt(bundle.nabla)}")
    for i, x in enumerate(bundle.x_stage):
        print(f"x[{i}]        {fmt(x)}")
    print(f"lambda      {fmt(bundle.friction)}")
    return EXIT_OK


# --- lambertw ------------------------------------------------------------------


def cmd_lambertw(args: argparse.Namespace) -> int:
    y = args.y if args.y is not None else lambert_y(args.re)
    trace = lambert_w(y, WMethod(args.method), z0=args.z0, tol=args.tol, max_iterations=args.max_iter)
    if args.trace or not trace.converged:
        for k, z in enumerate(trace.iterates):
            r = trace.residuals[k] if k < len(trace.residuals) else math.nan
            print(f"{k:>4}  {fmt(z):>22}  {fmt(r):>22}")
    if not trace.converged:
        print(f"error: no convergence: {trace.failure}", file=sys.stderr)
        return EXIT_NONCONVERGED
    print(f"y           {fmt(y)}")
    print(f"iterations  {trace.iterations}")
    print(f"W           {fmt(trace.value)}")
    return EXIT_OK


# --- table ---------------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    report = replay_table(TABLES[args.id])
    print(report.render())
    if not report.ok:
        bad = [f"{c.case} / {c.row} / {c.column}" for c in report.mismatches]
        bad += [f"{name} / iterations ({p} printed, {g} replayed)" for name, p, g in report.count_mismatches]
        print("mismatched cells:\n  " + "\n  ".join(bad), file=sys.stderr)
        return EXIT_TABLE_MISMATCH
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    tol = _env_float("COLEBROOK_TOL", 1e-8)
    max_iter = _env_int("COLEBROOK_MAXITER", 100)

    parser = argparse.ArgumentParser(
        prog="colebrook", description="Iterative and explicit solvers for the Colebrook equation."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def flow(p: argparse.ArgumentParser) -> None:
        p.add_argument("--re", type=float, required=True, help="Reynolds number")
        p.add_argument("--rr", type=float, required=True, help="relative roughness eps/D")

    p = sub.add_parser("solve", help="solve one (Re, eps/D) instance")
    flow(p)
    p.add_argument("--method", default="newton-x", help=", ".join(m.value for m in Method))
    p.add_argument(
        "--start",
        help="traditional | fixed-newton | fixed-halley | fixed-3pt | approx | value:<x0> "
        "(default: the method's own)",
    )
    p.add_argument("--tol", type=float, default=tol)
    p.add_argument("--max-iter", type=int, default=max_iter)
    p.add_argument("--stop", choices=[s.value for s in Stop], default=Stop.STEP.value)
    p.add_argument("--strict-domain", action="store_true")
    p.add_argument("--trace", action="store_true", help="print the per-iteration table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="iteration-count or error map over the domain")
    p.add_argument("--map", choices=["iteration", "error"], required=True)
    p.add_argument("--method", default="newton-x")
    p.add_argument("--start")
    p.add_argument(
        "--estimator",
        default="approx:0",
        help="approx:0 | approx:1 | approx:2 | traditional | approx-seeded | lambert",
    )
    sampler = p.add_mutually_exclusive_group()
    sampler.add_argument("--grid", type=_grid, help="NXxNY log grid (default 256x256 for iteration maps)")
    sampler.add_argument("--sobol", type=int, help="Sobol sample size (default 65536 for error maps)")
    for name in ("re-min", "re-max", "rr-min", "rr-max"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--tol", type=float, default=tol)
    p.add_argument("--max-iter", type=int, default=max_iter)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--summary", help="JSON summary path (default: --out with .json suffix)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("approx", help="explicit approximation")
    flow(p)
    p.add_argument("--level", type=int, choices=[0, 1, 2], default=2)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.HALLEY.value)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("lambertw", help="principal-branch Lambert W")
    arg = p.add_mutually_exclusive_group(required=True)
    arg.add_argument("--y", type=float, help="argument of W")
    arg.add_argument("--re", type=float, help="use y = Re ln10 / 5.02")
    p.add_argument("--method", choices=[m.value for m in WMethod], default=WMethod.HALLEY.value)
    p.add_argument("--z0", type=float, default=DEFAULT_Z0)
    p.add_argument("--tol", type=float, default=W_TOL)
    p.add_argument("--max-iter", type=int, default=max_iter)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_lambertw)

    p = sub.add_parser("table", help="replay a published worked example")
    p.add_argument("id", choices=list(TABLES), help="table number, or 3pt for the three-point example")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        parser = build_parser()
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, LambertStartError, ColebrookError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
