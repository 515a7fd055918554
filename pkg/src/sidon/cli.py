"""Command-line interface.

Single JSON objects go to stdout; sweeps and surfaces go to CSV; figures are
optional PNG companions.  Exit codes: 0 success, 1 precondition/usage error,
2 resource limit or timeout.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .bound import bound_given_u, bound_optimal_u, bound_theorem
from .construct import build_in
from .core import (
    PreconditionError,
    ResourceLimitError,
    is_sidon,
    parse_interval,
    parse_intervals,
    parse_set,
)
from .geometric import build_family, verify_family
from .report import (
    SweepSpec,
    parse_grid,
    render_surface_figure,
    render_sweep_figure,
    run_sweep,
)
from .singer import singer_difference_set, singer_family
from .solver import max_sidon_bb, max_sidon_naive
from .thresholds import (
    case_bounds,
    grid_values,
    guarantee_surface,
    optimize_thresholds,
    region_minima,
)

_METHOD_FLAGS = {
    "auto": "auto",
    "i": "case_i",
    "ii": "case_ii",
    "iiia": "case_iii_a",
    "iiib": "case_iii_b",
    "iiic": "case_iii_c",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 instead of argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _append_csv(path: str, columns: tuple[str, ...], row: dict) -> None:
    target = Path(path)
    new = not target.exists()
    with target.open("a", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns)
        if new:
            writer.writeheader()
        writer.writerow(row)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sidon", description="Sidon sets in unions of integer intervals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a set for the Sidon property")
    p.add_argument("--set", required=True, help="comma-separated integers")
    p.add_argument("--weak", action="store_true", help="check distinct sums of distinct pairs")

    p = sub.add_parser("singer", help="perfect difference set mod p^2+p+1")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--translates", action="store_true", help="include the covering translates")

    p = sub.add_parser("construct", help="large Sidon set in two intervals")
    p.add_argument("--i1", required=True, help="first interval lo:hi")
    p.add_argument("--i2", required=True, help="second interval lo:hi")
    p.add_argument("--method", choices=sorted(_METHOD_FLAGS), default="auto")
    p.add_argument("--csv", help="append a result row to this CSV file")

    p = sub.add_parser("bound", help="window-counting upper bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u", type=int, help="explicit window length")
    p.add_argument("--theorem", action="store_true", help="regime-chosen window length")
    p.add_argument("--optimize", action="store_true", help="scan all window lengths")
    p.add_argument("--u-max", type=int, help="scan limit for --optimize (default n-1)")
    p.add_argument("--csv", help="append a result row to this CSV file")

    p = sub.add_parser("solve", help="exact maximum Sidon subset")
    p.add_argument("--intervals", help="interval union lo:hi,lo:hi")
    p.add_argument("--set", help="comma-separated integers")
    p.add_argument("--naive", action="store_true", help="use the exhaustive reference solver")
    p.add_argument("--timeout", type=float, help="seconds before returning best-so-far")

    p = sub.add_parser("exp", help="doubling-spaced family in n blocks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--weak", action="store_true")

    p = sub.add_parser("optimize-constants", help="max-min threshold tuning")
    p.add_argument("--grid-step", type=float, default=0.001)
    p.add_argument("--surface-csv", help="write the guarantee surface to this CSV")
    p.add_argument("--plot", help="render the guarantee surface to this image file")

    p = sub.add_parser("sweep", help="grid sweep to CSV")
    p.add_argument("--n", type=int, required=True, help="total size n1+n2")
    p.add_argument("--alpha", required=True, help="grid start:stop:step")
    p.add_argument("--beta", required=True, help="grid start:stop:step")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--methods", help="comma list from: i,ii,iiia,iiib,iiic")
    p.add_argument("--plot", help="render the sweep to this image file")

    return parser


def _cmd_verify(args) -> int:
    mode = "weak" if args.weak else "strict"
    check = is_sidon(parse_set(args.set), mode)
    out = {"is_sidon": check.is_sidon, "mode": mode}
    if check.witness is not None:
        out["witness"] = list(check.witness)
    _emit(out)
    return 0


def _cmd_singer(args) -> int:
    system = singer_family(args.p) if args.translates else singer_difference_set(args.p)
    out = {"p": system.p, "q": system.q, "D": list(system.difference_set)}
    if args.translates:
        out["translates"] = [list(t) for t in system.translates]
    _emit(out)
    return 0


def _cmd_construct(args) -> int:
    report, inst = build_in(
        parse_interval(args.i1), parse_interval(args.i2), _METHOD_FLAGS[args.method]
    )
    out = {
        "method": report.method,
        "set": list(report.elements),
        "size": report.size,
        "ratio": report.ratio,
        "verified": report.verified,
        "dropped": report.dropped,
        "n1": inst.n1,
        "n2": inst.n2,
        "gap_start": inst.gap_start,
        "alpha": inst.alpha,
        "beta": inst.beta,
    }
    _emit(out)
    if args.csv:
        _append_csv(
            args.csv,
            ("n1", "n2", "gap_start", "alpha", "beta", "method", "size", "ratio"),
            {k: out[k] for k in ("n1", "n2", "gap_start", "alpha", "beta", "method", "size", "ratio")},
        )
    return 0


def _cmd_bound(args) -> int:
    if args.u is not None:
        report = bound_given_u(args.n, args.k, args.u)
    elif args.optimize:
        u_max = args.u_max if args.u_max is not None else args.n - 1
        report = bound_optimal_u(args.n, args.k, u_max)
    else:
        report = bound_theorem(args.n, args.k)
    out = {
        "bound": report.bound,
        "u": report.u_used,
        "regime": report.regime,
        "n": args.n,
        "k": args.k,
    }
    _emit(out)
    if args.csv:
        _append_csv(
            args.csv,
            ("n", "k", "u", "bound", "regime"),
            {"n": args.n, "k": args.k, "u": report.u_used,
             "bound": report.bound, "regime": report.regime},
        )
    return 0


def _cmd_solve(args) -> int:
    if (args.set is None) == (args.intervals is None):
        raise PreconditionError("provide exactly one of --set or --intervals")
    elems = parse_set(args.set) if args.set else parse_intervals(args.intervals).to_integer_set()
    if args.naive:
        result = max_sidon_naive(elems)
    else:
        result = max_sidon_bb(elems, timeout=args.timeout)
    _emit(
        {
            "optimum": result.optimum,
            "witness": list(result.witness_set),
            "nodes_explored": result.nodes_explored,
            "elapsed": result.elapsed,
            "complete": result.complete,
        }
    )
    return 0 if result.complete else 2


def _cmd_exp(args) -> int:
    family = build_family(args.n, args.base)
    mode = "weak" if args.weak else "strict"
    check = verify_family(family, mode)
    out = {
        "n": family.n,
        "base": family.base,
        "set": list(family.elements),
        "intervals": [list(pair) for pair in family.intervals.intervals],
        "verdict": check.is_sidon,
        "mode": mode,
    }
    if check.witness is not None:
        out["witness"] = list(check.witness)
    _emit(out)
    return 0


def _cmd_optimize_constants(args) -> int:
    point = optimize_thresholds(args.grid_step)
    out = {
        "alpha0": point.alpha0,
        "beta0": point.beta0,
        "guarantee": point.guarantee,
        "active_cases": list(point.active_cases),
        "case_bounds": case_bounds(point.alpha0, point.beta0),
        "region_minima": region_minima(point.alpha0, point.beta0),
    }
    _emit(out)
    if args.surface_csv or args.plot:
        alphas = grid_values(args.grid_step, 1.0, args.grid_step)
        betas = grid_values(0.0, 2.0, args.grid_step)
        surface = guarantee_surface(alphas, betas)
        if args.surface_csv:
            with Path(args.surface_csv).open("w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["alpha0", "beta0", "guarantee"])
                for i, a in enumerate(alphas):
                    for j, b in enumerate(betas):
                        writer.writerow([float(a), float(b), float(surface[i, j])])
        if args.plot:
            render_surface_figure(
                alphas, betas, surface, (point.alpha0, point.beta0), args.plot
            )
    return 0


def _cmd_sweep(args) -> int:
    methods = None
    if args.methods:
        keys = [m.strip() for m in args.methods.split(",") if m.strip()]
        bad = [m for m in keys if m not in _METHOD_FLAGS or m == "auto"]
        if bad:
            raise PreconditionError(f"unknown methods {bad}")
        methods = tuple(_METHOD_FLAGS[m] for m in keys)
    spec = SweepSpec(
        n=args.n,
        alphas=parse_grid(args.alpha),
        betas=parse_grid(args.beta),
        out=args.out,
        methods=methods,
    )
    rows = run_sweep(spec)
    if args.plot:
        render_sweep_figure(rows, args.plot)
    _emit({"rows": len(rows), "out": args.out, "plot": args.plot})
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "singer": _cmd_singer,
    "construct": _cmd_construct,
    "bound": _cmd_bound,
    "solve": _cmd_solve,
    "exp": _cmd_exp,
    "optimize-constants": _cmd_optimize_constants,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return 1
    try:
        return _COMMANDS[args.command](args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
