"""Command line front end.

Subcommands: ``moment`` and ``cumulant`` for exact values at given times,
``grid`` for CSV tables over time grids, ``borel`` for total-progeny
distribution values, ``validate`` for Monte Carlo agreement checks, and
``bench`` for representation-size and timing diagnostics.

Exit codes: 0 success, 1 validation failure, 2 usage or parameter error,
3 size cap exceeded, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import math
import sys
import time
from typing import Sequence

import numpy as np

from .combinatorics import SizeCapError
from .moments import (
    DEFAULT_ORDER_CAP,
    CumulantCache,
    joint_cumulant,
    joint_moment,
    kappa_z_univariate,
    univariate_cumulant,
    univariate_moment,
)
from .params import KernelParams
from .simulate import MCConfig, estimate_joint_moment
from .borel import borel_cumulant, borel_moment, borel_pmf

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_SIZE_CAP = 3
EXIT_IO = 4

Z_MAX = 4.0


def _add_kernel_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--a", type=float, required=True, help="excitation amplitude a")
    sp.add_argument("--b", type=float, required=True, help="excitation decay rate b")
    sp.add_argument("--nu", type=float, default=1.0, help="immigrant intensity (default 1.0)")
    sp.add_argument(
        "--order-cap",
        type=int,
        default=DEFAULT_ORDER_CAP,
        help=f"maximum query order (default {DEFAULT_ORDER_CAP})",
    )


def _params(args: argparse.Namespace) -> KernelParams:
    return KernelParams(a=args.a, b=args.b, nu=args.nu)


def _cmd_moment(args: argparse.Namespace) -> int:
    value = joint_moment(args.times, _params(args), order_cap=args.order_cap)
    print(f"{value:.12g}")
    return EXIT_OK


def _cmd_cumulant(args: argparse.Namespace) -> int:
    value = joint_cumulant(args.times, _params(args), order_cap=args.order_cap)
    print(f"{value:.12g}")
    return EXIT_OK


def _parse_grid_slots(spec: str) -> list[list[float]]:
    """Parse 'lo:hi:npts' (free) or 'value' (fixed) slots, comma separated."""
    slots: list[list[float]] = []
    n_free = 0
    for part in spec.split(","):
        part = part.strip()
        if not part:
            raise ValueError(f"empty slot in time grid {spec!r}")
        if ":" in part:
            fields = part.split(":")
            if len(fields) != 3:
                raise ValueError(f"free slot must be lo:hi:npts, got {part!r}")
            lo, hi, npts = float(fields[0]), float(fields[1]), int(fields[2])
            if npts < 2:
                raise ValueError(f"free slot needs >= 2 points, got {npts}")
            if not hi > lo:
                raise ValueError(f"free slot needs hi > lo, got {part!r}")
            slots.append([float(v) for v in np.linspace(lo, hi, npts)])
            n_free += 1
        else:
            slots.append([float(part)])
    if not slots:
        raise ValueError("time grid needs at least one slot")
    if n_free > 2:
        raise ValueError(f"at most 2 free slots are supported, got {n_free}")
    return slots


def _cmd_grid(args: argparse.Namespace) -> int:
    slots = _parse_grid_slots(args.times)
    params = _params(args)
    cache = CumulantCache()
    free_columns = [f"t{i + 1}" for i, values in enumerate(slots) if len(values) > 1]
    rows = []
    for combo in itertools.product(*slots):
        value = joint_moment(combo, params, cache=cache, order_cap=args.order_cap)
        free_values = [v for v, values in zip(combo, slots) if len(values) > 1]
        rows.append(free_values + [value])
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        writer = csv.writer(out)
        writer.writerow(free_columns + ["value"])
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _cmd_borel(args: argparse.Namespace) -> int:
    if args.which == "pmf":
        value = borel_pmf(args.n, args.mu)
    elif args.which == "cumulant":
        value = borel_cumulant(args.n, args.mu)
    else:
        value = borel_moment(args.n, args.mu)
    print(f"{value:.12g}")
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    if args.n_paths < 1000:
        raise ValueError(f"validation needs >= 1000 paths, got {args.n_paths}")
    params = _params(args)
    analytic = joint_moment(args.times, params, order_cap=args.order_cap)
    if args.analytic_override is not None:
        analytic = args.analytic_override
    cfg = MCConfig(
        n_paths=args.n_paths, horizon=max(args.times), seed=args.seed, method=args.method
    )
    estimate = estimate_joint_moment(params, args.times, cfg)
    if estimate.std_error > 0.0:
        z = (estimate.value - analytic) / estimate.std_error
    else:
        delta = estimate.value - analytic
        z = 0.0 if delta == 0.0 else math.copysign(float("inf"), delta)
    print(f"analytic   {analytic:.12g}")
    print(f"estimate   {estimate.value:.12g}")
    print(f"std_error  {estimate.std_error:.12g}")
    print(f"z          {z:.6g}")
    if args.json:
        record = {
            "analytic": analytic,
            "z": z,
            "estimate": {
                "value": estimate.value,
                "std_error": estimate.std_error,
                "n_samples": estimate.n_samples,
                "seed": args.seed,
            },
        }
        print(json.dumps(record))
    return EXIT_OK if abs(z) <= Z_MAX else EXIT_VALIDATION


def _cmd_bench(args: argparse.Namespace) -> int:
    params = _params(args)
    cache = CumulantCache()
    print(f"{'order':>5} {'kz_terms':>9} {'cumulant_ms':>12} {'moment_ms':>10}")
    for n in range(1, args.max_order + 1):
        start = time.perf_counter()
        univariate_cumulant(n, args.t, params, cache=cache, order_cap=args.max_order)
        cumulant_ms = (time.perf_counter() - start) * 1e3
        terms = kappa_z_univariate(n, args.t, params, cache=cache, order_cap=args.max_order).term_count
        start = time.perf_counter()
        univariate_moment(n, args.t, params, cache=cache, order_cap=args.max_order)
        moment_ms = (time.perf_counter() - start) * 1e3
        print(f"{n:>5} {terms:>9} {cumulant_ms:>12.3f} {moment_ms:>10.3f}")
    print(
        "note: term counts reflect this library's canonical representation "
        "and are not comparable across implementations"
    )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hawkesmoments",
        description="Exact moments and cumulants of exponential-kernel Hawkes processes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("moment", help="joint moment E[X_t1 * ... * X_tn]")
    _add_kernel_args(sp)
    sp.add_argument("times", type=float, nargs="+", help="query times (> 0, repeats allowed)")
    sp.set_defaults(run=_cmd_moment)

    sp = sub.add_parser("cumulant", help="joint cumulant of (X_t1, ..., X_tn)")
    _add_kernel_args(sp)
    sp.add_argument("times", type=float, nargs="+", help="query times (> 0, repeats allowed)")
    sp.set_defaults(run=_cmd_cumulant)

    sp = sub.add_parser("grid", help="CSV table of joint moments over a time grid")
    _add_kernel_args(sp)
    sp.add_argument(
        "--times",
        required=True,
        help="comma-separated slots, each 'lo:hi:npts' (free, max 2) or a fixed value",
    )
    sp.add_argument("--out", required=True, help="output CSV path, or - for stdout")
    sp.set_defaults(run=_cmd_grid)

    sp = sub.add_parser("borel", help="total-progeny distribution values")
    sp.add_argument("which", choices=("pmf", "cumulant", "moment"))
    sp.add_argument("--mu", type=float, required=True, help="offspring mean in (0, 1)")
    sp.add_argument("--n", type=int, required=True, help="point / order")
    sp.set_defaults(run=_cmd_borel)

    sp = sub.add_parser("validate", help="compare an analytic moment against Monte Carlo")
    _add_kernel_args(sp)
    sp.add_argument("times", type=float, nargs="+", help="query times (> 0, repeats allowed)")
    sp.add_argument("--n-paths", type=int, default=100_000, help="simulated paths (>= 1000)")
    sp.add_argument("--seed", type=int, default=0, help="base seed for the path substreams")
    sp.add_argument("--method", choices=("cluster", "thinning"), default="cluster")
    sp.add_argument("--json", action="store_true", help="also print a JSON record")
    sp.add_argument(
        "--analytic-override",
        type=float,
        default=None,
        help="testing hook: replace the analytic value in the comparison",
    )
    sp.set_defaults(run=_cmd_validate)

    sp = sub.add_parser("bench", help="per-order timing and representation size")
    _add_kernel_args(sp)
    sp.add_argument("--t", type=float, default=2.0, help="query time (default 2.0)")
    sp.add_argument("--max-order", type=int, default=6, help="largest order to benchmark")
    sp.set_defaults(run=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.run(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
