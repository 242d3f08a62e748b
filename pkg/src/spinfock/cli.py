"""Command-line surface: crystal, canonical, decomp, ladders, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Output is
deterministic; --jobs (or SPINFOCK_JOBS) is accepted for interface
stability and bounds worker width, which never affects results.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import partitions as pt
from . import crystal
from . import modular
from . import verify as vf
from .canonical import CanonicalBasis

USAGE_ERROR = 2


def _add_modulus_args(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="rank n (modulus h = 2n+1)")
    group.add_argument("--p", "--h", dest="p", type=int,
                       help="odd modulus h = p directly")


def _add_jobs_arg(parser):
    parser.add_argument("--jobs", type=int,
                        default=int(os.environ.get("SPINFOCK_JOBS", "1")),
                        help="worker width hint (never changes output)")


def _modulus(args) -> int:
    h = 2 * args.n + 1 if args.n is not None else args.p
    pt.check_h(h)
    if getattr(args, "jobs", 1) < 1:
        raise ValueError("--jobs must be >= 1")
    return h


def cmd_crystal(args) -> int:
    h = _modulus(args)
    start = pt.parse_partition(args.start) if args.start else ()
    if not pt.in_dp_h(h, start):
        print(f"error: start vertex {start} is not valid for h={h}",
              file=sys.stderr)
        return USAGE_ERROR
    graph = crystal.component(h, start, args.max_degree)
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    else:
        json.dump(graph.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def cmd_canonical(args) -> int:
    h = _modulus(args)
    solver = CanonicalBasis(h, fast=not args.slow)
    M = solver.matrix(args.m)
    if args.format == "table":
        sys.stdout.write(M.render_table())
    elif args.format == "csv":
        sys.stdout.write(M.to_csv())
    else:
        json.dump(M.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def cmd_decomp(args) -> int:
    p = _modulus(args)
    R = modular.reduced_matrix(p, args.m)
    if args.format == "table":
        sys.stdout.write(R.render_table())
    elif args.format == "csv":
        sys.stdout.write(R.to_csv())
    else:
        json.dump(R.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def cmd_ladders(args) -> int:
    h = _modulus(args)
    lam = pt.parse_partition(args.partition)
    if not lam or not pt.in_dp_h(h, lam):
        print(f"error: {lam} is not a nonempty DP_{h} partition",
              file=sys.stderr)
        return USAGE_ERROR
    dec = pt.ladders(h, lam)
    if args.format == "json":
        json.dump({
            "h": h,
            "partition": list(lam),
            "ladders": [{"index": i, "residue": r, "cells": c}
                        for i, (r, c) in zip(dec.indices, dec.steps)],
        }, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0
    # residue-and-ladder diagram, shortest row on top
    for k in range(len(lam), 0, -1):
        cells = [f"{pt.residue(h, c)}_{pt.ladder_index(h, k, c)}"
                 for c in range(lam[k - 1])]
        print(" ".join(cell.ljust(5) for cell in cells).rstrip())
    word = []
    for res, cnt in reversed(dec.monomial()):
        word.append(f"f_{res}" + (f"^({cnt})" if cnt > 1 else ""))
    print("monomial: " + " ".join(word) + " |0>")
    return 0


def cmd_verify(args) -> int:
    report = vf.run_suite(args.suite, max_degree=args.max_degree,
                          seed=args.seed)
    payload = report.to_json()
    if args.suite in ("properties", "all"):
        payload["exports"] = _conjecture_exports()
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if report.ok else 1


def _conjecture_exports() -> dict:
    """Reduced-matrix data published for comparison with external tables."""
    from . import fixtures as fx
    R = modular.reduced_matrix(3, 11)
    return {
        "reduced_matrix_p3_m11": R.to_json(),
        "external_column_combinations_p3_m11": [
            [list(mu) for mu in combo]
            for combo in fx.M11_P3_EXTERNAL_COMBINATIONS
        ],
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinfock",
        description="exact twisted Fock-space engine: crystal graphs, "
                    "canonical bases, reduced decomposition matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crystal", help="emit a crystal graph component")
    _add_modulus_args(p)
    _add_jobs_arg(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--start", type=str, default="",
                   help="start vertex, e.g. 3 or 11,7,7,4 (default: empty)")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("canonical", help="print a canonical basis matrix")
    _add_modulus_args(p)
    _add_jobs_arg(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"),
                   default="table")
    p.add_argument("--slow", action="store_true",
                   help="rebuild every intermediate vector from the vacuum")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("decomp", help="print a reduced decomposition matrix")
    _add_modulus_args(p)
    _add_jobs_arg(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"),
                   default="table")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("ladders", help="show the ladder diagram and monomial")
    _add_modulus_args(p)
    _add_jobs_arg(p)
    p.add_argument("--partition", type=str, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_ladders)

    p = sub.add_parser("verify", help="run embedded fixture/property suites")
    p.add_argument("--suite", choices=("paper", "properties", "all"),
                   default="all")
    p.add_argument("--max-degree", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    _add_jobs_arg(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
