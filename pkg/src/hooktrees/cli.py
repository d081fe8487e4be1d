"""Command line interface.

Five subcommands: ``count``, ``enumerate``, ``hooks``, ``verify``, and
``series``.  Verification reports serialize to text, json (an array of
objects matching ``REPORT_SCHEMA``), or csv with the same columns.  Output
is byte-identical across repeated runs with the same flags, including runs
that parallelize internally; pass ``--timing`` to trade that reproducibility
for wall-clock numbers in the ``elapsed_ms`` field.

Polynomials print as exact rational coefficient lists, lowest degree
first, in json and csv, and human-readable like ``(5/2)x^2 - (1/2)x`` in
text mode.  Position sets are comma-separated 1-based positions; the
``verify --S all`` form expands to every subset of [1..m].
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebra import Poly, closed_omega, closed_phi, solve_omega, solve_phi
from .hooks import hook_profile
from .identities import (
    FAMILIES,
    IdentitySpec,
    VerificationReport,
    _TAKES_S,
    _NO_M,
    all_position_subsets,
    verify_suite,
)
from .trees import DecodeError, MAryTree, count_trees, decode, enumerate_trees

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "family": {"type": "string"},
        "m": {"type": ["integer", "null"]},
        "n": {"type": "integer"},
        "S": {"type": ["array", "null"], "items": {"type": "integer"}},
        "pass": {"type": "boolean"},
        "lhs": {"type": "array", "items": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}},
        "rhs": {"type": "array", "items": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}},
        "trees_visited": {"type": "integer"},
        "elapsed_ms": {"type": "number"},
    },
    "required": ["family", "m", "n", "S", "pass", "lhs", "rhs", "trees_visited", "elapsed_ms"],
    "additionalProperties": False,
}


def coefficient_strings(value: Poly | Fraction | None) -> list[str]:
    """A Poly or Fraction as exact coefficient strings, lowest degree first."""
    if value is None:
        return []
    if isinstance(value, Fraction):
        return [str(value)]
    return [str(c) for c in value.coeffs]


def report_to_dict(report: VerificationReport, timing: bool = False) -> dict:
    """One report as a json-ready dict matching ``REPORT_SCHEMA``."""
    spec = report.spec
    return {
        "family": spec.family,
        "m": spec.m,
        "n": spec.n,
        "S": sorted(spec.S) if spec.S is not None else None,
        "pass": report.passed,
        "lhs": coefficient_strings(report.lhs),
        "rhs": coefficient_strings(report.rhs),
        "trees_visited": report.trees_visited,
        "elapsed_ms": round(report.elapsed * 1000.0, 3) if timing else 0,
    }


def render_reports(reports, fmt: str, timing: bool = False) -> str:
    """Render verification reports as text, json, or csv."""
    rows = [report_to_dict(r, timing) for r in reports]
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_SCHEMA["required"])
        for row in rows:
            writer.writerow(
                [
                    row["family"],
                    row["m"] if row["m"] is not None else "",
                    row["n"],
                    ",".join(str(p) for p in row["S"]) if row["S"] is not None else "",
                    "true" if row["pass"] else "false",
                    " ".join(row["lhs"]),
                    " ".join(row["rhs"]),
                    row["trees_visited"],
                    row["elapsed_ms"],
                ]
            )
        return buf.getvalue()
    lines = []
    for report, row in zip(reports, rows):
        verdict = "PASS" if row["pass"] else "FAIL"
        s_text = "{" + ",".join(str(p) for p in row["S"]) + "}" if row["S"] is not None else "-"
        lhs = str(report.lhs) if report.lhs is not None else "-"
        rhs = str(report.rhs) if report.rhs is not None else "-"
        line = (
            f"{verdict} {row['family']} m={row['m'] if row['m'] is not None else '-'} "
            f"n={row['n']} S={s_text} trees={row['trees_visited']} lhs={lhs} rhs={rhs}"
        )
        if report.note:
            line += f" note={report.note}"
        lines.append(line)
    passed = sum(1 for row in rows if row["pass"])
    lines.append(f"{passed}/{len(rows)} passed")
    return "\n".join(lines) + "\n"


def _parse_positions(text: str) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad position list {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hooktrees",
        description="Exact hook-length statistics and identity verification "
        "on complete m-ary trees and plane forests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count complete m-ary trees")
    p.add_argument("--arity", type=int, required=True, help="arity m >= 2")
    p.add_argument("--internal", type=int, required=True, help="internal vertex count n >= 0")

    p = sub.add_parser("enumerate", help="stream preorder codes in canonical order")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--internal", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="stop after this many trees")

    p = sub.add_parser("hooks", help="per-vertex hook statistics of one tree")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--code", type=str, required=True, help="preorder 0/1 code")
    p.add_argument("--S", type=str, default=None, help="pruned positions, e.g. 1,2")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("verify", help="verify an identity family over a grid")
    p.add_argument("--family", type=str, required=True, choices=FAMILIES)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--S", type=str, default=None, help="positions like 1,2 or 'all'")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timing", action="store_true", help="include wall-clock elapsed_ms")

    p = sub.add_parser("series", help="solve a series recurrence and compare closed forms")
    p.add_argument("--solver", choices=("omega", "phi"), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--s", type=int, default=None, help="composition power (phi only)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    return parser


def _cmd_count(args, parser) -> int:
    if args.arity < 2:
        parser.error("--arity must be >= 2")
    if args.internal < 0:
        parser.error("--internal must be >= 0")
    print(count_trees(args.arity, args.internal))
    return 0


def _cmd_enumerate(args, parser) -> int:
    if args.arity < 2:
        parser.error("--arity must be >= 2")
    if args.internal < 0:
        parser.error("--internal must be >= 0")
    if args.limit is not None and args.limit < 0:
        parser.error("--limit must be >= 0")
    emitted = 0
    for tree in enumerate_trees(args.arity, args.internal):
        if args.limit is not None and emitted >= args.limit:
            break
        print(tree.encode())
        emitted += 1
    return 0


def _cmd_hooks(args, parser) -> int:
    if args.arity < 2:
        parser.error("--arity must be >= 2")
    try:
        tree = decode(args.code, args.arity)
    except DecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    subsets = []
    if args.S is not None:
        try:
            subsets = [_parse_positions(args.S)]
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    try:
        profile = hook_profile(tree, subsets)
    except ValueError as exc:
        parser.error(str(exc))
    s_key = subsets[0] if subsets else None
    rows = []
    for idx in sorted(profile.h):
        row = {"index": idx, "h": profile.h[idx], "hcal": profile.hcal[idx]}
        if s_key is not None:
            row["hbb"] = profile.hbb[s_key][idx]
        rows.append(row)
    if args.format == "json":
        doc = {
            "arity": args.arity,
            "code": args.code,
            "S": sorted(s_key) if s_key is not None else None,
            "vertices": rows,
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        header = ["index", "h", "hcal"] + (["hbb"] if s_key is not None else [])
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[col] for col in header])
    else:
        header = f"{'index':>5} {'h':>4} {'hcal':>5}"
        if s_key is not None:
            header += f"  hbb{{{','.join(str(p) for p in sorted(s_key))}}}"
        print(header)
        for row in rows:
            line = f"{row['index']:>5} {row['h']:>4} {row['hcal']:>5}"
            if s_key is not None:
                line += f"  {row['hbb']}"
            print(line)
    return 0


def _cmd_verify(args, parser) -> int:
    family = args.family
    if family in _NO_M:
        if args.m is not None:
            parser.error(f"--m is not accepted by family {family}")
    elif args.m is None:
        parser.error(f"--family {family} requires --m")
    if args.n_max < 0:
        parser.error("--n-max must be >= 0")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")

    subsets: list[frozenset[int] | None] = [None]
    if args.S is not None:
        if family not in _TAKES_S:
            parser.error(f"--S is not accepted by family {family}")
        if args.S == "all":
            subsets = list(all_position_subsets(args.m))
        else:
            try:
                subsets = [_parse_positions(args.S)]
            except argparse.ArgumentTypeError as exc:
                parser.error(str(exc))

    n_min = 1 if family == "postnikov" else 0
    grid = [
        IdentitySpec(family, m=args.m, n=n, S=subset)
        for subset in subsets
        for n in range(n_min, args.n_max + 1)
    ]
    result = verify_suite(grid, jobs=args.jobs)
    sys.stdout.write(render_reports(result.reports, args.format, timing=args.timing))
    return 0 if result.all_passed else 1


def _cmd_series(args, parser) -> int:
    if args.a < 1 or args.b < 1:
        parser.error("--a and --b must be >= 1")
    if args.order < 0:
        parser.error("--order must be >= 0")
    if args.solver == "omega":
        if args.s is not None:
            parser.error("--s is only accepted by the phi solver")
        series = solve_omega(args.a, args.b, args.order)
        closed = lambda n: closed_omega(args.a, args.b, n)
    else:
        s = args.s if args.s is not None else 0
        if s < 0:
            parser.error("--s must be >= 0")
        series = solve_phi(args.a, args.b, s, args.order)
        closed = lambda n: closed_phi(args.a, args.b, s, n)

    rows = []
    for n in range(args.order + 1):
        expected = Poly([1]) if n == 0 else closed(n)
        rows.append(
            {
                "n": n,
                "coefficients": coefficient_strings(series.coeffs[n]),
                "closed_form": coefficient_strings(expected),
                "match": series.coeffs[n] == expected,
            }
        )
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "coefficients", "closed_form", "match"])
        for row in rows:
            writer.writerow(
                [
                    row["n"],
                    " ".join(row["coefficients"]),
                    " ".join(row["closed_form"]),
                    "true" if row["match"] else "false",
                ]
            )
    else:
        for n, row in enumerate(rows):
            print(f"t^{n}: {series.coeffs[n]}  match={row['match']}")
    return 0 if all(row["match"] for row in rows) else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": _cmd_count,
        "enumerate": _cmd_enumerate,
        "hooks": _cmd_hooks,
        "verify": _cmd_verify,
        "series": _cmd_series,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
