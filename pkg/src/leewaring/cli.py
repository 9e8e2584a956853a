"""Command-line front end.

Subcommands: bounds (tables), construct (extremal vectors with a
self-check certificate), check (admissibility of a given vector), oracle
(brute force vs formula), waring (thm1 / thm2 / remarks / generic).

Exit codes: 0 success or match, 1 verified mismatch (a falsified formula
or failed self-check; never expected), 2 usage, budget or hypothesis
error, 3 vector not admissible in `check`, 4 Waring number undefined.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from math import gcd

from . import bounds as bnd
from .admissible import canonical_shift, is_admissible, norm_sequence
from .construct import construct_max_lee, construct_max_norm1
from .errors import BudgetError
from .ffwaring import (
    DEFAULT_FIELD_BUDGET,
    FqField,
    WaringReport,
    find_irreducible,
    verify_remarks,
    verify_theorem1,
    verify_theorem2,
    waring_number,
)
from .modring import ModVec, NormKind, norm
from .oracle import DEFAULT_BUDGET, brute_max_admissible

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NOT_ADMISSIBLE = 3
EXIT_UNDEFINED = 4


def _parse_range(text: str) -> range:
    """'2..5' -> range(2, 6); a single number is a one-element range."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}, expected N or N..M")
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 1 <= lo <= hi")
    return range(lo, hi + 1)


def _parse_norm(text: str) -> NormKind:
    try:
        return NormKind(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown norm {text!r}, expected one|lee")


def _parse_vec(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed vector {text!r}, expected e.g. 0,2,1")


def _vec_str(v: ModVec) -> str:
    return ",".join(str(c) for c in v.coords)


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


def cmd_bounds(args) -> int:
    rows = []
    for m in args.m:
        for r in args.r:
            rows.append(
                {
                    "m": m,
                    "r": r,
                    "g": bnd.g_bound(m, r),
                    "h": bnd.h_bound(m, r),
                    "case": bnd.bound_case(m, r).value,
                    "rho": bnd.covering_radius(m, r),
                }
            )
    if args.format == "csv":
        _emit_csv(["m", "r", "g", "h", "case", "rho"], [list(row.values()) for row in rows])
    elif args.format == "json":
        _emit_json(rows)
    else:
        print(f"{'m':>4} {'r':>4} {'g':>8} {'h':>8} {'case':>14} {'rho':>8}")
        for row in rows:
            print(
                f"{row['m']:>4} {row['r']:>4} {row['g']:>8} {row['h']:>8} "
                f"{row['case']:>14} {row['rho']:>8}"
            )
    return EXIT_OK


def cmd_construct(args) -> int:
    m, r, kind = args.m, args.r, args.norm
    if kind is NormKind.ONE:
        v = construct_max_norm1(m, r)
        target = bnd.g_bound(m, r)
    else:
        v = construct_max_lee(m, r)
        target = bnd.h_bound(m, r)
    value = norm(v, kind)
    ok = value == target and is_admissible(v, kind)
    payload = {
        "m": m,
        "r": r,
        "norm": kind.value,
        "vector": list(v.coords),
        "value": value,
        "bound": target,
        "admissible": ok,
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv(
            ["m", "r", "norm", "vector", "value", "bound", "admissible"],
            [[m, r, kind.value, " ".join(map(str, v.coords)), value, target, ok]],
        )
    else:
        print(f"m: {m}")
        print(f"r: {r}")
        print(f"norm: {kind.value}")
        print(f"vector: {_vec_str(v)}")
        print(f"value: {value}")
        print(f"bound: {target}")
        print(f"admissible: {'true' if ok else 'false'}")
    if not ok:
        print("self-check failed: constructed vector misses its bound", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_check(args) -> int:
    v = ModVec(args.m, args.vec)
    kind = args.norm
    value = norm(v, kind)
    seq = norm_sequence(v, kind)
    x, shifted = canonical_shift(v, kind)
    admissible = seq[0] == min(seq)
    payload = {
        "m": args.m,
        "norm": kind.value,
        "vector": list(v.coords),
        "value": value,
        "admissible": admissible,
        "canonical_shift": x,
        "shifted": list(shifted.coords),
        "norm_sequence": seq,
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv(
            ["m", "norm", "vector", "value", "admissible", "shift", "shifted", "norm_sequence"],
            [[
                args.m, kind.value, " ".join(map(str, v.coords)), value, admissible,
                x, " ".join(map(str, shifted.coords)), " ".join(map(str, seq)),
            ]],
        )
    else:
        print(f"vector: {_vec_str(v)}")
        print(f"norm: {value}")
        print(f"admissible: {'true' if admissible else 'false'}")
        print(f"canonical shift: {x} -> {_vec_str(shifted)}")
        print(f"norm sequence: {','.join(map(str, seq))}")
    return EXIT_OK if admissible else EXIT_NOT_ADMISSIBLE


def cmd_oracle(args) -> int:
    kind = args.norm
    try:
        result = brute_max_admissible(args.m, args.r, kind, args.budget, args.threads)
    except BudgetError as err:
        print(f"budget exceeded: {err}", file=sys.stderr)
        return EXIT_USAGE
    formula = bnd.g_bound(args.m, args.r) if kind is NormKind.ONE else bnd.h_bound(args.m, args.r)
    match = result.max_norm == formula
    payload = {
        "m": args.m,
        "r": args.r,
        "norm": kind.value,
        "oracle_max": result.max_norm,
        "formula": formula,
        "witness": list(result.witness.coords),
        "enumerated": result.enumerated,
        "match": match,
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv(
            ["m", "r", "norm", "oracle_max", "formula", "witness", "enumerated", "match"],
            [[
                args.m, args.r, kind.value, result.max_norm, formula,
                " ".join(map(str, result.witness.coords)), result.enumerated, match,
            ]],
        )
    else:
        verdict = "MATCH" if match else "MISMATCH"
        print(f"oracle max: {result.max_norm}")
        print(f"formula: {formula}")
        print(f"witness: {_vec_str(result.witness)}")
        print(f"enumerated: {result.enumerated}")
        print(verdict)
    return EXIT_OK if match else EXIT_MISMATCH


def _render_reports(reports: list[WaringReport], fmt: str) -> None:
    if fmt == "json":
        payload = [rep.to_dict() for rep in reports]
        _emit_json(payload if len(payload) != 1 else payload[0])
        return
    if fmt == "csv":
        header = ["label", "p", "n", "q", "r", "k", "k_reduced", "computed_g", "formula_g", "match"]
        rows = [[rep.to_dict()[col] for col in header] for rep in reports]
        _emit_csv(header, rows)
        return
    for rep in reports:
        computed = "NONE" if rep.computed_g is None else rep.computed_g
        line = f"{rep.label or 'g(k, q)'}: p={rep.p} q={rep.q} k={rep.k} (gcd {rep.k_reduced}) computed={computed}"
        if rep.formula_g is not None:
            line += f" formula={rep.formula_g} {'MATCH' if rep.match else 'MISMATCH'}"
        print(line)


def _reports_exit(reports: list[WaringReport]) -> int:
    if any(rep.computed_g is None for rep in reports):
        return EXIT_UNDEFINED
    if any(rep.match is False for rep in reports):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_waring(args) -> int:
    try:
        if args.subcommand == "thm1":
            reports = [verify_theorem1(args.p, args.r, args.budget)]
        elif args.subcommand == "thm2":
            reports = [verify_theorem2(args.p, args.r, args.budget)]
        elif args.subcommand == "remarks":
            reports = verify_remarks(args.p, args.budget)
        else:  # generic
            f = FqField(args.p, find_irreducible(args.p, args.n, args.budget))
            computed = waring_number(f, args.k, args.budget)
            reports = [
                WaringReport(args.p, args.n, args.k, gcd(args.k, f.q - 1), computed, label="g(k, q)")
            ]
    except BudgetError as err:
        print(f"budget exceeded: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as err:
        print(f"hypothesis failure: {err}", file=sys.stderr)
        return EXIT_USAGE
    _render_reports(reports, args.format)
    return _reports_exit(reports)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leewaring",
        description="Lee-metric covering radii of repetition codes over Z/mZ "
        "and exact Waring numbers of small finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = {"choices": ("text", "csv", "json"), "default": "text"}

    p_bounds = sub.add_parser("bounds", help="tabulate g, h, case and covering radius")
    p_bounds.add_argument("--m", type=_parse_range, required=True, help="modulus or range N..M")
    p_bounds.add_argument("--r", type=_parse_range, required=True, help="dimension or range N..M")
    p_bounds.add_argument("--format", **fmt)
    p_bounds.set_defaults(func=cmd_bounds)

    p_con = sub.add_parser("construct", help="build an extremal admissible vector")
    p_con.add_argument("--m", type=int, required=True)
    p_con.add_argument("--r", type=int, required=True)
    p_con.add_argument("--norm", type=_parse_norm, required=True)
    p_con.add_argument("--format", **fmt)
    p_con.set_defaults(func=cmd_construct)

    p_check = sub.add_parser("check", help="norm, admissibility and norm sequence of a vector")
    p_check.add_argument("--m", type=int, required=True)
    p_check.add_argument("--vec", type=_parse_vec, required=True, help="comma-separated residues")
    p_check.add_argument("--norm", type=_parse_norm, required=True)
    p_check.add_argument("--format", **fmt)
    p_check.set_defaults(func=cmd_check)

    p_oracle = sub.add_parser("oracle", help="brute-force maximum vs the closed form")
    p_oracle.add_argument("--m", type=int, required=True)
    p_oracle.add_argument("--r", type=int, required=True)
    p_oracle.add_argument("--norm", type=_parse_norm, required=True)
    p_oracle.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max cosets to enumerate")
    p_oracle.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p_oracle.add_argument("--format", **fmt)
    p_oracle.set_defaults(func=cmd_oracle)

    p_waring = sub.add_parser("waring", help="exact Waring numbers of small finite fields")
    wsub = p_waring.add_subparsers(dest="subcommand", required=True)
    for name, wants in (
        ("thm1", ("p", "r")),
        ("thm2", ("p", "r")),
        ("remarks", ("p",)),
        ("generic", ("p", "n", "k")),
    ):
        wp = wsub.add_parser(name)
        for flag in wants:
            wp.add_argument(f"--{flag}", type=int, required=True)
        wp.add_argument("--budget", type=int, default=DEFAULT_FIELD_BUDGET, help="max field size")
        wp.add_argument("--format", **fmt)
        wp.set_defaults(func=cmd_waring)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as err:
        print(f"budget exceeded: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
