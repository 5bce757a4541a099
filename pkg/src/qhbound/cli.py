"""Command-line interface.

Exit codes: 0 ok, 1 usage or validation error, 2 assertion or certification
failure, 3 brute-force workload refused.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Sequence

from .bounds import BoundReport, CodeParams, InvalidParameters, hamming_check, singleton_check
from .distance import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    low_weight_gauge_element,
    min_distance,
    min_stabilizer_weight,
    workload_estimate,
)
from .families import rect_family
from .lattice import build_bacon_shor, certify_parameters
from .proof import margins_strictly_increasing, verify_chain
from .scan import CSV_HEADER, FAMILIES, scan

BUDGET_ENV = "QHBOUND_BUDGET"
MAX_DIGITS = 30

EXIT_OK, EXIT_USAGE, EXIT_ASSERT, EXIT_REFUSED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt_int(value: int) -> str:
    text = str(value)
    if len(text) > MAX_DIGITS:
        return f"{text[:MAX_DIGITS]}…({len(text)} digits)"
    return text


def render_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """Plain text table; ints and signed floats are right-aligned."""
    cells = [[fmt_int(v) if isinstance(v, int) and not isinstance(v, bool) else
              (f"{v:+.3f}" if isinstance(v, float) else str(v)) for v in row]
             for row in rows]  # fmt: skip
    right = [
        all(isinstance(row[i], (int, float)) and not isinstance(row[i], bool) for row in rows)
        for i in range(len(headers))
    ]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(headers)]

    def line(values):
        parts = [v.rjust(w) if al else v.ljust(w) for v, w, al in zip(values, widths, right)]
        return "  ".join(parts).rstrip()

    return "\n".join([line(headers)] + [line(r) for r in cells])


def parse_range(text: str, name: str) -> range:
    """``"3"`` or ``"1..5"`` (inclusive) into a range of positive integers."""
    lo_text, sep, hi_text = text.partition("..")
    try:
        lo = int(lo_text)
        hi = int(hi_text) if sep else lo
    except ValueError:
        raise UsageError(f"--{name}: expected N or LO..HI, got {text!r}") from None
    if lo < 1:
        raise UsageError(f"--{name}: bounds must be positive, got {text!r}")
    if lo > hi:
        raise UsageError(f"--{name}: lower bound exceeds upper bound in {text!r}")
    return range(lo, hi + 1)


def _verdict(report: BoundReport) -> str:
    return "holds" if report.satisfied else "VIOLATED"


def _report_json(report: BoundReport) -> dict:
    data = report.summary()
    data["note"] = report.note
    return data


def cmd_check(args) -> int:
    try:
        params = CodeParams(args.n, args.k, args.r, args.d)
    except InvalidParameters as exc:
        raise UsageError(f"invalid parameters: {exc}") from None
    ham = hamming_check(params)
    sing = singleton_check(params)
    if args.json:
        out = {
            "n": params.n,
            "k": params.k,
            "r": params.r,
            "d": params.d,
            "hamming": _report_json(ham),
            "singleton": _report_json(sing),
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"code {params}")
        rows = []
        for label, rep, lhs_name, rhs_name in (
            ("hamming", ham, "2^(n-k-r)", f"sphere(n,{params.radius})"),
            ("singleton", sing, "n-2(d-1)", "k+r"),
        ):
            op = ">=" if rep.satisfied else "<"
            rows.append([label, lhs_name, rep.lhs, op, rep.rhs, rhs_name,
                         _verdict(rep), rep.margin_bits, rep.note])  # fmt: skip
        print(render_table(
            ["bound", "lhs", "", "", "", "rhs", "verdict", "margin_bits", "note"], rows
        ))  # fmt: skip
    if args.assert_holds and not ham.satisfied:
        print("assertion failed: Hamming bound is violated", file=sys.stderr)
        return EXIT_ASSERT
    if args.assert_violates and ham.satisfied:
        print("assertion failed: Hamming bound holds", file=sys.stderr)
        return EXIT_ASSERT
    return EXIT_OK


def cmd_scan(args) -> int:
    a_range = parse_range(args.a, "a") if args.a else None
    b_range = parse_range(args.b, "b") if args.b else None
    t_range = parse_range(args.t, "t") if args.t else None
    if args.family == "odd" and t_range is None:
        raise UsageError("scan odd requires --t")
    if args.family in ("square", "rect") and a_range is None:
        raise UsageError(f"scan {args.family} requires --a")
    records = scan(args.family, a_range, b_range, t_range, args.violations_only)
    if args.json:
        print(json.dumps([r.to_dict() for r in records], indent=2))
    elif args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(r.csv_row())
    else:
        rows = [
            [r.family, r.a, r.b, "" if r.t is None else r.t, str(r.params),
             r.hamming.lhs, r.hamming.rhs, "yes" if r.hamming.satisfied else "NO",
             r.hamming.margin_bits, "yes" if r.singleton.satisfied else "NO"]
            for r in records
        ]  # fmt: skip
        print(render_table(
            ["family", "a", "b", "t", "params", "ham_lhs", "ham_rhs", "hamming",
             "margin_bits", "singleton"], rows,
        ))  # fmt: skip
    return EXIT_OK


def cmd_proof(args) -> int:
    if args.t_max < 1:
        raise UsageError(f"--t-max must be a positive integer, got {args.t_max}")
    reports = verify_chain(args.t_max)
    increasing = margins_strictly_increasing(reports)
    ok = increasing and all(rep.all_ok for rep in reports)
    if args.json:
        out = {
            "t_max": args.t_max,
            "all_ok": ok,
            "margins_strictly_increasing": increasing,
            "rows": [rep.to_dict() for rep in reports],
        }
        print(json.dumps(out, indent=2))
    else:
        flag = {True: "ok", False: "FAIL"}.get
        rows = [
            [rep.t, flag(rep.quadratic_ok), flag(rep.power_ok), flag(rep.binomial_ok),
             flag(rep.suffices_ok), flag(rep.full_violation_ok), flag(rep.implication_ok),
             rep.hamming_lhs, rep.hamming_rhs, rep.margin_bits]
            for rep in reports
        ]  # fmt: skip
        print(render_table(
            ["t", "quadratic", "power", "binomial", "suffices", "violation",
             "implication", "2^(4t)", "sphere", "margin_bits"], rows,
        ))  # fmt: skip
        print(f"margins strictly increasing: {flag(increasing)}")
        print("all checks passed" if ok else "SOME CHECKS FAILED")
    return EXIT_OK if ok else EXIT_ASSERT


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{BUDGET_ENV} must be positive, got {raw!r}")
    return value


def _distance_section(code, max_weight: int, budget: int, workers: int) -> tuple[dict, int]:
    expected = rect_family(code.a, code.b).d
    workload = workload_estimate(code.n, max_weight)
    info: dict = {
        "max_weight": max_weight,
        "budget": str(budget),
        "workload": str(workload),
        "expected_d": expected,
    }
    try:
        result = min_distance(code, max_weight, budget, workers)
    except BudgetExceeded:
        info["refused"] = True
        return info, EXIT_REFUSED
    info["refused"] = False
    info.update(result.to_dict())
    status = EXIT_OK
    info["matches"] = not result.truncated and result.d == expected
    if not info["matches"]:
        status = EXIT_ASSERT
    if not result.truncated:
        gauge_witness = low_weight_gauge_element(code, result.d, budget, workers)
        info["purity"] = "pure" if gauge_witness is None else "impure"
        info["purity_witness"] = None if gauge_witness is None else str(gauge_witness)
    try:
        info["min_stabilizer_weight"] = min_stabilizer_weight(code, budget)
    except BudgetExceeded:
        info["min_stabilizer_weight"] = None
    return info, status


def cmd_code(args) -> int:
    if args.a < 1 or args.b < 1:
        raise UsageError(f"lattice dimensions must be positive, got {args.a}x{args.b}")
    budget = args.budget if args.budget is not None else default_budget()
    if budget < 1:
        raise UsageError("--budget must be positive")
    code = build_bacon_shor(args.a, args.b)
    max_weight = args.max_weight if args.max_weight is not None else min(args.a, args.b)
    if args.distance and not 1 <= max_weight <= code.n:
        raise UsageError(f"--max-weight must lie in 1..{code.n}")
    certified = certify_parameters(code)
    status = EXIT_OK if certified else EXIT_ASSERT
    dist = None
    if args.distance:
        dist, dist_status = _distance_section(code, max_weight, budget, args.workers)
        status = max(status, dist_status)
    if args.json:
        out = code.to_dict()
        out["params"] = str(rect_family(code.a, code.b))
        out["certified"] = certified
        out["distance"] = dist
        print(json.dumps(out, indent=2))
    else:
        print(f"Bacon-Shor {code.a}x{code.b}: n={code.n} k={code.k} r={code.r} s={code.s}")
        print(f"family parameters {rect_family(code.a, code.b)}")
        print(f"certified: {'yes' if certified else 'NO'}")
        print(f"gauge generators ({len(code.gauge)}):")
        for g in code.gauge.strings():
            print(f"  {g}")
        print(f"stabilizer generators ({len(code.stabilizer)}):")
        for g in code.stabilizer.strings():
            print(f"  {g}")
        if dist is not None:
            print(f"distance search: max_weight={max_weight} workload={fmt_int(workload_estimate(code.n, max_weight))}")
            if dist["refused"]:
                print("  refused: workload exceeds budget")
            elif dist["truncated"]:
                print(f"  no dressed logical up to weight {max_weight}")
            else:
                print(f"  d = {dist['d']} (expected {dist['expected_d']}), witness {dist['witness']}")
                print(f"  enumerated {dist['enumerated']} candidates")
                print(f"  {dist['purity']}" + (
                    f", gauge element {dist['purity_witness']}" if dist["purity_witness"] else ""
                ))
            if dist.get("min_stabilizer_weight") is not None:
                print(f"  min stabilizer weight {dist['min_stabilizer_weight']}")
    if not certified:
        print("certification failed", file=sys.stderr)
    if dist is not None and dist["refused"]:
        print(
            f"refusing brute force: workload {dist['workload']} exceeds budget {budget}",
            file=sys.stderr,
        )
    elif dist is not None and not dist.get("matches", True):
        print("distance does not match min(a, b)", file=sys.stderr)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qhbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="evaluate the Hamming and Singleton bounds")
    for name in ("n", "k", "r", "d"):
        p.add_argument(name, type=int)
    p.add_argument("--json", action="store_true")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--assert-holds", action="store_true")
    group.add_argument("--assert-violates", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="evaluate both bounds over a code family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--a", help="lattice rows, N or LO..HI")
    p.add_argument("--b", help="lattice columns for the rect family (defaults to --a)")
    p.add_argument("--t", help="index range for the odd family")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--violations-only", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("proof", help="verify the violation argument for t = 1..t_max")
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_proof)

    p = sub.add_parser("code", help="build and certify a Bacon-Shor code")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--distance", action="store_true", help="run the brute-force oracle")
    p.add_argument("--max-weight", type=int, help="defaults to min(a, b)")
    p.add_argument("--budget", type=int, help=f"candidate limit (env {BUDGET_ENV})")
    p.add_argument("--workers", type=int, default=1, help="processes; 0 = one per CPU")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_code)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qhbound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
