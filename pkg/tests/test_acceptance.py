"""Exit criteria.  Each test prints one PASS/FAIL line (run with ``-s``)."""

import json
import subprocess
import sys
import time

import pytest

from qhbound.bounds import CodeParams, hamming_check, singleton_check
from qhbound.distance import (
    DEFAULT_BUDGET,
    Purity,
    low_weight_gauge_element,
    min_distance,
    purity,
)
from qhbound.families import odd_family, rect_family, square_family
from qhbound.lattice import build_bacon_shor, certify_parameters
from qhbound.proof import margins_strictly_increasing, verify_chain
from qhbound.symplectic import gf2_rank, in_span, weight

T_MAX = 200


def verdict(number: int, title: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"\n[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} failed: {title} {detail}"


def test_1_odd_family_violates_hamming_for_t_up_to_200():
    start = time.perf_counter()
    bad = []
    for t in range(1, T_MAX + 1):
        rep = hamming_check(odd_family(t))
        if not (rep.lhs == 2 ** (4 * t) and rep.lhs < rep.rhs and not rep.satisfied):
            bad.append(t)
    elapsed = time.perf_counter() - start
    verdict(1, "2^(4t) < sphere volume for t = 1..200",
            not bad and elapsed < 1.0, f"{elapsed:.3f}s, failing t: {bad[:5]}")


def test_2_proof_chain_rows_all_true():
    start = time.perf_counter()
    rows = verify_chain(T_MAX)
    elapsed = time.perf_counter() - start
    failing = [r.t for r in rows if not r.all_ok]
    ok = len(rows) == T_MAX and not failing and elapsed < 1.0
    verdict(2, "lemmas, inequality and implications for t = 1..200", ok,
            f"{elapsed:.3f}s, failing t: {failing[:5]}")


def test_3_named_instances_exact():
    a = hamming_check(CodeParams(9, 1, 4, 3))
    b = hamming_check(CodeParams(12, 1, 6, 3))
    ok = (a.lhs, a.rhs, b.lhs, b.rhs) == (16, 28, 32, 37)
    verdict(3, "[[9,1,4,3]] gives 16 vs 28 and [[12,1,6,3]] gives 32 vs 37", ok,
            f"got {a.lhs} vs {a.rhs}, {b.lhs} vs {b.rhs}")


def test_4_sanity_counterweight():
    eq = hamming_check(CodeParams(5, 1, 0, 3))
    problems = []
    for a in range(1, 51):
        for b in range(1, 51):
            rep = singleton_check(rect_family(a, b))
            if not rep.satisfied or (rep.lhs == rep.rhs) != (a == b):
                problems.append((a, b))
        sq = singleton_check(square_family(a))
        if not (sq.satisfied and sq.lhs == sq.rhs):
            problems.append(("square", a))
    ok = eq.lhs == eq.rhs == 16 and eq.satisfied and not problems
    verdict(4, "[[5,1,0,3]] tight; Singleton holds for a,b <= 50, tight iff a = b", ok,
            f"problems: {problems[:5]}")


def test_5_constructive_certification():
    start = time.perf_counter()
    bad = []
    for a in range(1, 5):
        for b in range(1, 5):
            c = build_bacon_shor(a, b)
            if not (
                certify_parameters(c)
                and c.s == a + b - 2
                and c.r == (a - 1) * (b - 1)
                and c.k == 1
                and gf2_rank(c.gauge) == 2 * a * b - a - b
            ):
                bad.append((a, b))
    elapsed = time.perf_counter() - start
    verdict(5, "Bacon-Shor lattices 1..4 x 1..4 certified", not bad and elapsed < 1.0,
            f"{elapsed:.3f}s, failing: {bad}")


def test_6_distance_oracle():
    start = time.perf_counter()
    problems = []
    for a, b in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)]:
        c = build_bacon_shor(a, b)
        res = min_distance(c, min(a, b), budget=DEFAULT_BUDGET)
        if res.truncated or res.d != min(a, b):
            problems.append((a, b, "distance", res.d))
        if min(a, b) >= 3:
            g = low_weight_gauge_element(c, res.d)
            if purity(c, res.d) is not Purity.IMPURE or g is None:
                problems.append((a, b, "purity"))
            elif weight(g) != 2 or not in_span(g, c.gauge):
                problems.append((a, b, "witness", str(g)))
    elapsed = time.perf_counter() - start
    verdict(6, "brute-force d = min(a,b); impure with weight-2 gauge witness",
            not problems and elapsed < 60.0, f"{elapsed:.3f}s, problems: {problems}")


def test_7_margin_strictly_increasing_exact():
    rows = verify_chain(T_MAX)
    verdict(7, "rhs/lhs strictly increasing in t over 1..200 (cross-multiplied)",
            margins_strictly_increasing(rows))


def _cli(*args: str) -> bytes:
    return subprocess.run(
        [sys.executable, "-m", "qhbound", *args], capture_output=True, check=True
    ).stdout


def test_8_determinism():
    first = _cli("scan", "rect", "--a", "1..6", "--b", "1..6", "--json")
    second = _cli("scan", "rect", "--a", "1..6", "--b", "1..6", "--json")
    c = build_bacon_shor(3, 3)
    witnesses = {str(min_distance(c, 3, workers=w).witness) for w in (1, 2, 4)}
    for w in ("1", "3"):
        data = json.loads(_cli("code", "3", "3", "--distance", "--workers", w, "--json"))
        witnesses.add(data["distance"]["witness"])
    ok = first == second and len(first) > 0 and len(witnesses) == 1
    verdict(8, "byte-identical scan output; (3,3) witness independent of run and workers",
            ok, f"witnesses {sorted(witnesses)}")
