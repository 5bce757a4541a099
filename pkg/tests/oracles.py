"""Independent brute-force references used by the tests.

Nothing here imports the elimination or enumeration code under test.
"""

from __future__ import annotations

from itertools import product

import mpmath


def pascal_rows(n_max: int) -> list[list[int]]:
    rows = [[1]]
    for _ in range(n_max):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def pascal_binomial(n: int, k: int) -> int:
    if k > n:
        return 0
    return pascal_rows(n)[n][k]


def count_paulis_up_to(n: int, t: int) -> int:
    """Count strings over {I,X,Y,Z}^n with at most t non-identity letters."""
    return sum(1 for s in product(range(4), repeat=n) if sum(1 for c in s if c) <= t)


def span_set(vectors: list[tuple[int, int]]) -> set[tuple[int, int]]:
    """All XOR combinations of (x, z) pairs, by closure."""
    span = {(0, 0)}
    for vx, vz in vectors:
        span |= {(x ^ vx, z ^ vz) for x, z in span}
    return span


def commutes(u: tuple[int, int], v: tuple[int, int]) -> bool:
    return bin((u[0] & v[1]) ^ (u[1] & v[0])).count("1") % 2 == 0


def all_paulis(n: int):
    """Every (x, z) pair on n qubits."""
    for x in range(1 << n):
        for z in range(1 << n):
            yield x, z


def pauli_weight(p: tuple[int, int]) -> int:
    return bin(p[0] | p[1]).count("1")


def brute_dressed_distance(n: int, gauge: list[tuple[int, int]],
                           stabilizer: list[tuple[int, int]]) -> int | None:
    gauge_group = span_set(gauge)
    best = None
    for p in all_paulis(n):
        if p in gauge_group:
            continue
        if all(commutes(p, s) for s in stabilizer):
            w = pauli_weight(p)
            best = w if best is None else min(best, w)
    return best


def hand_bacon_shor(a: int, b: int):
    """Gauge and stabilizer generators as (x, z) pairs from the grid picture."""
    def q(i, j):
        return 1 << (i * b + j)

    gauge = [(q(i, j) | q(i, j + 1), 0) for i in range(a) for j in range(b - 1)]
    gauge += [(0, q(i, j) | q(i + 1, j)) for i in range(a - 1) for j in range(b)]
    stab = []
    for j in range(b - 1):
        stab.append((sum(q(i, j) | q(i, j + 1) for i in range(a)), 0))
    for i in range(a - 1):
        stab.append((0, sum(q(i, j) | q(i + 1, j) for j in range(b))))
    return gauge, stab


def log2_ratio_reference(lhs: int, rhs: int) -> float:
    """log2(rhs / lhs) at 60 significant digits."""
    with mpmath.workdps(60):
        return float(mpmath.log(mpmath.mpf(rhs) / mpmath.mpf(lhs), 2))
