"""Brute-force dressed distance and purity of small subsystem codes.

Candidates are enumerated in a fixed canonical order: ascending weight,
supports in lexicographic order, and on each support qubit the letters
X < Z < Y with the lowest qubit varying slowest.  The first hit in that
order is the reported witness, also when the search is split across
worker processes.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice, product

from .combinatorics import sphere_volume
from .lattice import SubsystemCode
from .symplectic import PauliVector, SpanBasis, weight

DEFAULT_BUDGET = 10**8
LETTERS = ("X", "Z", "Y")


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the allowed budget."""

    def __init__(self, workload: int, budget: int) -> None:
        super().__init__(
            f"brute-force workload {workload} exceeds budget {budget}"
        )
        self.workload = workload
        self.budget = budget


class Purity(enum.Enum):
    PURE = "pure"
    IMPURE = "impure"


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of the distance search.

    When ``truncated`` is set no witness exists up to the searched weight,
    ``witness`` is None and ``d`` is only the lower bound max_weight + 1.
    """

    d: int
    witness: PauliVector | None
    enumerated: int
    truncated: bool

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "witness": None if self.witness is None else str(self.witness),
            "enumerated": self.enumerated,
            "truncated": self.truncated,
        }


def workload_estimate(n: int, max_weight: int) -> int:
    """Number of nonidentity Paulis of weight 1..max_weight on n qubits."""
    if n < 1 or max_weight < 1:
        raise ValueError("n and max_weight must be positive")
    return sphere_volume(n, max_weight) - 1


@dataclass(frozen=True)
class _Tables:
    """Picklable lookup tables shared with worker processes."""

    n: int
    # [qubit][letter] -> bitmask of anticommuting stabilizer generators
    syndrome: tuple[tuple[int, ...], ...]
    # [qubit][letter] -> packed (x | z << n) single-qubit Pauli
    packed: tuple[tuple[int, ...], ...]
    gauge_rows: dict
    gauge_mask: int


def _tables(c: SubsystemCode) -> _Tables:
    n = c.n
    syndrome = []
    packed = []
    for q in range(n):
        syn_q = []
        pk_q = []
        for letter in LETTERS:
            p = PauliVector.on(n, letter, (q,))
            mask = 0
            for i, g in enumerate(c.stabilizer):
                if ((p.x & g.z) ^ (p.z & g.x)).bit_count() & 1:
                    mask |= 1 << i
            syn_q.append(mask)
            pk_q.append(p.packed)
        syndrome.append(tuple(syn_q))
        packed.append(tuple(pk_q))
    gauge = SpanBasis(g.packed for g in c.gauge)
    return _Tables(n, tuple(syndrome), tuple(packed), dict(gauge.rows), gauge.pivot_mask)


def _scan(tables: _Tables, w: int, supports: list[tuple[int, ...]], want_gauge: bool):
    """First (offset, packed) in canonical order among ``supports`` whose
    syndrome vanishes and whose gauge membership equals ``want_gauge``."""
    gauge = SpanBasis()
    gauge.rows = tables.gauge_rows
    gauge.pivot_mask = tables.gauge_mask
    syn_t = tables.syndrome
    pk_t = tables.packed
    per_support = 3**w
    for s_index, support in enumerate(supports):
        for l_index, letters in enumerate(product(range(3), repeat=w)):
            syn = 0
            for q, l in zip(support, letters):
                syn ^= syn_t[q][l]
            if syn:
                continue
            vec = 0
            for q, l in zip(support, letters):
                vec |= pk_t[q][l]
            if (gauge.reduce(vec) == 0) == want_gauge:
                return s_index * per_support + l_index, vec
    return None


def _chunks(iterable, size):
    it = iter(iterable)
    while chunk := list(islice(it, size)):
        yield chunk


def _search(
    c: SubsystemCode,
    weights: range,
    want_gauge: bool,
    workers: int,
    chunk_supports: int = 256,
):
    """Return (weight, packed, enumerated) of the canonical first hit, or None."""
    tables = _tables(c)
    done = 0
    executor = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for w in weights:
            chunks = list(_chunks(combinations(range(c.n), w), chunk_supports))
            if executor is None:
                results = (_scan(tables, w, ch, want_gauge) for ch in chunks)
            else:
                results = executor.map(
                    _scan,
                    [tables] * len(chunks),
                    [w] * len(chunks),
                    chunks,
                    [want_gauge] * len(chunks),
                )
            offset = 0
            for chunk, hit in zip(chunks, results):
                if hit is not None:
                    local, vec = hit
                    return w, vec, done + offset + local + 1
                offset += len(chunk) * 3**w
            done += offset
    finally:
        if executor is not None:
            executor.shutdown(cancel_futures=True)
    return None


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        return 1
    if workers <= 0:
        return os.cpu_count() or 1
    return workers


def min_distance(
    c: SubsystemCode,
    max_weight: int,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> DistanceResult:
    """Minimum weight of an operator commuting with the stabilizer but not in
    the gauge group, searched up to ``max_weight``.

    Raises BudgetExceeded before enumerating anything if the candidate count
    exceeds ``budget``.  ``workers`` > 1 splits each weight across processes
    (0 means one per CPU); the result does not depend on it.
    """
    if not 1 <= max_weight <= c.n:
        raise ValueError(f"max_weight must lie in 1..{c.n}, got {max_weight}")
    workload = workload_estimate(c.n, max_weight)
    if workload > budget:
        raise BudgetExceeded(workload, budget)
    hit = _search(c, range(1, max_weight + 1), False, _resolve_workers(workers))
    if hit is None:
        return DistanceResult(max_weight + 1, None, workload, True)
    w, vec, enumerated = hit
    return DistanceResult(w, PauliVector.from_packed(c.n, vec), enumerated, False)


def low_weight_gauge_element(
    c: SubsystemCode,
    below: int,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> PauliVector | None:
    """Canonically first nonidentity gauge-group element of weight < ``below``."""
    if below <= 1:
        return None
    max_weight = min(below - 1, c.n)
    workload = workload_estimate(c.n, max_weight)
    if workload > budget:
        raise BudgetExceeded(workload, budget)
    hit = _search(c, range(1, max_weight + 1), True, _resolve_workers(workers))
    if hit is None:
        return None
    return PauliVector.from_packed(c.n, hit[1])


def purity(
    c: SubsystemCode,
    d: int,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> Purity:
    """Impure iff some nonidentity gauge-group element has weight below d."""
    if d < 1:
        raise ValueError(f"distance must be positive, got {d}")
    found = low_weight_gauge_element(c, d, budget, workers)
    return Purity.PURE if found is None else Purity.IMPURE


def min_stabilizer_weight(c: SubsystemCode, budget: int = DEFAULT_BUDGET) -> int | None:
    """Smallest weight of a nonidentity stabilizer element (None if s = 0).

    Enumerates all 2^s - 1 products of the stabilizer generators.
    """
    gens = c.stabilizer.gens
    if not gens:
        return None
    workload = 2 ** len(gens) - 1
    if workload > budget:
        raise BudgetExceeded(workload, budget)
    best = c.n
    for mask in range(1, 2 ** len(gens)):
        p = PauliVector(c.n)
        for i, g in enumerate(gens):
            if (mask >> i) & 1:
                p = p * g
        best = min(best, weight(p))
    return best


__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "DistanceResult",
    "Purity",
    "low_weight_gauge_element",
    "min_distance",
    "min_stabilizer_weight",
    "purity",
    "workload_estimate",
]
