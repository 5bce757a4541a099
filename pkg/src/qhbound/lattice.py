"""Bacon-Shor codes on an a x b qubit lattice.

Qubit (i, j) with row i < a and column j < b sits at index i*b + j.  Gauge
operators are horizontal XX pairs and vertical ZZ pairs; the stabilizer is
generated by X on two adjacent columns and Z on two adjacent rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import rect_family
from .symplectic import (
    GeneratorSet,
    PauliVector,
    SpanBasis,
    center,
    gf2_rank,
    symplectic_product,
)


@dataclass(frozen=True)
class SubsystemCode:
    a: int
    b: int
    n: int
    gauge: GeneratorSet
    stabilizer: GeneratorSet
    s: int
    r: int
    k: int

    def qubit(self, i: int, j: int) -> int:
        return i * self.b + j

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "s": self.s,
            "gauge": self.gauge.strings(),
            "stabilizer": self.stabilizer.strings(),
        }


def bacon_shor_gauge(a: int, b: int) -> GeneratorSet:
    """Horizontal X pairs in row-major order, then vertical Z pairs."""
    n = a * b
    gens = [
        PauliVector.on(n, "X", (i * b + j, i * b + j + 1))
        for i in range(a)
        for j in range(b - 1)
    ]
    gens += [
        PauliVector.on(n, "Z", (i * b + j, (i + 1) * b + j))
        for i in range(a - 1)
        for j in range(b)
    ]
    return GeneratorSet(n, gens)


def bacon_shor_stabilizer(a: int, b: int) -> GeneratorSet:
    """X on columns j, j+1 for each j, then Z on rows i, i+1 for each i."""
    n = a * b
    gens = [
        PauliVector.on(n, "X", [i * b + c for i in range(a) for c in (j, j + 1)])
        for j in range(b - 1)
    ]
    gens += [
        PauliVector.on(n, "Z", [r * b + j for r in (i, i + 1) for j in range(b)])
        for i in range(a - 1)
    ]
    return GeneratorSet(n, gens)


def build_bacon_shor(a: int, b: int) -> SubsystemCode:
    if a < 1 or b < 1:
        raise ValueError(f"lattice dimensions must be positive, got {a}x{b}")
    gauge = bacon_shor_gauge(a, b)
    s = len(center(gauge))
    twice_r = gf2_rank(gauge) - s
    if twice_r % 2:
        raise ArithmeticError("gauge rank minus center dimension is odd")
    r = twice_r // 2
    n = a * b
    return SubsystemCode(
        a=a,
        b=b,
        n=n,
        gauge=gauge,
        stabilizer=bacon_shor_stabilizer(a, b),
        s=s,
        r=r,
        k=n - s - r,
    )


def certify_parameters(c: SubsystemCode) -> bool:
    """Cross-check a built code against the family formula and its own center.

    The explicit stabilizer must span exactly center(gauge), and every
    stabilizer generator must commute with every gauge generator.
    """
    expected = rect_family(c.a, c.b)
    if (c.n, c.k, c.r) != (expected.n, expected.k, expected.r):
        return False
    if c.k + c.r + c.s != c.n:
        return False
    computed = SpanBasis(g.packed for g in center(c.gauge))
    explicit = SpanBasis(g.packed for g in c.stabilizer)
    if len(explicit) != len(c.stabilizer) or len(explicit) != c.s:
        return False
    if any(g.packed not in computed for g in c.stabilizer):
        return False
    if any(g.packed not in explicit for g in center(c.gauge)):
        return False
    return all(
        symplectic_product(st, g) == 0 for st in c.stabilizer for g in c.gauge
    )


__all__ = [
    "SubsystemCode",
    "bacon_shor_gauge",
    "bacon_shor_stabilizer",
    "build_bacon_shor",
    "certify_parameters",
]
