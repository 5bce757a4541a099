"""Quantum Hamming and Singleton bound checks for subsystem-code parameters."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .combinatorics import log2_margin, power, sphere_volume


class InvalidParameters(ValueError):
    """Raised when [[n,k,r,d]] violates the basic parameter invariants."""


@dataclass(frozen=True, order=True)
class CodeParams:
    """Parameters [[n, k, r, d]] of a subsystem code.

    n physical qubits, k logical qubits, r gauge qubits, minimum distance d.
    """

    n: int
    k: int
    r: int
    d: int

    def __post_init__(self) -> None:
        for name in ("n", "k", "r", "d"):
            if not isinstance(getattr(self, name), int):
                raise InvalidParameters(f"{name} must be an integer")
        if self.n < 1:
            raise InvalidParameters(f"n >= 1 violated (n={self.n})")
        if self.k < 0 or self.r < 0:
            raise InvalidParameters(f"k, r >= 0 violated (k={self.k}, r={self.r})")
        if not 1 <= self.d <= self.n:
            raise InvalidParameters(f"1 <= d <= n violated (d={self.d}, n={self.n})")
        if self.k + self.r > self.n:
            raise InvalidParameters(
                f"k + r <= n violated (k + r = {self.k + self.r}, n={self.n})"
            )

    @property
    def stabilizer_dim(self) -> int:
        return self.n - self.k - self.r

    @property
    def radius(self) -> int:
        """Number of correctable errors, floor((d - 1) / 2)."""
        return (self.d - 1) // 2

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.r},{self.d}]]"


class Bound(enum.Enum):
    HAMMING = "hamming"
    SINGLETON = "singleton"


@dataclass(frozen=True)
class BoundReport:
    """Exact outcome of one bound check; the bound holds iff lhs >= rhs."""

    params: CodeParams
    bound: Bound
    lhs: int
    rhs: int
    satisfied: bool
    margin_bits: float
    note: str = ""

    def summary(self) -> dict:
        """JSON-ready summary; exact integers as decimal strings."""
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "satisfied": self.satisfied,
            "margin_bits": round(self.margin_bits, 3),
        }


def _common_notes(p: CodeParams) -> list[str]:
    notes = []
    if p.k == 0:
        notes.append("k = 0: the code encodes nothing")
    return notes


def hamming_check(p: CodeParams) -> BoundReport:
    """Check 2^(n-k-r) >= sum_{j<=t} C(n,j) 3^j with t = floor((d-1)/2).

    Equality counts as satisfied. ``margin_bits`` is log2(rhs/lhs), so a
    positive margin means the bound is violated by that many bits.
    """
    lhs = power(2, p.stabilizer_dim)
    rhs = sphere_volume(p.n, p.radius)
    notes = _common_notes(p)
    if p.radius == 0:
        notes.append("t = 0: sphere volume is 1, the bound holds trivially")
    return BoundReport(
        params=p,
        bound=Bound.HAMMING,
        lhs=lhs,
        rhs=rhs,
        satisfied=lhs >= rhs,
        margin_bits=log2_margin(lhs, rhs),
        note="; ".join(notes),
    )


def singleton_check(p: CodeParams) -> BoundReport:
    """Check k + r <= n - 2(d - 1).

    Both sides count qubits, i.e. they are log2 of subspace dimensions, so
    the margin in bits is the plain difference (k + r) - (n - 2(d - 1)).
    A negative n - 2(d - 1) is reported as lhs = 0 with a note.
    """
    budget = p.n - 2 * (p.d - 1)
    used = p.k + p.r
    notes = _common_notes(p)
    if budget < 0:
        notes.append(f"n - 2(d-1) = {budget} < 0, reported as 0")
    return BoundReport(
        params=p,
        bound=Bound.SINGLETON,
        lhs=max(budget, 0),
        rhs=used,
        satisfied=used <= budget,
        margin_bits=float(used - budget),
        note="; ".join(notes),
    )


__all__ = [
    "Bound",
    "BoundReport",
    "CodeParams",
    "InvalidParameters",
    "hamming_check",
    "singleton_check",
]
