"""Projective Paulis as binary symplectic vectors.

A Pauli on n qubits is stored as two n-bit ints ``x`` and ``z`` with qubit i
at bit i.  Phases are never tracked.  For elimination the two halves are
packed into one 2n-bit int ``x | z << n``; pivots are the lowest set bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}


@dataclass(frozen=True)
class PauliVector:
    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        if self.x < 0 or self.z < 0 or (self.x | self.z) >> self.n:
            raise ValueError(f"bit-vectors do not fit in {self.n} qubits")

    @classmethod
    def from_string(cls, text: str) -> "PauliVector":
        """Parse e.g. ``"XIZY"``; character i acts on qubit i."""
        x = z = 0
        for i, ch in enumerate(text.upper()):
            try:
                xb, zb = _LETTER_BITS[ch]
            except KeyError:
                raise ValueError(f"unknown Pauli letter {ch!r}") from None
            x |= xb << i
            z |= zb << i
        return cls(len(text), x, z)

    @classmethod
    def on(cls, n: int, letter: str, qubits: Iterable[int]) -> "PauliVector":
        """The same single-qubit letter applied on each of ``qubits``."""
        xb, zb = _LETTER_BITS[letter]
        mask = 0
        for q in qubits:
            if not 0 <= q < n:
                raise ValueError(f"qubit {q} out of range for n={n}")
            mask |= 1 << q
        return cls(n, mask if xb else 0, mask if zb else 0)

    @classmethod
    def from_packed(cls, n: int, packed: int) -> "PauliVector":
        mask = (1 << n) - 1
        return cls(n, packed & mask, packed >> n)

    @property
    def packed(self) -> int:
        return self.x | (self.z << self.n)

    @property
    def support(self) -> int:
        return self.x | self.z

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def __mul__(self, other: "PauliVector") -> "PauliVector":
        _check_n(self.n, other.n)
        return PauliVector(self.n, self.x ^ other.x, self.z ^ other.z)

    def __str__(self) -> str:
        return "".join(
            _BITS_LETTER[((self.x >> i) & 1, (self.z >> i) & 1)] for i in range(self.n)
        )


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    gens: tuple[PauliVector, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.n != self.n:
                raise ValueError(f"generator on {g.n} qubits in a set on {self.n}")

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def strings(self) -> list[str]:
        return [str(g) for g in self.gens]


def _check_n(n1: int, n2: int) -> None:
    if n1 != n2:
        raise ValueError(f"qubit count mismatch: {n1} vs {n2}")


def symplectic_product(u: PauliVector, v: PauliVector) -> int:
    """0 if u and v commute, 1 if they anticommute."""
    _check_n(u.n, v.n)
    return ((u.x & v.z) ^ (u.z & v.x)).bit_count() & 1


def weight(u: PauliVector) -> int:
    return u.support.bit_count()


class SpanBasis:
    """Echelon basis of a GF(2) span, for repeated membership tests.

    Every row's pivot is its lowest set bit and pivots are distinct, so
    XOR-ing a row into a vector never disturbs bits below that pivot.
    """

    def __init__(self, vectors: Iterable[int] = ()) -> None:
        self.rows: dict[int, int] = {}  # pivot bit (as a power of two) -> row
        self.pivot_mask = 0
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        pivots = self.pivot_mask
        hits = v & pivots
        while hits:
            bit = hits & -hits
            v ^= self.rows[bit]
            hits = v & pivots & ~((bit << 1) - 1)
        return v

    def add(self, v: int) -> bool:
        """Insert v; returns False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        bit = v & -v
        self.rows[bit] = v
        self.pivot_mask |= bit
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.rows)

    def basis(self) -> list[int]:
        """Fully reduced basis rows ordered by pivot (canonical for the span)."""
        order = sorted(self.rows)
        reduced: dict[int, int] = {}
        for bit in reversed(order):
            row = self.rows[bit]
            hits = row & self.pivot_mask & ~((bit << 1) - 1)
            while hits:
                hb = hits & -hits
                row ^= reduced[hb]
                hits ^= hb
            reduced[bit] = row
        return [reduced[bit] for bit in order]


def gf2_rank(gs: GeneratorSet | Sequence[PauliVector]) -> int:
    return len(SpanBasis(g.packed for g in gs))


def in_span(u: PauliVector, gs: GeneratorSet) -> bool:
    _check_n(u.n, gs.n)
    return u.packed in SpanBasis(g.packed for g in gs)


def _nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of {c : row . c = 0 for every row}, rows given as ncols-bit ints."""
    echelon = SpanBasis(rows)
    reduced = dict(zip(sorted(echelon.rows), echelon.basis()))
    basis = []
    for free in range(ncols):
        fbit = 1 << free
        if fbit & echelon.pivot_mask:
            continue
        vec = fbit
        for pbit, row in reduced.items():
            if row & fbit:
                vec |= pbit
        basis.append(vec)
    return basis


def center(gs: GeneratorSet) -> GeneratorSet:
    """Basis of the elements of span(gs) that commute with every generator.

    Computed as the null space of the symplectic Gram matrix of a span basis
    (the independent generators, kept in input order).  The result is
    returned in reduced echelon form, ordered by pivot.
    """
    n = gs.n
    seen = SpanBasis()
    basis = [g.packed for g in gs if seen.add(g.packed)]
    # column_masks[q]: which basis vectors have packed bit q set
    column_masks = [0] * (2 * n)
    for j, v in enumerate(basis):
        while v:
            bit = v & -v
            column_masks[bit.bit_length() - 1] |= 1 << j
            v ^= bit
    gram = []
    for v in basis:
        row = 0
        while v:
            bit = v & -v
            q = bit.bit_length() - 1
            # x-bit q pairs with z-bit q + n and vice versa
            row ^= column_masks[q + n if q < n else q - n]
            v ^= bit
        gram.append(row)
    members = SpanBasis()
    for combo in _nullspace(gram, len(basis)):
        vec = 0
        while combo:
            bit = combo & -combo
            vec ^= basis[bit.bit_length() - 1]
            combo ^= bit
        members.add(vec)
    return GeneratorSet(n, [PauliVector.from_packed(n, v) for v in members.basis()])


__all__ = [
    "GeneratorSet",
    "PauliVector",
    "SpanBasis",
    "center",
    "gf2_rank",
    "in_span",
    "symplectic_product",
    "weight",
]
