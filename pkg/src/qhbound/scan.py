"""Family scans and their serialized records."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bounds import BoundReport, CodeParams, hamming_check, singleton_check
from .families import odd_family, rect_family, square_family

FAMILIES = ("square", "rect", "odd")

CSV_HEADER = (
    "family", "a", "b", "t", "n", "k", "r", "d",
    "hamming_lhs", "hamming_rhs", "hamming_satisfied", "hamming_margin_bits",
    "singleton_lhs", "singleton_rhs", "singleton_satisfied", "singleton_margin_bits",
)  # fmt: skip


@dataclass(frozen=True)
class BoundSummary:
    lhs: int
    rhs: int
    satisfied: bool
    margin_bits: float

    @classmethod
    def of(cls, report: BoundReport) -> "BoundSummary":
        return cls(report.lhs, report.rhs, report.satisfied, round(report.margin_bits, 3))

    def to_dict(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "satisfied": self.satisfied,
            "margin_bits": self.margin_bits,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BoundSummary":
        return cls(int(data["lhs"]), int(data["rhs"]), bool(data["satisfied"]),
                   float(data["margin_bits"]))


@dataclass(frozen=True)
class ScanRecord:
    family: str
    a: int
    b: int
    t: int | None
    params: CodeParams
    hamming: BoundSummary
    singleton: BoundSummary

    @classmethod
    def evaluate(cls, family: str, a: int, b: int, t: int | None, params: CodeParams):
        return cls(
            family, a, b, t, params,
            BoundSummary.of(hamming_check(params)),
            BoundSummary.of(singleton_check(params)),
        )  # fmt: skip

    def to_dict(self) -> dict:
        p = self.params
        return {
            "family": self.family,
            "a": self.a,
            "b": self.b,
            "t": self.t,
            "n": p.n,
            "k": p.k,
            "r": p.r,
            "d": p.d,
            "hamming": self.hamming.to_dict(),
            "singleton": self.singleton.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScanRecord":
        return cls(
            family=data["family"],
            a=data["a"],
            b=data["b"],
            t=data["t"],
            params=CodeParams(data["n"], data["k"], data["r"], data["d"]),
            hamming=BoundSummary.from_dict(data["hamming"]),
            singleton=BoundSummary.from_dict(data["singleton"]),
        )

    def csv_row(self) -> list[str]:
        p = self.params
        row = [self.family, self.a, self.b, "" if self.t is None else self.t,
               p.n, p.k, p.r, p.d]  # fmt: skip
        for s in (self.hamming, self.singleton):
            row += [s.lhs, s.rhs, str(s.satisfied).lower(), f"{s.margin_bits:.3f}"]
        return [str(v) for v in row]


def scan(
    family: str,
    a_range: range | None = None,
    b_range: range | None = None,
    t_range: range | None = None,
    violations_only: bool = False,
) -> Iterator[ScanRecord]:
    """Records for a family in ascending order (a, then b, or t)."""
    if family == "odd":
        if t_range is None:
            raise ValueError("the odd family needs a t range")
        members = ((2 * t + 1, 2 * t + 1, t, odd_family(t)) for t in t_range)
    elif family == "square":
        if a_range is None:
            raise ValueError("the square family needs an a range")
        members = ((a, a, None, square_family(a)) for a in a_range)
    elif family == "rect":
        if a_range is None:
            raise ValueError("the rect family needs an a range")
        b_range = a_range if b_range is None else b_range
        members = (
            (a, b, None, rect_family(a, b)) for a in a_range for b in b_range
        )
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    for a, b, t, params in members:
        record = ScanRecord.evaluate(family, a, b, t, params)
        if violations_only and record.hamming.satisfied:
            continue
        yield record


__all__ = ["BoundSummary", "CSV_HEADER", "FAMILIES", "ScanRecord", "scan"]
