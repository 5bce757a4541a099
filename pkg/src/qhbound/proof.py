"""Integer-exact checks of the argument that odd Bacon-Shor codes beat the
Hamming bound for pure subsystem codes.

Every step is restated without division so that it reduces to a comparison
of integers:

* quadratic:  16t < 3(2t + 1)^2
* power:      2^(4t) t^t < 3^t (2t + 1)^(2t)
* binomial:   C(n, t) t^t >= n^t
* suffices:   2^(4t) < C((2t + 1)^2, t) 3^t
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import hamming_check
from .combinatorics import binomial, power
from .families import odd_family


def _require_positive(t: int) -> None:
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")


def lemma_quadratic(t: int) -> bool:
    _require_positive(t)
    return 16 * t < 3 * (4 * t * t + 4 * t + 1)


def lemma_power(t: int) -> bool:
    _require_positive(t)
    return power(2, 4 * t) * power(t, t) < power(3, t) * power(2 * t + 1, 2 * t)


def lemma_binomial(n: int, t: int) -> bool:
    """C(n, t) t^t >= n^t, the lower bound C(n, t) >= (n/t)^t."""
    _require_positive(t)
    if t > n:
        raise ValueError(f"t={t} exceeds n={n}")
    return binomial(n, t) * power(t, t) >= power(n, t)


def check_suffices(t: int) -> bool:
    """The single j = t term of the sphere already exceeds 2^(4t)."""
    _require_positive(t)
    return power(2, 4 * t) < binomial((2 * t + 1) ** 2, t) * power(3, t)


@dataclass(frozen=True)
class ChainReport:
    t: int
    quadratic_ok: bool
    power_ok: bool
    binomial_ok: bool
    suffices_ok: bool
    full_violation_ok: bool
    margin_bits: float
    # exact sides of the full Hamming check on odd_family(t)
    hamming_lhs: int
    hamming_rhs: int

    @property
    def all_ok(self) -> bool:
        return (
            self.quadratic_ok
            and self.power_ok
            and self.binomial_ok
            and self.suffices_ok
            and self.full_violation_ok
            and self.implication_ok
        )

    @property
    def implication_ok(self) -> bool:
        """power and binomial => suffices => full violation."""
        step1 = not (self.power_ok and self.binomial_ok) or self.suffices_ok
        step2 = not self.suffices_ok or self.full_violation_ok
        return step1 and step2

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "quadratic_ok": self.quadratic_ok,
            "power_ok": self.power_ok,
            "binomial_ok": self.binomial_ok,
            "suffices_ok": self.suffices_ok,
            "full_violation_ok": self.full_violation_ok,
            "implication_ok": self.implication_ok,
            "hamming_lhs": str(self.hamming_lhs),
            "hamming_rhs": str(self.hamming_rhs),
            "margin_bits": round(self.margin_bits, 3),
        }


def chain_report(t: int) -> ChainReport:
    _require_positive(t)
    report = hamming_check(odd_family(t))
    return ChainReport(
        t=t,
        quadratic_ok=lemma_quadratic(t),
        power_ok=lemma_power(t),
        binomial_ok=lemma_binomial((2 * t + 1) ** 2, t),
        suffices_ok=check_suffices(t),
        full_violation_ok=not report.satisfied,
        margin_bits=report.margin_bits,
        hamming_lhs=report.lhs,
        hamming_rhs=report.rhs,
    )


def verify_chain(t_max: int) -> list[ChainReport]:
    """One ChainReport per t = 1..t_max, ascending."""
    _require_positive(t_max)
    return [chain_report(t) for t in range(1, t_max + 1)]


def margins_strictly_increasing(reports: list[ChainReport]) -> bool:
    """Exact test that rhs/lhs grows with t, by cross-multiplication."""
    return all(
        nxt.hamming_rhs * cur.hamming_lhs > cur.hamming_rhs * nxt.hamming_lhs
        for cur, nxt in zip(reports, reports[1:])
    )


__all__ = [
    "ChainReport",
    "chain_report",
    "check_suffices",
    "lemma_binomial",
    "lemma_power",
    "lemma_quadratic",
    "margins_strictly_increasing",
    "verify_chain",
]
