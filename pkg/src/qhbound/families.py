"""Parameter families of Bacon-Shor subsystem codes."""

from __future__ import annotations

from .bounds import CodeParams


def rect_family(a: int, b: int) -> CodeParams:
    """[[ab, 1, (a-1)(b-1), min(a, b)]] for an a x b lattice."""
    if a < 1 or b < 1:
        raise ValueError(f"lattice dimensions must be positive, got {a}x{b}")
    return CodeParams(a * b, 1, (a - 1) * (b - 1), min(a, b))


def square_family(a: int) -> CodeParams:
    """[[a^2, 1, (a-1)^2, a]]."""
    if a < 1:
        raise ValueError(f"lattice side must be positive, got {a}")
    return rect_family(a, a)


def odd_family(t: int) -> CodeParams:
    """[[(2t+1)^2, 1, 4t^2, 2t+1]], the odd square members."""
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    return square_family(2 * t + 1)


__all__ = ["odd_family", "rect_family", "square_family"]
