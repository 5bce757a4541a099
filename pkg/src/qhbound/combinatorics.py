"""Exact integer arithmetic for binomials, powers and Hamming-sphere volumes."""

from __future__ import annotations

import math
from fractions import Fraction

_LN2 = math.log(2.0)
# below this bit length an int converts to float without rounding loss that matters
_MANTISSA_BITS = 60


def binomial(n: int, k: int) -> int:
    """Return C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial expects nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def power(base: int, exp: int) -> int:
    """Exact ``base**exp`` with ``0**0 == 1``."""
    if base < 0 or exp < 0:
        raise ValueError(f"power expects nonnegative arguments, got ({base}, {exp})")
    return base**exp


def sphere_volume(n: int, t: int) -> int:
    """Number of n-qubit Paulis of weight at most t: sum_j C(n, j) 3^j."""
    if n < 0 or t < 0:
        raise ValueError(f"sphere_volume expects nonnegative arguments, got ({n}, {t})")
    if t > n:
        raise ValueError(f"sphere radius t={t} exceeds length n={n}")
    total = 0
    term = 1  # C(n, j) * 3^j, updated incrementally
    for j in range(t + 1):
        total += term
        term = term * (n - j) * 3 // (j + 1)
    return total


def _log2_int(x: int) -> float:
    shift = max(x.bit_length() - _MANTISSA_BITS, 0)
    return math.log2(x >> shift) + shift


def log2_margin(lhs: int, rhs: int) -> float:
    """Approximate ``log2(rhs / lhs)`` for display.

    The sign always matches the exact comparison of the two integers, even
    when the magnitude underflows a double.
    """
    if lhs < 1 or rhs < 1:
        raise ValueError("log2_margin needs positive integers")
    diff = rhs - lhs
    if diff == 0:
        return 0.0
    if 4 * abs(diff) < lhs:
        # close ratios: log1p keeps the small difference from cancelling
        value = math.log1p(float(Fraction(diff, lhs))) / _LN2
    else:
        value = _log2_int(rhs) - _log2_int(lhs)
    if value == 0.0 or (value > 0) != (diff > 0):
        value = math.copysign(5e-324, diff)
    return value


__all__ = ["binomial", "power", "sphere_volume", "log2_margin"]
