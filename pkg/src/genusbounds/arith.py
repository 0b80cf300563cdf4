"""Exact integer and rational arithmetic shared by every bound computation.

All quantities are Python ints or `fractions.Fraction`; nothing here ever
rounds through floating point.  Ceilings of fractional powers are decided
by integer comparison after clearing the exponent denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction

__all__ = ["Rat", "Decomposition", "binom", "decompose", "iroot", "ceil_power_product"]


def binom(n: int, k: int) -> int:
    """C(n, k) for n >= 0 and k >= 0; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom({n}, {k}): arguments must be non-negative")
    return math.comb(n, k)


@dataclass(frozen=True)
class Decomposition:
    """Euclidean split d - 1 = m*s + eps with 0 <= eps <= s - 1."""

    s: int
    m: int
    eps: int

    @property
    def d(self) -> int:
        return self.m * self.s + self.eps + 1


def decompose(d: int, s: int) -> Decomposition:
    """Split d - 1 = m*s + eps.  Requires d >= s + 1 >= 3."""
    if s < 2:
        raise ValueError(f"divisor must be at least 2, got s={s}")
    if d <= s:
        raise ValueError(f"degree d={d} at or below the degenerate threshold s={s}")
    m, eps = divmod(d - 1, s)
    return Decomposition(s=s, m=m, eps=eps)


def iroot(x: int, q: int) -> int:
    """floor(x ** (1/q)) for x >= 0, q >= 1, by integer Newton iteration."""
    if x < 0:
        raise ValueError("iroot of a negative number")
    if q < 1:
        raise ValueError("root index must be >= 1")
    if x == 0 or q == 1:
        return x
    # seed strictly above the root, iterates decrease to the floor root
    n = 1 << -(-x.bit_length() // q)
    while True:
        t = ((q - 1) * n + x // n ** (q - 1)) // q
        if t >= n:
            return n
        n = t


def ceil_power_product(c: Rat | int, base: int, exp: Rat | int) -> int:
    """Smallest integer n with n >= c * base**exp.

    With exp = p/q, the inequality n >= c * base**(p/q) holds iff
    n**q >= c**q * base**p, so the ceiling is decided by exact integer
    comparison.
    """
    c = Fraction(c)
    e = Fraction(exp)
    if c <= 0:
        raise ValueError("coefficient must be positive")
    if base < 1:
        raise ValueError("base must be at least 1")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    p, q = e.numerator, e.denominator
    target = c**q * Fraction(base) ** p
    a, b = target.numerator, target.denominator
    n = iroot((a + b - 1) // b, q)
    while n**q * b < a:
        n += 1
    assert n == 0 or (n - 1) ** q * b < a
    return n
