"""Classical genus bounds and dimension counts for curves and surfaces.

Castelnuovo's bound, the Castelnuovo-Halphen bracket for curves avoiding
low-degree surfaces, the degree thresholds where that bracket is known to
hold, and the section/ideal dimension counts used to force surfaces onto
quadrics and cubics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache

from .arith import Rat, binom, ceil_power_product, decompose

__all__ = [
    "PiClass",
    "HalphenEstimate",
    "Thresholds",
    "castelnuovo",
    "castelnuovo_closed_form",
    "halphen_interval",
    "threshold_d0",
    "threshold_d1",
    "thresholds",
    "sigma",
    "eh_pi2_bound",
    "section_h0_upper",
    "surface_ideal_lower_bound",
    "scroll_h0",
]

# exact degree thresholds for d0 become impractical once the harmonic
# exponent's denominator (lcm of 1..r-2) explodes; beyond this the bracket
# is still returned, just without a computed validity degree
_THRESHOLD_MAX_R = 12


class PiClass(IntEnum):
    """Known floor for the sectional genus of the surface at hand."""

    GE0 = 0
    GE1 = 1
    GE2 = 2


@dataclass(frozen=True)
class HalphenEstimate:
    """Bracket center +- radius for the maximal genus of degree-d curves in
    P^r lying on no surface of degree < s."""

    r: int
    d: int
    s: int
    center: Rat
    radius: Rat
    valid_from: int | None
    note: str = ""

    @property
    def lower(self) -> Rat:
        return self.center - self.radius

    @property
    def upper(self) -> Rat:
        return self.center + self.radius


@dataclass(frozen=True)
class Thresholds:
    d0: int
    d1: int
    sigma: int


def castelnuovo(ambient_dim: int, d: int) -> int:
    """Maximal genus of a nondegenerate integral degree-d curve in projective
    ambient_dim-space: binom(m, 2)*s + m*eps for d - 1 = m*s + eps,
    s = ambient_dim - 1."""
    if ambient_dim < 2:
        raise ValueError(f"ambient dimension must be at least 2, got {ambient_dim}")
    if d < ambient_dim:
        raise ValueError(f"degree {d} is degenerate in ambient dimension {ambient_dim}")
    if ambient_dim == 2:
        return (d - 1) * (d - 2) // 2
    dec = decompose(d, ambient_dim - 1)
    return binom(dec.m, 2) * dec.s + dec.m * dec.eps


def castelnuovo_closed_form(ambient_dim: int, d: int) -> Rat:
    """Castelnuovo's bound as the rational closed form
    d^2/2s - d(s+2)/2s + (1+eps)(s+1-eps)/2s; agrees with `castelnuovo`."""
    if ambient_dim < 2:
        raise ValueError(f"ambient dimension must be at least 2, got {ambient_dim}")
    if d < ambient_dim:
        raise ValueError(f"degree {d} is degenerate in ambient dimension {ambient_dim}")
    s = ambient_dim - 1
    if s == 1:
        return Fraction((d - 1) * (d - 2), 2)
    eps = decompose(d, s).eps
    return (
        Fraction(d * d, 2 * s)
        + Fraction(d, 2 * s) * (-s - 2)
        + Fraction(1 + eps, 2 * s) * (s + 1 - eps)
    )


@lru_cache(maxsize=None)
def _harmonic(n: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


@lru_cache(maxsize=None)
def threshold_d0(r: int, s: int) -> int:
    """Degree above which the Castelnuovo-Halphen bracket is known to hold:
    ceiling of (2s/(r-2)) * ((r-1)! * s) ** H(r-2), H the harmonic number.

    The product of the iterated roots telescopes into the single harmonic
    exponent, so one exact ceiling decides the threshold.
    """
    _check_rs(r, s)
    return ceil_power_product(Fraction(2 * s, r - 2), math.factorial(r - 1) * s, _harmonic(r - 2))


@lru_cache(maxsize=None)
def threshold_d1(r: int, s: int) -> int:
    """max of threshold_d0 and the ceiling of 4s(s+1)^3/(r-2)."""
    _check_rs(r, s)
    second = -((-4 * s * (s + 1) ** 3) // (r - 2))
    return max(threshold_d0(r, s), second)


def thresholds(r: int, s: int) -> Thresholds:
    return Thresholds(d0=threshold_d0(r, s), d1=threshold_d1(r, s), sigma=sigma(r, s))


def sigma(r: int, s: int) -> int:
    """Integer part of (s - r + 2)(s^2/(2(r-2)) + 1) + 1, the degree from
    which the ideal of a degree-s surface in P^r has no intermediate
    cohomology."""
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    return math.floor((s - r + 2) * (Fraction(s * s, 2 * (r - 2)) + 1) + 1)


def halphen_interval(r: int, d: int, s: int) -> HalphenEstimate:
    """Bracket for the maximal genus of degree-d curves in P^r on no surface
    of degree < s: center d^2/2s + (d/2s)(2*castelnuovo(r-1, s) - 2 - s),
    radius s^3/(r-2).

    The validity degree is reported, not enforced: the bracket is also known
    in special ranges below the generic threshold (d > 143 for (r, s) =
    (4, 6); d > 179 for (5, 7)), and callers may explore outside it.
    """
    _check_rs(r, s)
    center = Fraction(d * d, 2 * s) + Fraction(d, 2 * s) * (2 * castelnuovo(r - 1, s) - 2 - s)
    radius = Fraction(s**3, r - 2)
    valid_from: int | None
    note = ""
    if (r, s) == (4, 6):
        valid_from, note = 144, "also valid for every d > 143"
    elif (r, s) == (5, 7):
        valid_from, note = 180, "also valid for every d > 179"
    elif r <= _THRESHOLD_MAX_R:
        valid_from = threshold_d0(r, s) + 1
    else:
        valid_from = None
        note = "validity degree omitted: exact threshold impractically large"
    return HalphenEstimate(r=r, d=d, s=s, center=center, radius=radius, valid_from=valid_from, note=note)


def eh_pi2_bound(d: int) -> int:
    """Maximal genus of a degree-d curve in four-space lying on no surface
    of degree < 5: d^2/10 - 3d/10 + 1/5 + v/10 - v^2/10 + w, where
    d - 1 = 5n + v and w = max(0, floor(v/2)).  The value is provably an
    integer; non-integrality means the formula was fed bad input."""
    if d < 6:
        raise ValueError(f"degree must be at least 6, got {d}")
    v = (d - 1) % 5
    w = max(0, v // 2)
    g = (
        Fraction(d * d, 10)
        - Fraction(3 * d, 10)
        + Fraction(1, 5)
        + Fraction(v, 10)
        - Fraction(v * v, 10)
        + w
    )
    if g.denominator != 1:
        raise ArithmeticError(f"non-integral value {g} at d={d}")
    return int(g)


def section_h0_upper(s: int, i: int, pi: PiClass | int) -> int:
    """Upper bound for h0 of degree-i line bundle sections on an integral
    degree-s curve, split by the known floor of its arithmetic genus."""
    if i < 1 or s < 2:
        raise ValueError(f"need i >= 1 and s >= 2, got i={i}, s={s}")
    pi = PiClass(pi)
    if pi == PiClass.GE0:
        return 1 + i * s
    if pi == PiClass.GE1:
        return i * s
    return -1 + i * s


def surface_ideal_lower_bound(r: int, s: int, i: int, pi: PiClass | int) -> int:
    """Lower bound for the number of independent degree-i hypersurfaces
    through an integral degree-s surface in P^r.  May be negative, meaning
    no section is forced."""
    if i < 1 or r < 4:
        raise ValueError(f"need i >= 1 and r >= 4, got i={i}, r={r}")
    pi = PiClass(pi)
    cone = binom(i + 1, 2) * s
    if pi == PiClass.GE0:
        used = i + 1 + cone
    elif pi == PiClass.GE1:
        used = 1 + cone
    else:
        used = 1 - i + cone
    return binom(r + i, i) - used


def scroll_h0(s: int, k: int) -> int:
    """h0 of the degree-k line bundle on a smooth rational normal scroll
    surface of degree s: k + 1 + binom(k+1, 2)*s."""
    if s < 2 or k < 1:
        raise ValueError(f"need s >= 2 and k >= 1, got s={s}, k={k}")
    return k + 1 + binom(k + 1, 2) * s


def _check_rs(r: int, s: int) -> None:
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    if s < r - 1:
        raise ValueError(f"need s >= r - 1, got r={r}, s={s}")
