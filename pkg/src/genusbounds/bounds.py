"""Genus bounds for curves not contained in quadrics or cubics.

The exact bounds in four- and five-space, the O(1)-bracketed bounds in
higher ambient spaces with the scroll degrees driving them, the auxiliary
profiles for curves on a degree-5 surface, and the genus identity of the
extremal cone construction certifying sharpness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Rat, binom, decompose
from .classical import castelnuovo, threshold_d1, _THRESHOLD_MAX_R
from .hilbert import HilbertProfile

__all__ = [
    "GenusBound",
    "ExtremalConstruction",
    "genus_bound_p4",
    "genus_bound_p4_odd_acm",
    "genus_bound_p5",
    "quintic_profile",
    "quintic_genus_bound",
    "scroll_degree_quadrics",
    "scroll_degree_cubics",
    "genus_bracket",
    "cone_curve_genus",
]


@dataclass(frozen=True)
class GenusBound:
    """Either an exact point value or an exact interval (lo, hi].

    `strict` marks bounds the genus can approach but not attain; validity
    and attainment are annotations, never enforced.
    """

    value: Rat | None = None
    interval: tuple[Rat, Rat] | None = None
    strict: bool = False
    lower_open: bool = False
    valid_from: int | None = None
    conditions: str = ""
    attained_by: str = ""

    def __post_init__(self):
        assert (self.value is None) != (self.interval is None)
        if self.interval is not None:
            lo, hi = self.interval
            assert lo < hi

    def as_int(self) -> int:
        if self.value is None:
            raise ValueError("interval bound has no point value")
        if self.value.denominator != 1:
            raise ValueError(f"bound {self.value} is not integral")
        return int(self.value)


@dataclass(frozen=True)
class ExtremalConstruction:
    """Genus bookkeeping for a degree-d curve on a cone, singular at the
    vertex with tangent cone a union of rulings."""

    m: int
    eps: int
    mu: int
    a: int
    cone_multiplicity: int
    normalization_genus: int
    delta_p: int
    total_genus: int


def genus_bound_p4(d: int) -> GenusBound:
    """Maximal genus of a degree-d curve in four-space off quadrics:
    d(d-6)/8 + 1, an integer exactly when d is even."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    value = Fraction(d * (d - 6), 8) + 1
    odd = d % 2 == 1
    return GenusBound(
        value=value,
        strict=odd,
        valid_from=17,
        conditions="attained only for even d" if not odd else "never attained for odd d",
        attained_by="curves on an isomorphically projected Veronese surface",
    )


def genus_bound_p4_odd_acm(d: int) -> GenusBound:
    """Refined bound in four-space for odd degree or arithmetically
    Cohen-Macaulay curves: d^2/10 - d/2 - (eps-4)(eps+1)/10 + binom(eps,4) + 1
    with d - 1 = 5m + eps."""
    if d < 6:
        raise ValueError(f"degree must be at least 6, got {d}")
    dec = decompose(d, 5)
    eps = dec.eps
    value = (
        Fraction(d * d, 10)
        - Fraction(d, 2)
        - Fraction((eps - 4) * (eps + 1), 10)
        + binom(eps, 4)
        + 1
    )
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral value {value} at d={d}")
    if dec.m >= 2:
        assert int(value) == quintic_genus_bound(d, 1)
    return GenusBound(
        value=value,
        valid_from=144,
        conditions="d odd, or the curve arithmetically Cohen-Macaulay",
        attained_by="Cohen-Macaulay curves on a degree-5 surface of sectional genus 1",
    )


def genus_bound_p5(d: int) -> GenusBound:
    """Maximal genus of a degree-d curve in five-space off quadrics:
    6*binom(m, 2) + m*eps with d - 1 = 6m + eps, the Castelnuovo bound
    for curves of the same degree two dimensions up."""
    if d < 8:
        raise ValueError(f"degree must be at least 8, got {d}")
    dec = decompose(d, 6)
    value = Fraction(6 * binom(dec.m, 2) + dec.m * dec.eps)
    return GenusBound(
        value=value,
        valid_from=216,
        attained_by="projected Castelnuovo curves on a degree-6 rational normal scroll",
    )


def quintic_profile(d: int, pi: int) -> HilbertProfile:
    """Least section profile for a degree-d curve on a degree-5 surface of
    sectional genus pi in four-space:
    h(i) = 1 - pi + 5i - max(0, 3 - pi - i) - mu(i) for i <= m, then d,
    except that pi = 1 with eps = 4 passes through d - 1 once."""
    if d < 7:
        raise ValueError(f"degree must be at least 7, got {d}")
    if pi not in (0, 1):
        raise ValueError(f"sectional genus class must be 0 or 1, got {pi}")
    dec = decompose(d, 5)
    values = [1]
    for i in range(1, dec.m + 1):
        mu = 1 if (pi == 0 and i == 2) else 0
        values.append(1 - pi + 5 * i - max(0, 3 - pi - i) - mu)
        if values[-1] >= d:
            values[-1] = d
            break
    if values[-1] < d:
        if pi == 1 and dec.eps == 4:
            values.append(d - 1)
        values.append(d)
    return HilbertProfile(d=d, values=tuple(values))


def quintic_genus_bound(d: int, pi: int) -> int:
    """Genus bound sum(d - h(i)) over the quintic-surface profile.  Closed
    forms: 5*binom(m,2) + m*eps + 4 for pi = 0 and
    5*binom(m,2) + m(eps+1) + 1 + binom(eps,4) for pi = 1 (m >= 2)."""
    total = quintic_profile(d, pi).genus_sum()
    dec = decompose(d, 5)
    if dec.m >= 2:
        if pi == 0:
            closed = 5 * binom(dec.m, 2) + dec.m * dec.eps + 4
        else:
            closed = 5 * binom(dec.m, 2) + dec.m * (dec.eps + 1) + 1 + binom(dec.eps, 4)
        assert total == closed, f"profile sum {total} != closed form {closed} at d={d}, pi={pi}"
    return total


def scroll_degree_quadrics(r: int) -> int:
    """Minimal surface degree s with binom(r+2, 2) - 3(s+1) <= 0, for r >= 7
    not divisible by 3: scrolls of this degree project into P^r without
    landing on a quadric."""
    if r < 7:
        raise ValueError(f"r must be at least 7, got {r}")
    h, k = divmod(binom(r + 2, 2), 3)
    if k == 1:
        raise ValueError(f"r={r} is divisible by 3: no forcing scroll degree; "
                         "use the r=6, s=9 bracket instead")
    return h - 1 if k == 0 else h


def scroll_degree_cubics(r: int) -> int:
    """Scroll degree (binom(r+3, 3) - 4)/6 for the cubic-free bound, defined
    exactly when 6 divides binom(r+3, 3) - 4 (r mod 36 in
    {1, 2, 9, 10, 11, 18, 19, 27, 29})."""
    if r < 9:
        raise ValueError(f"r must be at least 9, got {r}")
    num = binom(r + 3, 3) - 4
    if num % 6:
        raise ValueError(f"r={r}: binom(r+3, 3) - 4 = {num} is not divisible by 6")
    return num // 6


def genus_bracket(r: int, d: int, s: int) -> GenusBound:
    """Maximal genus up to a bounded constant: the interval
    (d^2/2s - d(s+2)/2s, d^2/2s - d(s+2)/2s + s^3/(r-2)], open below."""
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    lo = Fraction(d * d, 2 * s) - Fraction(d * (s + 2), 2 * s)
    hi = lo + Fraction(s**3, r - 2)
    valid_from = threshold_d1(r, s) + 1 if r <= _THRESHOLD_MAX_R else None
    conditions = ""
    if (r, s) == (6, 9):
        conditions = ("degrees divisible by 3; constant cap 729/4, quoted as 182; "
                      "sharpness conditional on a genus-1 degree-9 surface off quadrics")
    return GenusBound(
        interval=(lo, hi),
        lower_open=True,
        valid_from=valid_from,
        conditions=conditions,
        attained_by="projected Castelnuovo curves on a degree-s scroll",
    )


def cone_curve_genus(m: int, eps: int, mu: int) -> ExtremalConstruction:
    """Genus of the degree-(5m+eps+1) curve cut on a cone over an elliptic
    space quintic, singular at the vertex with a cone over 5*mu + eps + 1
    points as tangent cone.

    The normalization genus comes from adjunction on the blown-up cone, the
    vertex contributes the delta invariant of the singularity, and the total
    collapses to the quintic-surface genus bound at sectional genus 1.
    """
    if not (m >= mu >= 3):
        raise ValueError(f"need m >= mu >= 3, got m={m}, mu={mu}")
    if not 0 <= eps <= 4:
        raise ValueError(f"eps must lie in 0..4, got {eps}")
    a = -mu - 1
    k = 5 * mu + eps + 1
    normalization = (
        5 * binom(m, 2) + m * (eps + 1) + 1
        - Fraction(5 * a * a, 2)
        + a * (eps - Fraction(3, 2))
    )
    if normalization.denominator != 1:
        raise ArithmeticError(f"non-integral normalization genus {normalization}")
    delta_p = 5 * binom(mu, 2) + mu * (1 + eps) + 1 + binom(eps, 4) - (1 - k)
    total = int(normalization) + delta_p
    assert total == quintic_genus_bound(5 * m + eps + 1, 1)
    return ExtremalConstruction(
        m=m, eps=eps, mu=mu, a=a, cone_multiplicity=k,
        normalization_genus=int(normalization), delta_p=delta_p, total_genus=total,
    )
