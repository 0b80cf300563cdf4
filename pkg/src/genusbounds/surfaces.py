"""Exact certification that parametrized surfaces lie on no low-degree
hypersurface.

A surface is given by an exact parametrization (Veronese embeddings of the
plane, rational normal scrolls, and integer linear projections of these).
The dimension of degree-k hypersurfaces through it is measured as the
kernel of the matrix evaluating all degree-k ambient monomials at random
rational parameter points.  Evaluation at finitely many points can only
enlarge that kernel, so a kernel of zero is a genuine certificate that no
such hypersurface exists.

Ranks are computed exactly: the point-evaluation rows are compressed
through their Gram matrix (over the rationals rank(A A^T) = rank(A), and
the Gram matrix stays near rank x rank instead of rank x monomials), which
is then eliminated fraction-free.  A reduction of the same matrix modulo a
fixed prime gives a certified lower bound for the rank (a nonzero minor
mod p is nonzero over the integers); since the rank can never exceed the
surface's known section dimension, the modular rank hitting that cap (or
the full column count) already pins the rank exactly, and the expensive
big-integer elimination only runs when the rank is genuinely deficient.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .arith import binom
from .classical import scroll_h0

__all__ = [
    "DegenerateParameter",
    "InconclusiveRank",
    "ParamSurface",
    "H0Result",
    "Certification",
    "veronese",
    "scroll",
    "parametrize",
    "generic_projection",
    "h0_ideal",
    "maximal_rank_expectation",
    "certify_not_on_hypersurface",
    "certified_projection",
]

_COORD_RANGE = 50       # parameter coordinates drawn from [-50, 50]
_PROJ_RANGE = 100       # projection matrix entries drawn from [-100, 100]
_EXTRA_ROWS = 4         # first batch exceeds the best possible rank by this
_FOLLOWUP_ROWS = 6      # rows per stabilization batch
_MAX_BATCHES = 12
_PRIME = 2**31 - 1      # modulus for the rank lower-bound filter


class DegenerateParameter(ValueError):
    """The parameter point maps to the zero vector (indeterminacy locus)."""


class InconclusiveRank(RuntimeError):
    """Kernel dimension failed to stabilize within the sample budget."""


@dataclass(frozen=True)
class ParamSurface:
    """A Veronese plane or a rational normal scroll, optionally composed
    with an exact linear projection (matrix rows over the integers)."""

    kind: str  # "veronese2" | "veronese3" | "scroll"
    a: int = 0
    b: int = 0
    projection: tuple[tuple[int, ...], ...] | None = None

    @property
    def base_ambient_dim(self) -> int:
        if self.kind == "veronese2":
            return 5
        if self.kind == "veronese3":
            return 9
        return self.a + self.b + 1

    @property
    def ambient_dim(self) -> int:
        if self.projection is not None:
            return len(self.projection) - 1
        return self.base_ambient_dim

    @property
    def degree(self) -> int:
        if self.kind == "veronese2":
            return 4
        if self.kind == "veronese3":
            return 9
        return self.a + self.b

    def section_dim(self, k: int) -> int:
        """h0 of the degree-k line bundle on the surface; the pullbacks of
        ambient degree-k monomials always span at most this much, projected
        or not."""
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        if self.kind == "veronese2":
            return binom(2 * k + 2, 2)
        if self.kind == "veronese3":
            return binom(3 * k + 2, 2)
        return scroll_h0(self.a + self.b, k)

    def describe(self) -> str:
        name = {"veronese2": "Veronese surface (2-uple of the plane)",
                "veronese3": "3-uple Veronese surface"}.get(self.kind,
                f"rational normal scroll S({self.a},{self.b})")
        if self.projection is not None:
            return f"{name} projected to P^{self.ambient_dim}"
        return f"{name} in P^{self.ambient_dim}"


def veronese(uple: int) -> ParamSurface:
    if uple not in (2, 3):
        raise ValueError(f"only the 2- and 3-uple embeddings are supported, got {uple}")
    return ParamSurface(kind=f"veronese{uple}")


def scroll(a: int, b: int) -> ParamSurface:
    if not 1 <= a <= b:
        raise ValueError(f"scroll needs 1 <= a <= b, got ({a}, {b})")
    return ParamSurface(kind="scroll", a=a, b=b)


@dataclass(frozen=True)
class H0Result:
    """Stabilized kernel dimension of the monomial evaluation matrix; an
    upper bound for the number of degree-k hypersurfaces through the
    surface, exact once enough points pin the rank."""

    kernel_dim: int
    samples_used: int
    stabilized: bool
    seed: int


@dataclass(frozen=True)
class Certification:
    surface: str
    k: int
    verdict: str  # "certified" | "not-certified"
    kernel_dim: int
    samples_used: int
    seed: int
    retries: int = 0


def parametrize(surface: ParamSurface, params: tuple) -> tuple:
    """Exact ambient coordinates of the parameter point.

    Veronese surfaces take a plane point (x0, x1, x2); scrolls take
    (u, v, x, y) and map to (x*u^(a-j)*v^j, y*u^(b-j)*v^j).  An all-zero
    image signals a degenerate parameter (resample).
    """
    if surface.kind == "veronese2":
        x0, x1, x2 = params
        base = tuple(x0**e0 * x1**e1 * x2**e2 for e0, e1, e2 in _exponents(3, 2))
    elif surface.kind == "veronese3":
        x0, x1, x2 = params
        base = tuple(x0**e0 * x1**e1 * x2**e2 for e0, e1, e2 in _exponents(3, 3))
    elif surface.kind == "scroll":
        u, v, x, y = params
        base = tuple(x * u ** (surface.a - j) * v**j for j in range(surface.a + 1))
        base += tuple(y * u ** (surface.b - j) * v**j for j in range(surface.b + 1))
    else:
        raise ValueError(f"unknown surface kind {surface.kind!r}")
    if surface.projection is not None:
        base = tuple(sum(row[i] * base[i] for i in range(len(base))) for row in surface.projection)
    if not any(base):
        raise DegenerateParameter(f"parameter {params} maps to zero")
    return base


def generic_projection(surface: ParamSurface, target_dim: int, seed: int) -> ParamSurface:
    """Compose with a random full-rank integer matrix onto P^target_dim.

    Genericity is validated downstream: a projection that fails its expected
    certification is resampled with a fresh seed by the caller.
    """
    if target_dim >= surface.ambient_dim:
        raise ValueError(f"target dimension {target_dim} must be below {surface.ambient_dim}")
    if target_dim < 2:
        raise ValueError(f"target dimension must be at least 2, got {target_dim}")
    rng = random.Random(seed)
    n_cols = surface.ambient_dim + 1
    while True:
        matrix = tuple(
            tuple(rng.randint(-_PROJ_RANGE, _PROJ_RANGE) for _ in range(n_cols))
            for _ in range(target_dim + 1)
        )
        if _rank_and_pivots([list(row) for row in matrix])[0] == target_dim + 1:
            break
    if surface.projection is not None:
        matrix = tuple(
            tuple(sum(matrix[i][t] * surface.projection[t][j] for t in range(n_cols))
                  for j in range(surface.base_ambient_dim + 1))
            for i in range(target_dim + 1)
        )
    return ParamSurface(kind=surface.kind, a=surface.a, b=surface.b, projection=matrix)


def maximal_rank_expectation(surface: ParamSurface, k: int) -> int:
    """Expected hypersurface count if restriction has maximal rank:
    max(0, binom(ambient+k, k) - h0(O_S(k)))."""
    return max(0, binom(surface.ambient_dim + k, k) - surface.section_dim(k))


def h0_ideal(surface: ParamSurface, k: int, seed: int,
             max_batches: int = _MAX_BATCHES) -> H0Result:
    """Kernel dimension of the degree-k monomial evaluation matrix at random
    rational parameter points, sampled until two consecutive batches leave
    it unchanged.  Deterministic for a given seed.

    The fast pass works modulo a fixed prime; its rank is a certified lower
    bound for the rational rank.  When it reaches the monomial count or the
    surface's section dimension (the two a-priori caps), the rank is pinned
    exactly; otherwise the computation reruns with big-integer fraction-free
    elimination.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    mons = _exponents(surface.ambient_dim + 1, k)
    m = len(mons)
    cap = min(m, surface.section_dim(k))
    kernel, rank, samples = _stabilize(surface, k, seed, mons, modulus=_PRIME,
                                       max_batches=max_batches)
    if rank < cap:
        kernel, rank, samples = _stabilize(surface, k, seed, mons, modulus=None,
                                           max_batches=max_batches)
    return H0Result(kernel_dim=kernel, samples_used=samples, stabilized=True, seed=seed)


def _stabilize(surface: ParamSurface, k: int, seed: int,
               mons: tuple[tuple[int, ...], ...], modulus: int | None,
               max_batches: int) -> tuple[int, int, int]:
    """Shared stabilization loop; returns (kernel, rank, samples).

    Only the points that produced pivots are carried between batches: a
    pivot set independent modulo p is independent over the rationals, and
    discarded rows lie in the pivot span (exact mode) or at worst shrink
    the certified rank (modular mode), which keeps the reported kernel an
    upper bound for the true ideal dimension in both modes.
    """
    rng = random.Random(seed)
    m = len(mons)
    pivot_rows: list[tuple[int, tuple[int, ...]]] = []  # (serial, row)
    dot_cache: dict[tuple[int, int], int] = {}
    kernel = m
    samples = 0
    serial = 0
    stable = 0
    batch_size = min(m, surface.section_dim(k)) + _EXTRA_ROWS
    for _ in range(max_batches):
        rows = list(pivot_rows)
        for _ in range(batch_size):
            row = _sample_row(surface, rng, mons, k)
            if modulus is not None:
                row = tuple(x % modulus for x in row)
            rows.append((serial, row))
            serial += 1
        samples += batch_size
        gram = _gram(rows, dot_cache, modulus)
        if modulus is not None:
            rank, pivots = _rank_mod_p(gram, modulus)
        else:
            rank, pivots = _rank_and_pivots(gram)
        pivot_rows = [rows[i] for i in pivots]
        new_kernel = m - rank
        assert new_kernel <= kernel
        if new_kernel == kernel:
            stable += 1
            if stable == 2:
                return kernel, rank, samples
        else:
            stable = 0
            kernel = new_kernel
        batch_size = _FOLLOWUP_ROWS
    raise InconclusiveRank(
        f"kernel did not stabilize for {surface.describe()} at k={k} "
        f"within {samples} samples; raise the sample budget")


def certify_not_on_hypersurface(surface: ParamSurface, k: int, seed: int) -> Certification:
    """Certified iff the kernel stabilizes at zero: forms vanishing on the
    surface vanish at every sample, so a zero kernel from finitely many
    points proves there are none."""
    result = h0_ideal(surface, k, seed)
    verdict = "certified" if result.kernel_dim == 0 else "not-certified"
    return Certification(surface=surface.describe(), k=k, verdict=verdict,
                         kernel_dim=result.kernel_dim, samples_used=result.samples_used,
                         seed=seed)


def certified_projection(surface: ParamSurface, target_dim: int, k: int, seed: int,
                         max_retries: int = 5) -> Certification:
    """Project generically and certify; a non-generic draw (center meeting
    the secant variety) is resampled with a fresh seed, counting retries."""
    if max_retries < 1:
        raise ValueError("need at least one attempt")
    for attempt in range(max_retries):
        projected = generic_projection(surface, target_dim, seed + attempt)
        cert = certify_not_on_hypersurface(projected, k, seed + 1000 + attempt)
        if cert.verdict == "certified":
            return Certification(surface=cert.surface, k=k, verdict=cert.verdict,
                                 kernel_dim=cert.kernel_dim, samples_used=cert.samples_used,
                                 seed=seed, retries=attempt)
    return Certification(surface=projected.describe(), k=k, verdict="not-certified",
                         kernel_dim=cert.kernel_dim, samples_used=cert.samples_used,
                         seed=seed, retries=max_retries)


# ---------------------------------------------------------------------------
# internals
# ---------------------------------------------------------------------------

_EXPONENT_CACHE: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}


def _exponents(nvars: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of the degree-k monomials in nvars variables, graded
    lexicographic (x0^k first); fixed so matrices reproduce across runs."""
    key = (nvars, k)
    if key not in _EXPONENT_CACHE:
        out = []
        for combo in combinations_with_replacement(range(nvars), k):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        _EXPONENT_CACHE[key] = tuple(out)
    return _EXPONENT_CACHE[key]


def _sample_row(surface: ParamSurface, rng: random.Random,
                mons: tuple[tuple[int, ...], ...], k: int) -> tuple[int, ...]:
    while True:
        if surface.kind == "scroll":
            params = tuple(rng.randint(-_COORD_RANGE, _COORD_RANGE) for _ in range(4))
            if params[:2] == (0, 0) or params[2:] == (0, 0):
                continue
        else:
            params = tuple(rng.randint(-_COORD_RANGE, _COORD_RANGE) for _ in range(3))
            if params == (0, 0, 0):
                continue
        try:
            point = parametrize(surface, params)
        except DegenerateParameter:
            continue
        return _monomial_row(point, mons, k)


def _monomial_row(point: tuple[int, ...], mons: tuple[tuple[int, ...], ...],
                  k: int) -> tuple[int, ...]:
    powers = [[1] * (k + 1) for _ in point]
    for i, c in enumerate(point):
        for e in range(1, k + 1):
            powers[i][e] = powers[i][e - 1] * c
    row = []
    for mon in mons:
        v = 1
        for i, e in enumerate(mon):
            if e:
                v *= powers[i][e]
        row.append(v)
    return tuple(row)


def _gram(rows: list[tuple[int, tuple[int, ...]]],
          cache: dict[tuple[int, int], int], modulus: int | None) -> list[list[int]]:
    """Symmetric matrix of row dot products; over the rationals its rank
    equals the rank of the row matrix (sum of squares vanishes only on the
    zero vector, so A A^T and A share a kernel).  Dot products are memoized
    by the rows' sampling serials so pivot rows carried between batches are
    not recomputed."""
    n = len(rows)
    gram = [[0] * n for _ in range(n)]
    for i, (si, ri) in enumerate(rows):
        for j in range(i + 1):
            sj, rj = rows[j]
            key = (si, sj)
            dot = cache.get(key)
            if dot is None:
                dot = sum(x * y for x, y in zip(ri, rj))
                if modulus is not None:
                    dot %= modulus
                cache[key] = dot
            gram[i][j] = gram[j][i] = dot
    return gram


def _rank_mod_p(matrix: list[list[int]], p: int) -> tuple[int, list[int]]:
    """Row reduction over GF(p); the rank is a certified lower bound for
    the rank over the rationals (a nonzero minor mod p lifts)."""
    m = [row[:] for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    origin = list(range(n_rows))
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            origin[r], origin[piv] = origin[piv], origin[r]
        inv = pow(m[r][c], -1, p)
        piv_row = m[r]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            if f:
                f = f * inv % p
                row = m[i]
                for j in range(c, n_cols):
                    row[j] = (row[j] - f * piv_row[j]) % p
        r += 1
        if r == n_rows:
            break
    return r, origin[:r]


def _rank_and_pivots(matrix: list[list[int]]) -> tuple[int, list[int]]:
    """Fraction-free (Bareiss) row elimination over the integers; returns
    the rank and the original indices of the pivot rows."""
    m = [row[:] for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    origin = list(range(n_rows))
    prev = 1
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            origin[r], origin[p] = origin[p], origin[r]
        piv_row = m[r]
        piv = piv_row[c]
        for i in range(r + 1, n_rows):
            row = m[i]
            f = row[c]
            if f == 0:
                for j in range(c + 1, n_cols):
                    row[j] = row[j] * piv // prev
            else:
                for j in range(c + 1, n_cols):
                    row[j] = (row[j] * piv - f * piv_row[j]) // prev
                row[c] = 0
        prev = piv
        r += 1
        if r == n_rows:
            break
    return r, origin[:r]
