"""Test objects: toric ideals, rational normal curves, Veroneses, catalecticant minors, projections."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Sequence

import numpy as np

from . import linalg
from .groebner import buchberger, eliminate, saturate_by_variable
from .hilbert import hilbert_data
from .polyring import (
    DEFAULT_PRIME,
    BlockOrder,
    Ideal,
    Order,
    Polynomial,
    RingContext,
    monomials_of_degree,
    random_invertible_matrix,
)


class ProjectionError(ValueError):
    pass


@dataclass(frozen=True)
class ParametrizedVariety:
    """An ideal with a sampler for random points of its zero set."""

    ideal: Ideal
    sample: Callable[[np.random.Generator], list[int]] = field(repr=False, compare=False)

    def points(self, count: int, rng: np.random.Generator) -> list[list[int]]:
        return [self.sample(rng) for _ in range(count)]


# --------------------------------------------------------------------------- toric


def _nonzero(rng: np.random.Generator, p: int) -> int:
    return int(rng.integers(1, p))


def toric_from_matrix(A: Sequence[Sequence[int]], prime: int = DEFAULT_PRIME) -> Ideal:
    """Kernel of ``x_j -> t^{A e_j}`` (entries may be negative).

    Builds ``x_j t^{a_j^-} - t^{a_j^+}``, saturates by the product of the
    parameters through one auxiliary inverse variable, and eliminates the
    auxiliary variable and the parameters.
    """
    A = [list(map(int, row)) for row in A]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if cols == 0 or any(len(r) != cols for r in A):
        raise ValueError("matrix must be rectangular and nonempty")
    k = rows + 1                               # w, t_1..t_rows
    big = RingContext(k + cols, prime, BlockOrder(k))
    gens = []
    for j in range(cols):
        plus = [0] * (k + cols)
        minus = [0] * (k + cols)
        for r in range(rows):
            a = A[r][j]
            if a > 0:
                plus[1 + r] = a
            elif a < 0:
                minus[1 + r] = -a
        minus[k + j] += 1
        gens.append(Polynomial(big, {tuple(minus): 1, tuple(plus): -1}))
    # 1 - w * t_1 ... t_rows
    wt = [1] + [1] * rows + [0] * cols
    gens.append(Polynomial(big, {(0,) * (k + cols): 1, tuple(wt): -1}))
    out = eliminate(gens, k, ring=big)
    ring = RingContext(cols, prime)
    if not out:
        return Ideal(ring, [])
    G = buchberger(out, Order.DEGREVLEX, ring=ring, allow_inhomogeneous=True, check=False)
    return Ideal(ring, G.elements)


def toric_variety(A: Sequence[Sequence[int]], prime: int = DEFAULT_PRIME) -> ParametrizedVariety:
    I = toric_from_matrix(A, prime)
    A = [list(map(int, row)) for row in A]

    def sample(rng):
        t = [_nonzero(rng, prime) for _ in A]
        pt = []
        for j in range(len(A[0])):
            v = 1
            for r, row in enumerate(A):
                v = v * pow(t[r], row[j], prime) % prime
            pt.append(v)
        return pt

    return ParametrizedVariety(I, sample)


# --------------------------------------------------------------------------- determinantal


def determinant(M: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Leibniz expansion; fine for the small minors used here."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    ring = M[0][0].ring
    total = ring.zero()
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = ring.one()
        for r in range(n):
            term = term * M[r][perm[r]]
            if term.is_zero():
                break
        total = total - term if inv % 2 else total + term
    return total


def minors(M: Sequence[Sequence[Polynomial]], t: int) -> list[Polynomial]:
    rows, cols = len(M), len(M[0])
    out = []
    for R in combinations(range(rows), t):
        for C in combinations(range(cols), t):
            f = determinant([[M[r][c] for c in C] for r in R])
            if not f.is_zero():
                out.append(f)
    return out


def catalecticant(ring: RingContext, t: int, blocks: Sequence[int]) -> list[list[Polynomial]]:
    """``t``-row matrix concatenating one Hankel block per entry of ``blocks``.

    A block of ``b`` consecutive variables contributes ``b - t + 1`` columns
    with entry ``(r, c) = x_{start + r + c}``.
    """
    M = [[] for _ in range(t)]
    start = 0
    for b in blocks:
        if b < t:
            raise ValueError(f"block of {b} variables is too small for {t} rows")
        for c in range(b - t + 1):
            for r in range(t):
                M[r].append(ring.var(start + r + c))
        start += b
    return M


def generic_catalecticant_minors(t: int, blocks: Sequence[int], prime: int = DEFAULT_PRIME) -> Ideal:
    """``t``-minors of the block catalecticant on ``sum(blocks)`` variables."""
    if t < 1 or not blocks:
        raise ValueError("need t >= 1 and at least one block")
    ring = RingContext(sum(blocks), prime)
    return Ideal(ring, minors(catalecticant(ring, t, blocks), t))


def rational_normal_curve(deg: int, prime: int = DEFAULT_PRIME) -> Ideal:
    """2-minors of the ``2 x deg`` Hankel matrix in ``deg + 1`` variables."""
    if deg < 1:
        raise ValueError("degree must be positive")
    ring = RingContext(deg + 1, prime)
    if deg == 1:
        return Ideal(ring, [])
    return Ideal(ring, minors(catalecticant(ring, 2, [deg + 1]), 2))


def rnc_variety(deg: int, prime: int = DEFAULT_PRIME) -> ParametrizedVariety:
    I = rational_normal_curve(deg, prime)

    def sample(rng):
        s, t = int(rng.integers(0, prime)), int(rng.integers(0, prime))
        if s == 0 and t == 0:
            t = 1
        return [pow(s, deg - k, prime) * pow(t, k, prime) % prime for k in range(deg + 1)]

    return ParametrizedVariety(I, sample)


def veronese(n: int, d: int, prime: int = DEFAULT_PRIME) -> Ideal:
    """Ideal of the ``d``-uple embedding of ``P^n``: the binomial quadrics ``z_a z_b - z_c z_e``, ``a + b = c + e``."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    monos = sorted(monomials_of_degree(n + 1, d))
    N = len(monos)
    ring = RingContext(N, prime)
    by_sum: dict[tuple, list[tuple[int, int]]] = {}
    for a in range(N):
        for b in range(a, N):
            s = tuple(x + y for x, y in zip(monos[a], monos[b]))
            by_sum.setdefault(s, []).append((a, b))
    gens = []
    for pairs in by_sum.values():
        a0, b0 = pairs[0]
        for a, b in pairs[1:]:
            gens.append(ring.var(a0) * ring.var(b0) - ring.var(a) * ring.var(b))
    return Ideal(ring, gens)


def veronese_variety(n: int, d: int, prime: int = DEFAULT_PRIME) -> ParametrizedVariety:
    I = veronese(n, d, prime)
    monos = sorted(monomials_of_degree(n + 1, d))

    def sample(rng):
        u = [int(v) for v in rng.integers(1, prime, size=n + 1)]
        out = []
        for m in monos:
            v = 1
            for x, a in zip(u, m):
                v = v * pow(x, a, prime) % prime
            out.append(v)
        return out

    return ParametrizedVariety(I, sample)


# --------------------------------------------------------------------------- points and projections


def random_points(nvars: int, count: int, rng: np.random.Generator, prime: int = DEFAULT_PRIME) -> list[list[int]]:
    return [[int(v) for v in rng.integers(0, prime, size=nvars)] for _ in range(count)]


def secant_point(X: ParametrizedVariety, rng: np.random.Generator) -> list[int]:
    """A random point on the line through two random points of ``X``."""
    p = X.ideal.ring.prime
    a, b = X.points(2, rng)
    s, t = _nonzero(rng, p), _nonzero(rng, p)
    return [(s * u + t * v) % p for u, v in zip(a, b)]


def frame_with_points(points: Sequence[Sequence[int]], nvars: int, prime: int, rng: np.random.Generator) -> np.ndarray:
    """Invertible matrix whose first columns are ``points`` and the rest random."""
    k = len(points)
    P = np.array(points, dtype=np.int64).reshape(k, nvars).T % prime if k else np.zeros((nvars, 0), dtype=np.int64)
    if k and linalg.rank(P, prime) < k:
        raise ProjectionError("projection points are linearly dependent")
    for _ in range(100):
        B = np.concatenate([P, rng.integers(0, prime, size=(nvars, nvars - k))], axis=1)
        if linalg.rank(B, prime) == nvars:
            return B
    raise ProjectionError("could not complete the points to a basis")


def recenter(I: Ideal, points: Sequence[Sequence[int]], seed: int = 0) -> Ideal:
    """Change coordinates so that ``points`` become the first coordinate points."""
    rng = np.random.default_rng(seed)
    B = frame_with_points(points, I.ring.nvars, I.ring.prime, rng)
    return I.transform(B)


def project_from_points(I: Ideal, points: Sequence[Sequence[int]], seed: int = 0, isomorphic: bool = False) -> Ideal:
    """Closure of the image of ``V(I)`` under projection from the span of ``points``.

    After moving the points to the first coordinate points the projection is
    elimination of the first ``len(points)`` variables.  With ``isomorphic``
    a degree drop raises :class:`ProjectionError`.
    """
    k = len(points)
    if k == 0:
        return I
    if k >= I.ring.nvars:
        raise ProjectionError("too many projection points")
    J = recenter(I, points, seed)
    if not J.gens:
        return Ideal(I.ring.with_nvars(I.ring.nvars - k), [])
    out = eliminate(J.gens, k, ring=J.ring)
    sub = I.ring.with_nvars(I.ring.nvars - k)
    image = Ideal(sub, out)
    if isomorphic:
        before, after = hilbert_data(I), hilbert_data(image)
        if (before.proj_dim, before.degree) != (after.proj_dim, after.degree):
            raise ProjectionError(
                f"projection changed (dim, degree) from ({before.proj_dim}, {before.degree}) "
                f"to ({after.proj_dim}, {after.degree}); the center meets the secant variety"
            )
    return image


def general_hyperplane_section(I: Ideal, count: int = 1, seed: int = 0) -> Ideal:
    """Section by ``count`` random hyperplanes, as a saturated ideal in ``nvars - count`` variables."""
    if count == 0:
        return I
    n = I.ring.nvars
    if not 0 < count < n:
        raise ValueError("count out of range")
    rng = np.random.default_rng(seed)
    g = random_invertible_matrix(n, I.ring.prime, rng)
    sub = I.transform(g).restrict(n - count)
    if not sub.gens:
        return sub
    return Ideal(sub.ring, saturate_by_variable(sub.gens, n - count - 1, sub.ring))
