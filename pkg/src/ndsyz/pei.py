"""Partial elimination ideals and multisecant checks.

For ``f`` with ``x0``-degree ``d`` write ``f = x0^d fbar + (lower in x0)``.
``K_i(I)`` is generated by ``fbar`` for ``f`` in ``I`` with ``d <= i``.  With a
Gröbner basis for an order that compares ``x0``-degree first, the ``fbar``
of basis elements with ``d <= i`` already generate ``K_i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from . import linalg
from .groebner import buchberger, groebner_of, saturate_by_variable
from .hilbert import hilbert_data
from .polyring import (
    BlockOrder,
    Ideal,
    Order,
    Polynomial,
    RingContext,
    monomials_of_degree,
    order_key,
    random_invertible_matrix,
)


@dataclass
class PEIFiltration:
    ring: RingContext            # k[x1, ..., xN]
    ideals: list[Ideal]          # K_0, ..., K_m

    def __getitem__(self, i: int) -> Ideal:
        return self.ideals[i]

    def __len__(self) -> int:
        return len(self.ideals)

    def generator_degrees(self, i: int) -> list[int]:
        return sorted(g.degree for g in self.ideals[i].gens)


def _split_x0(f: Polynomial, sub: RingContext) -> tuple[int, Polynomial]:
    d = max(e[0] for e in f.terms)
    lead = {e[1:]: c for e, c in f.terms.items() if e[0] == d}
    return d, Polynomial._raw(sub, lead)


def partial_elimination_ideals(I: Ideal, m: int) -> PEIFiltration:
    """``K_0 ⊆ ... ⊆ K_m`` in ``k[x1, ..., xN]``, each given by a reduced DegRevLex basis."""
    if I.ring.nvars < 2:
        raise ValueError("need at least two variables")
    sub = I.ring.with_nvars(I.ring.nvars - 1)
    if not I.gens:
        return PEIFiltration(sub, [Ideal(sub, []) for _ in range(m + 1)])
    G = buchberger(I.gens, BlockOrder(1), ring=I.ring, check=False)
    pieces = [_split_x0(g, sub) for g in G]
    ideals = []
    for i in range(m + 1):
        gens = [fbar for d, fbar in pieces if d <= i]
        if gens:
            gens = list(buchberger(gens, Order.DEGREVLEX, ring=sub, check=False).elements)
        ideals.append(Ideal(sub, gens))
    return PEIFiltration(sub, ideals)


def filtered_dimension(I: Ideal, i: int, t: int) -> int:
    """``dim {f in I_t : deg_{x0} f <= i}`` by linear algebra on ``I_t``."""
    from .graded import GradedPieces

    if t < 0:
        return 0
    cols = sorted(monomials_of_degree(I.ring.nvars, t), key=order_key(BlockOrder(1)), reverse=True)
    A = GradedPieces(I.ring, I.gens).macaulay_matrix(t, cols)
    if not A.shape[0]:
        return 0
    _, piv = linalg.echelon(A, I.ring.prime)
    return sum(1 for c in piv if cols[c][0] <= i)


def filtration_dimension_check(I: Ideal, F: PEIFiltration, t: int) -> bool:
    """``dim(K~_i)_t - dim(K~_{i-1})_t = dim(K_i)_{t-i}`` for every ``i`` in the filtration."""
    prev = 0
    for i in range(len(F)):
        cur = filtered_dimension(I, i, t)
        Ki = F[i]
        n = F.ring.nvars
        if Ki.gens:
            kdim = comb(t - i + n - 1, n - 1) - hilbert_data(Ki).hilbert_function(t - i) if t >= i else 0
        else:
            kdim = 0
        if cur - prev != kdim:
            return False
        prev = cur
    return True


# --------------------------------------------------------------------------- secant loci


@dataclass
class SecantLocusReport:
    d: int
    skipped: bool
    reason: str = ""
    degrees: list[int] = field(default_factory=list)
    linear: bool | None = None

    def as_dict(self) -> dict:
        return dict(d=self.d, skipped=self.skipped, reason=self.reason, degrees=self.degrees, linear=self.linear)


def center_on_variety(I: Ideal) -> bool:
    """Is ``(1, 0, ..., 0)`` a point of ``V(I)``?"""
    p = [1] + [0] * (I.ring.nvars - 1)
    return all(g.evaluate(p) == 0 for g in I.gens)


def secant_locus_check(I: Ideal, d: int, betti=None, seed: int = 0) -> SecantLocusReport:
    """Under ``N_{d,2}`` and a center off ``X``, ``K_{d-1}`` is zero or generated by linear forms."""
    from .betti import betti_table, property_ndp

    if center_on_variety(I):
        return SecantLocusReport(d, True, "projection center lies on the variety")
    B = betti or betti_table(I, seed=seed)
    v = property_ndp(B, d, 2)
    if not v.holds:
        return SecantLocusReport(d, True, f"N_{{{d},2}} not verified: {v.reason}")
    F = partial_elimination_ideals(I, d - 1)
    degs = F.generator_degrees(d - 1)
    return SecantLocusReport(d, False, "", degs, all(x <= 1 for x in degs))


# --------------------------------------------------------------------------- multisecant lengths


@dataclass
class MultisecantStats:
    plane_dim: int
    d: int
    bound: int
    lengths: list[int]
    through_points: list[bool]
    resampled: int

    @property
    def max_length(self) -> int:
        return max(self.lengths, default=0)

    @property
    def within_bound(self) -> bool:
        return all(x <= self.bound for x in self.lengths)

    def as_dict(self) -> dict:
        hist: dict[int, int] = {}
        for x in self.lengths:
            hist[x] = hist.get(x, 0) + 1
        return {
            "plane_dim": self.plane_dim,
            "d": self.d,
            "bound": self.bound,
            "max_length": self.max_length,
            "within_bound": self.within_bound,
            "histogram": {str(k): v for k, v in sorted(hist.items())},
            "resampled": self.resampled,
        }


def intersection_length(I: Ideal, spanning: np.ndarray, rng: np.random.Generator) -> int | None:
    """Length of ``V(I) ∩ L`` for the plane spanned by the rows of ``spanning``; None if not finite."""
    from .constructions import frame_with_points

    p = I.ring.prime
    n = I.ring.nvars
    k = spanning.shape[0]
    B = frame_with_points([list(r) for r in spanning], n, p, rng)
    # mix the plane's own coordinates so the saturating variable is general on L
    mix = random_invertible_matrix(k, p, rng)
    B[:, :k] = linalg.matmul(B[:, :k], mix, p)
    sub = I.transform(B).restrict(k)
    if not sub.gens:
        return None
    sat = saturate_by_variable(sub.gens, k - 1, sub.ring)
    if not sat:
        return None
    H = hilbert_data(Ideal(sub.ring, sat))
    if H.krull_dim == 0:
        return 0
    if H.krull_dim > 1:
        return None
    return H.degree


def multisecant_length_sampler(I: Ideal, plane_dim: int, d: int, samples: int = 64, seed: int = 0,
                               variety=None, max_resamples: int | None = None) -> MultisecantStats:
    """Lengths of ``L ∩ X`` over random ``plane_dim``-planes ``L``.

    When ``variety`` (a parametrized variety) is given, half of the planes are
    spanned by ``plane_dim + 1`` random points of ``X``; the rest are fully
    random.  Every length is compared with ``C(d - 1 + plane_dim, plane_dim)``.
    """
    rng = np.random.default_rng(seed)
    p = I.ring.prime
    n = I.ring.nvars
    k = plane_dim + 1
    if not 1 <= plane_dim < n - 1:
        raise ValueError("plane dimension out of range")
    bound = comb(d - 1 + plane_dim, plane_dim)
    lengths, through, resampled = [], [], 0
    limit = max_resamples if max_resamples is not None else 4 * samples
    s = 0
    while len(lengths) < samples:
        on_x = variety is not None and s % 2 == 0
        s += 1
        if on_x:
            rows = np.array(variety.points(k, rng), dtype=np.int64)
        else:
            rows = rng.integers(0, p, size=(k, n), dtype=np.int64)
        if linalg.rank(rows, p) < k:
            resampled += 1
            continue
        L = intersection_length(I, rows, rng)
        if L is None:
            resampled += 1
            if resampled > limit:
                raise RuntimeError("too many non-finite intersections")
            continue
        lengths.append(L)
        through.append(on_x)
    return MultisecantStats(plane_dim, d, bound, lengths, through, resampled)
