"""Generic initial ideals under DegRevLex.

A trial draws a uniformly random invertible matrix ``g`` and computes
``in(g.I)``.  Under DegRevLex, ``in(J + (x_N)) = in(J) + (x_N)``, so for
``k`` trailing variables set to zero the initial ideal of the restriction is
the part of ``in(g.I)`` generated in the first variables.  Trials therefore
restrict to ``k = e, e+1, ...`` leading variables and stop at the first ``k``
whose initial ideal already has the Hilbert series of ``I``; that ``k`` is the
projective dimension of ``R/I``.
"""
from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .groebner import GroebnerBasis, buchberger, groebner_of
from .hilbert import k_polynomial
from .monideal import MonomialIdeal, is_borel_fixed
from .polyring import Ideal, Order, random_invertible_matrix


class GinInstabilityError(RuntimeError):
    pass


class CharacteristicWarning(UserWarning):
    pass


@dataclass(frozen=True)
class GinSection:
    """Restriction of ``g.I`` to its first ``k`` variables, with its DegRevLex basis."""

    ideal: Ideal
    basis: GroebnerBasis
    matrix: np.ndarray = field(repr=False, compare=False)


@dataclass(frozen=True)
class GinResult:
    gin: MonomialIdeal
    trials: int
    agreements: int
    seed: int
    stable: bool
    runs: int = 0
    section: GinSection | None = field(default=None, repr=False, compare=False)

    @property
    def generators(self) -> tuple:
        return self.gin.min_gens

    def as_dict(self) -> dict:
        return {
            "gin": self.gin.generator_strings(),
            "trials": self.trials,
            "agreements": self.agreements,
            "runs": self.runs,
            "seed": self.seed,
            "stable": self.stable,
            "regularity": self.gin.max_degree() if self.stable else None,
        }


def _as_ideal(I) -> Ideal:
    if isinstance(I, MonomialIdeal):
        return I.to_ideal()
    return I


def _trial(I: Ideal, target: list[int], start: int, rng: np.random.Generator):
    ring = I.ring.with_order(Order.DEGREVLEX)
    n = ring.nvars
    g = random_invertible_matrix(n, ring.prime, rng)
    moved = I.transform(g)
    for k in range(max(start, 1), n + 1):
        sub = moved.restrict(k) if k < n else moved
        if not sub.gens:
            M = MonomialIdeal.from_monomials(sub.ring, [])
            G = GroebnerBasis(sub.ring, (), True)
        else:
            G = buchberger(sub.gens, Order.DEGREVLEX, ring=sub.ring, check=False)
            M = G.initial_ideal()
        if k == n or k_polynomial(M) == target:
            return M.with_nvars(n), GinSection(sub, G, g)
    raise AssertionError("unreachable")


def generic_initial_ideal(I, trials: int = 2, seed: int = 0, max_trials: int | None = None) -> GinResult:
    """Consensus ``in(g.I)`` over independent random ``g``.

    The first ``trials`` runs must agree for a stable result; otherwise more
    runs are drawn (up to ``max_trials``) and the result is stable only if one
    initial ideal reaches ``trials`` agreements and a strict majority.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    I = _as_ideal(I)
    if not I.is_homogeneous():
        raise ValueError("Gin needs a homogeneous ideal")
    max_trials = max_trials if max_trials is not None else 2 * trials + 2
    rng = np.random.default_rng(seed)
    G0 = groebner_of(I)
    target = k_polynomial(G0.initial_ideal()) if I.gens else [1]
    codim = 0
    h = list(target)
    while h and sum(h) == 0:
        from .hilbert import divide_one_minus_t

        h = divide_one_minus_t(h)
        codim += 1
    results = []
    sections = {}
    while len(results) < max_trials:
        M, sec = _trial(I, target, codim, rng)
        results.append(M.min_gens)
        sections.setdefault(M.min_gens, sec)
        if len(results) >= trials:
            counts = Counter(results)
            best, hits = counts.most_common(1)[0]
            if len(results) == trials and hits == trials:
                break
            if hits >= trials and hits * 2 > len(results):
                break
    counts = Counter(results)
    best, hits = counts.most_common(1)[0]
    stable = hits >= trials and hits * 2 > len(results)
    gin = MonomialIdeal(I.ring.with_order(Order.DEGREVLEX), best)
    if stable:
        if not is_borel_fixed(gin):
            raise GinInstabilityError(
                f"stable initial ideal is not Borel-fixed; characteristic {I.ring.prime} may be too small"
            )
        if I.ring.prime <= gin.max_degree():
            warnings.warn(
                f"characteristic {I.ring.prime} does not exceed the regularity {gin.max_degree()}",
                CharacteristicWarning,
            )
    return GinResult(gin, trials, hits, seed, stable, len(results), sections[best])


def regularity_from_gin(result: GinResult) -> int:
    """Castelnuovo–Mumford regularity of ``I``: the top generator degree of its Gin."""
    if not result.stable:
        raise GinInstabilityError("regularity needs a stable Gin")
    return result.gin.max_degree()


def cancellation_decomposition(betti_ideal, betti_gin) -> dict[tuple[int, int], int] | None:
    """Nonnegative ``c`` with ``beta^gin_{i,j} = beta_{i,j} + c_{i,j} + c_{i-1,j+1}``, or None.

    ``c_{i,j}`` cancels a pair in positions ``(i, j)`` and ``(i+1, j-1)``; along
    each total degree ``i + j`` the array is forced, so existence is decided
    by one pass per diagonal.
    """
    keys = set(betti_ideal.entries) | set(betti_gin.entries)
    if not keys:
        return {}
    top_i = max(i for i, _ in keys)
    diagonals = {i + j for i, j in keys}
    c: dict[tuple[int, int], int] = {}
    for t in sorted(diagonals):
        prev = 0
        for i in range(0, top_i + 2):
            j = t - i
            delta = betti_gin.entries.get((i, j), 0) - betti_ideal.entries.get((i, j), 0)
            cur = delta - prev
            if cur < 0:
                return None
            if cur:
                c[(i, j)] = cur
            prev = cur
        if prev != 0:
            return None
    return c
