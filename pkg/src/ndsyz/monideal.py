"""Monomial ideals: minimal generators, Borel tests, Eliahou–Kervaire numbers, distractions."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .polyring import (
    Ideal,
    Monomial,
    Polynomial,
    RingContext,
    format_monomial,
    mono_divides,
    mono_max_index,
    order_key,
    random_linear_forms,
)


def _minimalize(monos: Iterable[Monomial]) -> list[Monomial]:
    uniq = sorted(set(tuple(m) for m in monos), key=sum)
    out: list[Monomial] = []
    for m in uniq:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingContext
    min_gens: tuple[Monomial, ...]

    @classmethod
    def from_monomials(cls, ring: RingContext, monos: Iterable[Monomial]) -> MonomialIdeal:
        monos = [tuple(m) for m in monos]
        for m in monos:
            if len(m) != ring.nvars or any(a < 0 for a in m):
                raise ValueError(f"bad exponent vector {m} for {ring.nvars} variables")
        key = order_key(ring.order)
        # by degree, then descending in the ring order
        gens = sorted(_minimalize(monos), key=lambda m: (sum(m), [-v for v in key(m)]))
        return cls(ring, tuple(gens))

    @classmethod
    def from_polynomials(cls, ring: RingContext, polys: Iterable[Polynomial]) -> MonomialIdeal:
        monos = []
        for f in polys:
            if f.is_zero():
                continue
            if len(f) != 1:
                raise ValueError(f"not a monomial: {f}")
            monos.append(next(iter(f.terms)))
        return cls.from_monomials(ring, monos)

    @classmethod
    def parse(cls, ring: RingContext, texts: Iterable[str]) -> MonomialIdeal:
        return cls.from_polynomials(ring, [ring.parse(t) for t in texts])

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def __len__(self) -> int:
        return len(self.min_gens)

    def __iter__(self):
        return iter(self.min_gens)

    def contains(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.min_gens)

    __contains__ = contains

    def is_zero(self) -> bool:
        return not self.min_gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.min_gens)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.min_gens), default=0)

    def generators_of_degree(self, d: int) -> list[Monomial]:
        return [g for g in self.min_gens if sum(g) == d]

    def support(self) -> int:
        """Number of leading variables needed: one more than the largest index used."""
        return max((mono_max_index(g) + 1 for g in self.min_gens), default=0)

    def to_ideal(self) -> Ideal:
        return Ideal(self.ring, [Polynomial._raw(self.ring, {g: 1}) for g in self.min_gens])

    def with_nvars(self, nvars: int) -> MonomialIdeal:
        """Extend by zeros or drop trailing variables (which must be unused)."""
        n = self.nvars
        if nvars >= n:
            gens = [g + (0,) * (nvars - n) for g in self.min_gens]
        else:
            if self.support() > nvars:
                raise ValueError("cannot drop variables that occur in generators")
            gens = [g[:nvars] for g in self.min_gens]
        return MonomialIdeal.from_monomials(self.ring.with_nvars(nvars), gens)

    def same_as(self, other: MonomialIdeal) -> bool:
        """Equality up to trailing unused variables."""
        n = max(self.nvars, other.nvars)
        a = {g + (0,) * (n - len(g)) for g in self.min_gens}
        b = {g + (0,) * (n - len(g)) for g in other.min_gens}
        return a == b

    def generator_strings(self) -> list[str]:
        return [format_monomial(g) for g in self.min_gens]

    def __str__(self):
        return "(" + ", ".join(self.generator_strings()) + ")"


def minimal_generators(ring: RingContext, monomials: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal.from_monomials(ring, monomials)


def is_borel_fixed(M: MonomialIdeal) -> bool:
    """Strongly stable test: ``x_i * T / x_j`` stays in ``M`` for all ``i < j`` with ``x_j | T``."""
    for T in M.min_gens:
        for j, a in enumerate(T):
            if not a:
                continue
            for i in range(j):
                m = list(T)
                m[j] -= 1
                m[i] += 1
                if not M.contains(tuple(m)):
                    return False
    return True


def borel_closure(ring: RingContext, monos: Iterable[Monomial]) -> MonomialIdeal:
    """Smallest Borel-fixed ideal containing ``monos``."""
    seen = set()
    stack = [tuple(m) for m in monos]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        for j, a in enumerate(m):
            if a:
                for i in range(j):
                    t = list(m)
                    t[j] -= 1
                    t[i] += 1
                    t = tuple(t)
                    if t not in seen:
                        stack.append(t)
    return MonomialIdeal.from_monomials(ring, seen)


class NotBorelFixedError(ValueError):
    pass


def ek_betti(M: MonomialIdeal):
    """Graded Betti numbers of ``R/M`` for Borel-fixed ``M`` by the Eliahou–Kervaire formula."""
    from .betti import BettiTable

    if not is_borel_fixed(M):
        raise NotBorelFixedError("Eliahou-Kervaire formula needs a Borel-fixed ideal")
    n = M.nvars
    if M.is_unit():
        return BettiTable({}, n, n, 0, complete=True)
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for T in M.min_gens:
        j = sum(T) - 1
        mx = mono_max_index(T)
        for i in range(1, mx + 2):
            entries[(i, j)] = entries.get((i, j), 0) + comb(mx, i - 1)
    return BettiTable(entries, n, n, max(M.max_degree() - 1, 0), complete=True)


def power_ideal(e: int, ell: int, nvars: int | None = None, prime: int | None = None) -> MonomialIdeal:
    """``J0 = (x0, ..., x_{e-1})^(ell+1)`` in ``nvars`` (default ``e``) variables."""
    if e < 1 or ell < 0:
        raise ValueError("need e >= 1 and ell >= 0")
    nvars = nvars if nvars is not None else e
    if nvars < e:
        raise ValueError("nvars must be at least e")
    ring = RingContext(nvars) if prime is None else RingContext(nvars, prime)
    from .polyring import monomials_of_degree

    gens = [m + (0,) * (nvars - e) for m in monomials_of_degree(e, ell + 1)]
    return MonomialIdeal.from_monomials(ring, gens)


def power_ideal_betti(e: int, ell: int, i: int) -> int:
    """Closed form ``beta_{i,ell}(R/J0) = C(i+ell-1, ell) * C(e+ell, i+ell)`` (zero for ``i > e``)."""
    if i < 1 or i > e:
        return 0
    return comb(i + ell - 1, ell) * comb(e + ell, i + ell)


def binomial_identity(i: int, e: int, ell: int) -> tuple[int, int]:
    """Both sides of ``sum_{j=i-1}^{e-1} C(j,i-1) C(j+ell,ell) = C(i+ell-1,ell) C(e+ell,i+ell)``."""
    lhs = sum(comb(j, i - 1) * comb(j + ell, ell) for j in range(i - 1, e))
    return lhs, power_ideal_betti(e, ell, i)


def borel_point_section(M: MonomialIdeal, e: int) -> MonomialIdeal:
    """Monomial ideal of a general point section, in ``e + 1`` variables.

    Generators involving ``x_{e+1}, ..., x_N`` are dropped, ``x_e`` is set to 1
    and the result is minimalized.
    """
    if not is_borel_fixed(M):
        raise NotBorelFixedError("point sections are read off Borel-fixed ideals only")
    if not 0 <= e <= M.nvars - 1:
        raise ValueError("need 0 <= e <= nvars - 1")
    ring = M.ring.with_nvars(e + 1)
    gens = []
    for T in M.min_gens:
        if any(T[e + 1:]):
            continue
        gens.append(T[:e] + (0,))
    return MonomialIdeal.from_monomials(ring, gens)


def distraction(M: MonomialIdeal, seed: int = 0) -> Ideal:
    """Replace ``x_i^a`` by ``L_{i,0} ... L_{i,a-1}``; forms are shared across generators."""
    rng = np.random.default_rng(seed)
    ring = M.ring
    forms: dict[tuple[int, int], Polynomial] = {}
    top = [max((g[i] for g in M.min_gens), default=0) for i in range(ring.nvars)]
    for i in range(ring.nvars):
        for j, L in enumerate(random_linear_forms(ring, top[i], rng)):
            forms[(i, j)] = L
    gens = []
    for T in M.min_gens:
        f = ring.one()
        for i, a in enumerate(T):
            for j in range(a):
                f = f * forms[(i, j)]
        gens.append(f)
    return Ideal(ring, gens)
