"""Buchberger's algorithm, elimination and saturation over GF(p)."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polyring import (
    BlockOrder,
    Ideal,
    Monomial,
    MonomialOrder,
    Order,
    Polynomial,
    RingContext,
    mono_divides,
    mono_lcm,
    order_key,
    permute_variables,
)


class NotHomogeneousError(ValueError):
    pass


# --------------------------------------------------------------------------- internals
#
# Inside this module polynomials are plain dicts {exponents: residue} and a
# basis element is a tuple (lm, terms) with terms monic in lm.


class _Ctx:
    __slots__ = ("p", "key", "cache")

    def __init__(self, p: int, order: MonomialOrder):
        self.p = p
        self.key = order_key(order)
        self.cache: dict = {}

    def nkey(self, e: Monomial) -> tuple:
        k = self.cache.get(e)
        if k is None:
            k = tuple(-v for v in self.key(e))
            self.cache[e] = k
        return k

    def lm(self, f: dict) -> Monomial:
        return min(f, key=self.nkey)


def _find_divisor(e: Monomial, basis: Sequence[tuple[Monomial, dict]]):
    for lm, g in basis:
        if all(a <= b for a, b in zip(lm, e)):
            return lm, g
    return None


def _reduce(f: dict, basis: Sequence[tuple[Monomial, dict]], ctx: _Ctx, full: bool = True) -> dict:
    """Remainder of ``f`` on division by ``basis`` (full reduction when ``full``)."""
    if not f or not basis:
        return dict(f)
    p = ctx.p
    f = dict(f)
    heap = [(ctx.nkey(e), e) for e in f]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = f.pop(e, None)
        if not c:
            continue
        hit = _find_divisor(e, basis)
        if hit is None:
            rem[e] = c
            if not full:
                rem.update(f)
                return rem
            continue
        lm, g = hit
        q = tuple(a - b for a, b in zip(e, lm))
        for ge, gc in g.items():
            if ge == lm:
                continue
            m = tuple(a + b for a, b in zip(ge, q))
            old = f.get(m)
            v = ((old or 0) - c * gc) % p
            if v:
                if old is None:
                    heapq.heappush(heap, (ctx.nkey(m), m))
                f[m] = v
            elif old is not None:
                del f[m]
    return rem


def _monic(f: dict, ctx: _Ctx) -> tuple[Monomial, dict]:
    lm = ctx.lm(f)
    inv = pow(f[lm], -1, ctx.p)
    p = ctx.p
    return lm, {e: c * inv % p for e, c in f.items()}


def _spoly(a: tuple[Monomial, dict], b: tuple[Monomial, dict], p: int) -> dict:
    (la, fa), (lb, fb) = a, b
    L = mono_lcm(la, lb)
    qa = tuple(x - y for x, y in zip(L, la))
    qb = tuple(x - y for x, y in zip(L, lb))
    out: dict = {}
    for e, c in fa.items():
        m = tuple(x + y for x, y in zip(e, qa))
        out[m] = c
    for e, c in fb.items():
        m = tuple(x + y for x, y in zip(e, qb))
        v = (out.get(m, 0) - c) % p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _deg(e: Monomial) -> int:
    return sum(e)


def _buchberger(inputs: Iterable[dict], ctx: _Ctx) -> list[tuple[Monomial, dict]]:
    polys: list[tuple[Monomial, dict]] = []
    sugar: list[int] = []
    active: list[int] = []
    pairs: list[tuple[int, tuple, int, int, Monomial]] = []  # (sugar, nkey(lcm), i, j, lcm)
    pending = []
    for n, f in enumerate(inputs):
        if f:
            pending.append((max(_deg(e) for e in f), n, f))
    heapq.heapify(pending)

    def update(h: int):
        nonlocal pairs, active
        lh = polys[h][0]
        cand = [(g, mono_lcm(lh, polys[g][0])) for g in active]
        kept: list[tuple[int, Monomial]] = []
        for idx, (g, L) in enumerate(cand):
            if _coprime(lh, polys[g][0]):
                kept.append((g, L))
                continue
            if any(mono_divides(L2, L) for _, L2 in cand[idx + 1:]):
                continue
            if any(mono_divides(L2, L) for _, L2 in kept):
                continue
            kept.append((g, L))
        new_pairs = []
        for i, j, L in ((i, j, L) for (_, _, i, j, L) in pairs):
            if (
                mono_divides(lh, L)
                and mono_lcm(polys[i][0], lh) != L
                and mono_lcm(polys[j][0], lh) != L
            ):
                continue
            new_pairs.append((i, j, L))
        for g, L in kept:
            if not _coprime(lh, polys[g][0]):
                new_pairs.append((g, h, L))
        pairs = []
        for i, j, L in new_pairs:
            s = max(sugar[i] + _deg(L) - _deg(polys[i][0]), sugar[j] + _deg(L) - _deg(polys[j][0]))
            pairs.append((s, ctx.nkey(L), i, j, L))
        active = [g for g in active if not mono_divides(lh, polys[g][0])] + [h]

    def add(f: dict, s: int):
        lm, g = _monic(f, ctx)
        polys.append((lm, g))
        sugar.append(s)
        update(len(polys) - 1)

    while pairs or pending:
        best = min(pairs) if pairs else None
        if pending and (best is None or pending[0][0] <= best[0]):
            s, _, f = heapq.heappop(pending)
        else:
            pairs.remove(best)
            s, _, i, j, _ = best
            f = _spoly(polys[i], polys[j], ctx.p)
        r = _reduce(f, [polys[g] for g in active], ctx)
        if r:
            add(r, s)

    basis = [polys[g] for g in active]
    # interreduce; leading monomials are already minimal
    out = []
    for k, (lm, g) in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        tail = dict(g)
        del tail[lm]
        tail = _reduce(tail, others, ctx)
        tail[lm] = 1
        out.append((lm, tail))
    out.sort(key=lambda t: ctx.nkey(t[0]))
    return out


# --------------------------------------------------------------------------- public API


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingContext
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        return reduce(f.with_ring(self.ring) if f.ring != self.ring else f, self.elements)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def initial_ideal(self):
        return initial_ideal(self)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _ctx_for(ring: RingContext) -> _Ctx:
    return _Ctx(ring.prime, ring.order)


def _as_basis(G: Sequence[Polynomial], ctx: _Ctx) -> list[tuple[Monomial, dict]]:
    out = []
    for g in G:
        if g.is_zero():
            continue
        out.append(_monic(g.terms, ctx))
    return out


def reduce(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` under ``f.ring.order``."""
    ctx = _ctx_for(f.ring)
    for g in G:
        f._check(g)
    return Polynomial._raw(f.ring, _reduce(f.terms, _as_basis(G, ctx), ctx))


def buchberger(
    gens: Iterable[Polynomial],
    order: MonomialOrder | None = None,
    *,
    ring: RingContext | None = None,
    allow_inhomogeneous: bool = False,
    check: bool = True,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Inhomogeneous input is rejected unless ``allow_inhomogeneous`` is set
    (used internally by the Rabinowitsch saturation).  With ``check`` the
    Buchberger criterion is re-verified on the output.
    """
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    if order is not None:
        ring = ring.with_order(order)
    for g in gens:
        if g.ring.nvars != ring.nvars or g.ring.prime != ring.prime:
            raise ValueError("ring context mismatch")
        if not allow_inhomogeneous and not g.is_homogeneous:
            raise NotHomogeneousError(f"inhomogeneous generator: {g}")
    ctx = _ctx_for(ring)
    basis = _buchberger([g.terms for g in gens], ctx)
    G = GroebnerBasis(ring, tuple(Polynomial._raw(ring, g) for _, g in basis), True)
    if check and not is_groebner_basis(G.elements, ring):
        raise AssertionError("Buchberger output failed the S-pair criterion")
    return G


def is_groebner_basis(G: Sequence[Polynomial], ring: RingContext | None = None) -> bool:
    """Every S-polynomial reduces to 0 (coprime pairs are skipped: they always do)."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return True
    ring = ring or G[0].ring
    ctx = _ctx_for(ring)
    basis = _as_basis([g.with_ring(ring) for g in G], ctx)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if _coprime(basis[a][0], basis[b][0]):
                continue
            if _reduce(_spoly(basis[a], basis[b], ctx.p), basis, ctx):
                return False
    return True


def initial_ideal(G: GroebnerBasis):
    """Minimal monomial generators of ``in(I)``."""
    from .monideal import MonomialIdeal

    return MonomialIdeal.from_monomials(G.ring, G.leading_monomials())


def groebner_of(I: Ideal, order: MonomialOrder = Order.DEGREVLEX, check: bool = False) -> GroebnerBasis:
    if not I.gens:
        return GroebnerBasis(I.ring.with_order(order), (), True)
    return buchberger(I.gens, order, ring=I.ring, check=check)


def eliminate(gens: Iterable[Polynomial], k: int, order: str = "block", ring: RingContext | None = None) -> list[Polynomial]:
    """Generators of ``I ∩ k[x_k, ..., x_N]``, returned in a ring with ``N+1-k`` variables.

    ``order="block"`` uses the product order (first ``k`` variables | rest)
    which is an elimination order and usually much cheaper than ``"lex"``.
    """
    gens = [g for g in gens if not g.is_zero()]
    if ring is None and gens:
        ring = gens[0].ring
    n = ring.nvars
    if not 0 <= k <= n:
        raise ValueError("keep_vars must be a suffix of the variables")
    sub = ring.with_nvars(n - k)
    if not gens:
        return []
    if k == 0:
        G = buchberger(gens, Order.DEGREVLEX, ring=ring, check=False)
        return [Polynomial._raw(sub, g.terms) for g in G]
    elim_order = Order.LEX if order == "lex" else BlockOrder(k)
    G = buchberger(gens, elim_order, ring=ring, allow_inhomogeneous=True, check=False)
    out = []
    for g in G:
        if all(not any(e[:k]) for e in g.terms):
            out.append(Polynomial._raw(sub, {e[k:]: c for e, c in g.terms.items()}))
    return out


def saturate_by_variable(gens: Iterable[Polynomial], i: int, ring: RingContext | None = None) -> list[Polynomial]:
    """``I : x_i^∞`` via a DegRevLex basis with ``x_i`` moved to the last slot."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = (ring or gens[0].ring).with_order(Order.DEGREVLEX)
    n = ring.nvars
    perm = list(range(n))
    perm[i], perm[n - 1] = perm[n - 1], perm[i]
    moved = [permute_variables(g.with_ring(ring), perm) for g in gens]
    G = buchberger(moved, Order.DEGREVLEX, ring=ring, check=False)
    divided = []
    for g in G:
        low = min(e[n - 1] for e in g.terms)
        terms = {e[:n - 1] + (e[n - 1] - low,): c for e, c in g.terms.items()}
        divided.append(Polynomial._raw(ring, terms))
    back = [permute_variables(g, perm) for g in divided]  # the swap is an involution
    return list(buchberger(back, Order.DEGREVLEX, ring=ring, check=False).elements)


def saturate(gens: Iterable[Polynomial], f: Polynomial, method: str = "auto") -> list[Polynomial]:
    """Generators of ``I : f^∞``.

    The general route adjoins ``w`` with ``1 - w f`` and eliminates ``w``; the
    homogeneous components of the surviving basis are re-collected into a
    DegRevLex basis.  Monomial ``f`` takes the variable-by-variable fast path
    unless ``method="rabinowitsch"``.
    """
    gens = [g for g in gens if not g.is_zero()]
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    ring = f.ring.with_order(Order.DEGREVLEX)
    if not gens:
        return []
    if f.degree == 0:
        return list(buchberger(gens, Order.DEGREVLEX, ring=ring, check=False).elements)
    if method == "auto" and len(f) == 1:
        (e,) = f.terms
        cur = gens
        for i, a in enumerate(e):
            if a:
                cur = saturate_by_variable(cur, i, ring)
        return cur
    n = ring.nvars
    big = RingContext(n + 1, ring.prime, BlockOrder(1))

    def lift(g: Polynomial) -> Polynomial:
        return Polynomial._raw(big, {(0,) + e: c for e, c in g.terms.items()})

    w = big.var(0)
    rab = [lift(g) for g in gens] + [big.one() - w * lift(f)]
    G = buchberger(rab, BlockOrder(1), ring=big, allow_inhomogeneous=True, check=False)
    pieces = []
    for g in G:
        if all(e[0] == 0 for e in g.terms):
            h = Polynomial._raw(ring, {e[1:]: c for e, c in g.terms.items()})
            pieces.extend(h.homogeneous_components().values())
    return list(buchberger(pieces, Order.DEGREVLEX, ring=ring, check=False).elements)


def ideal_contains(I: Sequence[Polynomial], J: Sequence[Polynomial]) -> bool:
    """True iff every element of ``J`` lies in the ideal generated by ``I``."""
    I = [g for g in I if not g.is_zero()]
    J = [g for g in J if not g.is_zero()]
    if not J:
        return True
    if not I:
        return False
    ring = I[0].ring.with_order(Order.DEGREVLEX)
    G = buchberger(I, Order.DEGREVLEX, ring=ring, allow_inhomogeneous=True, check=False)
    return all(G.contains(g.with_ring(ring)) for g in J)


def ideals_equal(I: Sequence[Polynomial], J: Sequence[Polynomial]) -> bool:
    return ideal_contains(I, J) and ideal_contains(J, I)
