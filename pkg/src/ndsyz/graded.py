"""Graded pieces of ideals and quotients.

``GradedPieces`` works from generators by plain linear algebra (Macaulay
matrices); ``GradedQuotient`` works from a DegRevLex Gröbner basis and gives
standard-monomial bases and multiplication maps of ``R/I``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from . import linalg
from .polyring import Monomial, Order, Polynomial, RingContext, monomials_of_degree, order_key


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict[Monomial, int]:
    return {m: k for k, m in enumerate(monomials_of_degree(nvars, d))}


class GradedPieces:
    """``I_d`` as a subspace of ``R_d`` spanned by ``m * g`` for generators ``g``."""

    def __init__(self, ring: RingContext, gens: Sequence[Polynomial]):
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        for g in self.gens:
            if not g.is_homogeneous:
                raise ValueError("graded pieces need homogeneous generators")
        self._rref: dict[int, tuple[np.ndarray, list[int]]] = {}

    def macaulay_matrix(self, d: int, columns: Sequence[Monomial] | None = None) -> np.ndarray:
        n = self.ring.nvars
        cols = list(columns) if columns is not None else list(monomials_of_degree(n, d))
        index = {m: k for k, m in enumerate(cols)}
        rows = []
        for g in self.gens:
            e = g.degree
            if e > d:
                continue
            for m in monomials_of_degree(n, d - e):
                row = np.zeros(len(cols), dtype=np.int64)
                for t, c in g.terms.items():
                    row[index[tuple(a + b for a, b in zip(t, m))]] = c
                rows.append(row)
        if not rows:
            return np.zeros((0, len(cols)), dtype=np.int64)
        return np.array(rows, dtype=np.int64)

    def rref(self, d: int) -> tuple[np.ndarray, list[int]]:
        if d not in self._rref:
            self._rref[d] = linalg.rref(self.macaulay_matrix(d), self.ring.prime)
        return self._rref[d]

    def ideal_dim(self, d: int) -> int:
        if d < 0:
            return 0
        return len(self.rref(d)[1])

    def quotient_dim(self, d: int) -> int:
        return len(monomials_of_degree(self.ring.nvars, d)) - self.ideal_dim(d)

    def leading_monomials(self, d: int) -> list[Monomial]:
        """``in(I)_d`` under DegRevLex: the pivot columns of the reduced Macaulay matrix."""
        cols = monomials_of_degree(self.ring.nvars, d)
        return [cols[c] for c in self.rref(d)[1]]

    def filtered_dims(self, d: int, order) -> list[int]:
        """Pivot positions for columns sorted descending in ``order``.

        Returns the sorted list of column keys so callers can count the
        dimension of ``I_d`` intersected with any tail of the column order.
        """
        key = order_key(order)
        cols = sorted(monomials_of_degree(self.ring.nvars, d), key=key, reverse=True)
        E, piv = linalg.echelon(self.macaulay_matrix(d, cols), self.ring.prime)
        return [cols[c] for c in piv]


class GradedQuotient:
    """``R/I`` from a reduced DegRevLex basis: standard monomials and multiplication maps."""

    def __init__(self, ring: RingContext, basis: Sequence[Polynomial]):
        from .groebner import _Ctx, _as_basis

        self.ring = ring.with_order(Order.DEGREVLEX)
        self._ctx = _Ctx(self.ring.prime, Order.DEGREVLEX)
        self._basis = _as_basis([g.with_ring(self.ring) for g in basis], self._ctx)
        self._lms = [lm for lm, _ in self._basis]
        self._std: dict[int, list[Monomial]] = {}
        self._idx: dict[int, dict[Monomial, int]] = {}
        self._nf: dict[Monomial, dict[Monomial, int]] = {}

    def is_standard(self, m: Monomial) -> bool:
        return not any(all(a <= b for a, b in zip(lm, m)) for lm in self._lms)

    def standard(self, d: int) -> list[Monomial]:
        if d not in self._std:
            if d < 0:
                self._std[d] = []
            else:
                self._std[d] = [m for m in monomials_of_degree(self.ring.nvars, d) if self.is_standard(m)]
            self._idx[d] = {m: k for k, m in enumerate(self._std[d])}
        return self._std[d]

    def index(self, d: int) -> dict[Monomial, int]:
        self.standard(d)
        return self._idx[d]

    def dim(self, d: int) -> int:
        return len(self.standard(d))

    def normal_form(self, m: Monomial) -> dict[Monomial, int]:
        """Normal form of a monomial as ``{standard monomial: coefficient}``."""
        nf = self._nf.get(m)
        if nf is None:
            from .groebner import _reduce

            nf = _reduce({m: 1}, self._basis, self._ctx) if not self.is_standard(m) else {m: 1}
            self._nf[m] = nf
        return nf

    def times_variable(self, k: int, m: Monomial) -> dict[Monomial, int]:
        e = list(m)
        e[k] += 1
        return self.normal_form(tuple(e))
