"""Hilbert functions, Hilbert-series numerators and h-vectors."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence, Union

from .monideal import MonomialIdeal
from .polyring import Ideal, Monomial, mono_divides


# --------------------------------------------------------------------------- integer polynomials


def _add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for k, v in enumerate(a):
        out[k] += v
    for k, v in enumerate(b):
        out[k] += v
    return _trim(out)


def _shift(a: list[int], d: int) -> list[int]:
    return [0] * d + a if a else []


def _mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def divide_one_minus_t(a: list[int]) -> list[int]:
    """Exact quotient by ``1 - t``; raises if ``a(1) != 0``."""
    if sum(a) != 0:
        raise ArithmeticError("numerator is not divisible by 1 - t")
    out = []
    acc = 0
    for v in a[:-1]:
        acc += v
        out.append(acc)
    return _trim(out)


# --------------------------------------------------------------------------- K-polynomial


def _minimal(gens: list[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=sum)
    out: list[Monomial] = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def _colon(gens: list[Monomial], p: Monomial) -> list[Monomial]:
    return _minimal([tuple(max(a - b, 0) for a, b in zip(g, p)) for g in gens])


def _kpoly(gens: list[Monomial]) -> list[int]:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    # pairwise coprime generators: product of (1 - t^deg)
    used: dict[int, int] = {}
    coprime = True
    for g in gens:
        for i, a in enumerate(g):
            if a:
                used[i] = used.get(i, 0) + 1
                if used[i] > 1:
                    coprime = False
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot: most frequent variable, median exponent among its non-pure generators
    var = max(used, key=lambda i: (used[i], -i))
    exps = sorted(g[var] for g in gens if g[var] and sum(g) != g[var])
    a = exps[len(exps) // 2] if exps else 1
    p = tuple(a if i == var else 0 for i in range(len(gens[0])))
    plus = _minimal(gens + [p])
    return _add(_kpoly(plus), _shift(_kpoly(_colon(gens, p)), a))


def k_polynomial(M: MonomialIdeal) -> list[int]:
    """Numerator of ``H_{R/M}(t) * (1 - t)^nvars`` as a coefficient list."""
    return _kpoly(list(M.min_gens))


# --------------------------------------------------------------------------- Hilbert data


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple[int, ...]          # K-polynomial over (1-t)^nvars
    nvars: int
    krull_dim: int
    h_vector: tuple[int, ...]

    @property
    def proj_dim(self) -> int:
        return self.krull_dim - 1

    @property
    def codim(self) -> int:
        return self.nvars - self.krull_dim

    @property
    def degree(self) -> int:
        return sum(self.h_vector)

    def hilbert_function(self, d: int) -> int:
        if d < 0:
            return 0
        n = self.nvars
        return sum(c * comb(d - k + n - 1, n - 1) for k, c in enumerate(self.numerator) if d - k >= 0)

    def as_dict(self) -> dict:
        return {
            "n": self.proj_dim,
            "e": self.codim,
            "degree": self.degree,
            "h_vector": list(self.h_vector),
            "numerator": list(self.numerator),
        }


def hilbert_series_numerator(M: MonomialIdeal) -> tuple[list[int], int]:
    """h-vector and Krull dimension of ``R/M``.

    The K-polynomial is divided by ``1 - t`` while the division is exact; the
    number of divisions is the codimension.
    """
    K = k_polynomial(M)
    if not K:
        return [], 0
    h = list(K)
    codim = 0
    while sum(h) == 0:
        h = divide_one_minus_t(h)
        codim += 1
    return h, M.nvars - codim


def _initial(I) -> MonomialIdeal:
    if isinstance(I, MonomialIdeal):
        return I
    if not I.is_homogeneous():
        raise ValueError("Hilbert data need a homogeneous ideal")
    if I.is_monomial():
        return MonomialIdeal.from_polynomials(I.ring, I.gens)
    from .groebner import groebner_of

    return groebner_of(I).initial_ideal()


def hilbert_data(I: Union[Ideal, MonomialIdeal]) -> HilbertData:
    M = _initial(I)
    K = k_polynomial(M)
    h, dim = hilbert_series_numerator(M)
    return HilbertData(tuple(K), M.nvars, dim, tuple(h))


def hilbert_function(I: Union[Ideal, MonomialIdeal], d: int) -> int:
    """``dim (R/I)_d`` through the initial ideal."""
    return hilbert_data(I).hilbert_function(d)


def dimension_degree(I) -> tuple[int, int, int]:
    """``(n, e, degree)``: projective dimension, codimension and degree."""
    H = hilbert_data(I)
    return H.proj_dim, H.codim, H.degree


def hilbert_function_linear_algebra(I: Ideal, d: int) -> int:
    """``dim (R/I)_d`` by ranks of Macaulay matrices; an oracle independent of Gröbner bases."""
    from .graded import GradedPieces

    return GradedPieces(I.ring, I.gens).quotient_dim(d)


# --------------------------------------------------------------------------- h-vector formula


@dataclass
class HVectorReport:
    ell: int
    e: int
    n: int
    h_vector: list[int]
    formula: list[int]
    expected_binomials: list[int]
    ideal_dims: list[int]
    ok: bool
    violations: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "ell": self.ell,
            "e": self.e,
            "h_vector": self.h_vector,
            "formula": self.formula,
            "ok": self.ok,
            "violations": self.violations,
        }


def h_nonnegativity_check(I: Union[Ideal, MonomialIdeal], ell: int, data: HilbertData | None = None) -> HVectorReport:
    """Compare ``h_0..h_ell`` with the alternating-sum formula in ``dim I_k``.

    The formula is ``h_j = C(e+j-1, j) - sum_i (-1)^i C(n+1, i) dim I_{j-i}``.
    Under ND(ell-1) the corrections vanish below ``ell``, so ``h_j`` equals the
    binomial for ``j < ell`` and ``h_ell = C(e+ell-1, ell) - dim I_ell >= 0``.
    """
    H = data or hilbert_data(I)
    e, n = H.codim, H.proj_dim
    N = H.nvars
    dims = [comb(j + N - 1, N - 1) - H.hilbert_function(j) for j in range(ell + 1)]
    if isinstance(I, Ideal) and not I.is_monomial():
        # independent oracle for dim I_j
        dims = [I.dim_in_degree(j) for j in range(ell + 1)]
    h = list(H.h_vector) + [0] * (ell + 1 - len(H.h_vector))
    formula = []
    binoms = []
    for j in range(ell + 1):
        b = comb(e + j - 1, j)
        binoms.append(b)
        corr = sum((-1) ** i * comb(n + 1, i) * dims[j - i] for i in range(j + 1))
        formula.append(b - corr)
    violations = []
    for j in range(ell + 1):
        if h[j] != formula[j]:
            violations.append(f"h_{j} = {h[j]} but the formula gives {formula[j]}")
        if h[j] < 0:
            violations.append(f"h_{j} = {h[j]} < 0")
    for j in range(ell):
        if h[j] != binoms[j]:
            violations.append(f"h_{j} = {h[j]} differs from C(e+j-1, j) = {binoms[j]}")
    if h[ell] != binoms[ell] - dims[ell]:
        violations.append(f"h_{ell} = {h[ell]} differs from C(e+ell-1, ell) - dim I_ell = {binoms[ell] - dims[ell]}")
    return HVectorReport(ell, e, n, h[: ell + 1], formula, binoms, dims, not violations, violations)
