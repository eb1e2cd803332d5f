"""Graded Betti numbers by Koszul homology, and predicates on Betti tables.

``beta_{i,j}`` is the dimension of ``Tor_i(R/I, k)`` in degree ``i + j``; it is
read off the strand ``C_{i,t} = wedge^i V (x) (R/I)_{t-i}`` of the Koszul
complex as ``dim C_{i,t} - rank d_{i,t} - rank d_{i+1,t}``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence, Union

import numpy as np

from . import linalg
from .graded import GradedQuotient
from .groebner import GroebnerBasis, groebner_of
from .polyring import Ideal, Polynomial, RingContext

DENSE_ENTRY_LIMIT = 4_000_000


class TruncatedTableError(ValueError):
    pass


@dataclass
class BettiTable:
    """Sparse ``(i, j) -> beta_{i,j}`` together with the range actually computed."""

    entries: dict[tuple[int, int], int]
    nvars: int
    max_i: int
    max_j: int
    complete: bool = False

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}
        for v in self.entries.values():
            if v < 0:
                raise ValueError("Betti numbers are nonnegative")

    def known(self, i: int, j: int) -> bool:
        return self.complete or (0 <= i <= self.max_i and 0 <= j <= self.max_j)

    def get(self, i: int, j: int) -> int | None:
        """The entry, or None when outside the computed range."""
        if not self.known(i, j):
            return None
        return self.entries.get((i, j), 0)

    def __getitem__(self, key: tuple[int, int]) -> int:
        v = self.get(*key)
        if v is None:
            raise KeyError(f"beta_{key} lies outside the computed range")
        return v

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def projective_dimension(self) -> int:
        if not self.complete:
            raise TruncatedTableError("projective dimension needs a complete table")
        return max((i for i, _ in self.entries), default=0)

    def regularity(self) -> int:
        if not self.complete:
            raise TruncatedTableError("regularity needs a complete table")
        return max((j for _, j in self.entries), default=0)

    def row(self, j: int) -> dict[int, int]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def euler_numerator(self) -> list[int]:
        """``sum (-1)^i beta_{i,j} t^{i+j}``; equals the K-polynomial of ``R/I``."""
        if not self.entries:
            return []
        top = max(i + j for i, j in self.entries)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[i + j] += (-1) ** i * v
        while out and out[-1] == 0:
            out.pop()
        return out

    # -- text
    def to_text(self) -> str:
        if not self.entries:
            return "(zero table)"
        top_i = max(i for i, _ in self.entries)
        top_j = max(j for _, j in self.entries)
        cells = [[str(self.entries.get((i, j), 0) or "-") for i in range(top_i + 1)] for j in range(top_j + 1)]
        width = max(len(c) for row in cells for c in row)
        width = max(width, len(str(top_i)), *(len(str(self.total(i))) for i in range(top_i + 1)))
        lab = max(len("total:"), len(str(top_j)) + 1)
        lines = [" " * lab + " " + " ".join(str(i).rjust(width) for i in range(top_i + 1))]
        lines.append("total:".rjust(lab) + " " + " ".join(str(self.total(i)).rjust(width) for i in range(top_i + 1)))
        for j in range(top_j + 1):
            lines.append(f"{j}:".rjust(lab) + " " + " ".join(c.rjust(width) for c in cells[j]))
        if not self.complete:
            lines.append(f"(computed for i <= {self.max_i}, j <= {self.max_j})")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()

    def to_triples(self) -> list[dict]:
        return [{"i": i, "j": j, "beta": v} for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_triples(cls, triples: Iterable, nvars: int | None = None, complete: bool = True) -> BettiTable:
        entries = {}
        for t in triples:
            if isinstance(t, dict):
                i, j, v = t["i"], t["j"], t["beta"]
            else:
                i, j, v = t
            entries[(int(i), int(j))] = entries.get((int(i), int(j)), 0) + int(v)
        mi = max((i for i, _ in entries), default=0)
        mj = max((j for _, j in entries), default=0)
        return cls(entries, nvars if nvars is not None else mi, mi, mj, complete)

    @classmethod
    def parse_text(cls, text: str) -> BettiTable:
        """Read the layout produced by ``to_text`` (a ``total:`` line is optional)."""
        entries = {}
        header = None
        for line in text.splitlines():
            s = line.strip()
            if not s or s.startswith("#") or s.startswith("("):
                continue
            s = s.replace("|", " ")
            if header is None and not re.match(r"^\S+:", s):
                header = [int(x) for x in s.split()]
                continue
            m = re.match(r"^(\S+):\s*(.*)$", s)
            if not m:
                raise ValueError(f"cannot read table line {line!r}")
            label, rest = m.groups()
            if label == "total":
                continue
            j = int(label)
            cols = rest.split()
            idx = header if header is not None else list(range(len(cols)))
            for i, c in zip(idx, cols):
                if c not in ("-", "0", "."):
                    entries[(i, j)] = int(c)
        return cls.from_triples([(i, j, v) for (i, j), v in entries.items()])


# --------------------------------------------------------------------------- Koszul strands


def _reduced_basis(I) -> tuple[RingContext, list[Polynomial]]:
    from .monideal import MonomialIdeal

    if isinstance(I, MonomialIdeal):
        return I.ring.with_order(I.ring.order), [Polynomial._raw(I.ring, {g: 1}) for g in I.min_gens]
    if isinstance(I, GroebnerBasis):
        return I.ring, list(I.elements)
    if not I.gens:
        return I.ring, []
    if not I.is_homogeneous():
        raise ValueError("Betti numbers need a homogeneous ideal")
    if I.is_monomial():
        M = MonomialIdeal.from_polynomials(I.ring, I.gens)
        return I.ring, [Polynomial._raw(I.ring, {g: 1}) for g in M.min_gens]
    G = groebner_of(I)
    return G.ring, list(G.elements)


def _drop_unused(ring: RingContext, basis: list[Polynomial]) -> tuple[RingContext, list[Polynomial]]:
    used = sorted({i for g in basis for i in g.variables()})
    if len(used) == ring.nvars:
        return ring, basis
    sub = RingContext(max(len(used), 1), ring.prime)
    out = []
    for g in basis:
        terms = {}
        for e, c in g.terms.items():
            t = tuple(e[i] for i in used) if used else (0,)
            terms[t] = c
        out.append(Polynomial._raw(sub, terms))
    return sub, out


def _strand_rank(Q: GradedQuotient, n: int, i: int, t: int) -> int:
    """Rank of ``d_i : wedge^i V (x) A_{t-i} -> wedge^{i-1} V (x) A_{t-i+1}``."""
    q = t - i
    if i < 1 or i > n or q < 0:
        return 0
    src_std = Q.standard(q)
    if not src_std:
        return 0
    tgt_idx = Q.index(q + 1)
    if not tgt_idx:
        return 0
    subsets_low = {S: k for k, S in enumerate(combinations(range(n), i - 1))}
    width = len(tgt_idx)
    rows = []
    for S in combinations(range(n), i):
        for m in src_std:
            row: dict[int, int] = {}
            for r, s in enumerate(S):
                nf = Q.times_variable(s, m)
                if not nf:
                    continue
                base = subsets_low[S[:r] + S[r + 1:]] * width
                sign = 1 if r % 2 == 0 else -1
                for mono, c in nf.items():
                    col = base + tgt_idx[mono]
                    row[col] = row.get(col, 0) + sign * c
            if row:
                rows.append(row)
    if not rows:
        return 0
    ncols = len(subsets_low) * width
    p = Q.ring.prime
    if len(rows) * ncols <= DENSE_ENTRY_LIMIT and ncols <= linalg.DENSE_COLUMN_LIMIT:
        A = np.zeros((len(rows), ncols), dtype=np.int64)
        for r, row in enumerate(rows):
            for c, v in row.items():
                A[r, c] = v % p
        return linalg.rank(A, p)
    return linalg.sparse_rank(rows, p)


def koszul_betti(I, max_i: int | None = None, max_j: int | None = None, complete: bool = False) -> BettiTable:
    """``beta_{i,j}(R/I)`` for ``i <= max_i`` and ``j <= max_j`` from Koszul strands.

    ``I`` may be an :class:`Ideal`, a monomial ideal or a DegRevLex Gröbner
    basis.  Variables missing from the reduced basis are dropped first (they
    form a regular sequence on ``R/I``).  Pass ``complete=True`` only when the
    bounds are known to contain the whole table.
    """
    ring, basis = _reduced_basis(I)
    nvars = ring.nvars
    if any(g.degree == 0 for g in basis):
        return BettiTable({}, nvars, max_i or nvars, max_j or 0, complete=True)
    ring, basis = _drop_unused(ring, basis)
    n = ring.nvars if basis else 0
    if max_i is None:
        max_i = nvars
    if max_j is None:
        max_j = max((g.degree for g in basis), default=1)
    if max_i < 0 or max_j < 0:
        raise ValueError("bounds must be nonnegative")
    if not basis:
        return BettiTable({(0, 0): 1}, nvars, max_i, max_j, complete=True)
    Q = GradedQuotient(ring, basis)
    entries: dict[tuple[int, int], int] = {}
    ranks: dict[tuple[int, int], int] = {}

    def rk(i: int, t: int) -> int:
        if (i, t) not in ranks:
            ranks[(i, t)] = _strand_rank(Q, n, i, t)
        return ranks[(i, t)]

    for i in range(0, min(max_i, n) + 1):
        for j in range(0, max_j + 1):
            t = i + j
            dim = comb(n, i) * Q.dim(t - i)
            if not dim:
                continue
            b = dim - rk(i, t) - rk(i + 1, t)
            if b:
                entries[(i, j)] = b
    return BettiTable(entries, nvars, max_i, max_j, complete=complete)


def betti_table(I, seed: int = 0, trials: int = 2, gin=None) -> BettiTable:
    """Complete Betti table of ``R/I``.

    With ``g`` the random change used for the Gin, the trailing variables
    left out of ``Gin(I)`` form a regular sequence on ``R/g.I``; the table is
    computed over the restriction to the first ``pd`` variables, with
    ``i <= pd`` and ``j <= reg(I) - 1``, which bounds every nonzero entry.
    """
    from .gin import GinInstabilityError, generic_initial_ideal
    from .monideal import MonomialIdeal

    if isinstance(I, MonomialIdeal):
        I = I.to_ideal()
    nvars = I.ring.nvars
    if not I.gens:
        return BettiTable({(0, 0): 1}, nvars, nvars, 0, complete=True)
    if I.is_monomial():
        M = MonomialIdeal.from_polynomials(I.ring, I.gens)
        if M.is_unit():
            return BettiTable({}, nvars, nvars, 0, complete=True)
        # monomial input: Koszul directly, bounded by the Gin data
        g = gin or generic_initial_ideal(I, trials=trials, seed=seed)
        if not g.stable:
            raise GinInstabilityError("unstable Gin; cannot bound the table")
        B = koszul_betti(M, max_i=nvars, max_j=max(g.gin.max_degree() - 1, 0))
        return BettiTable(B.entries, nvars, nvars, B.max_j, complete=True)
    g = gin or generic_initial_ideal(I, trials=trials, seed=seed)
    if not g.stable:
        raise GinInstabilityError("unstable Gin; cannot bound the table")
    if g.gin.is_unit():
        return BettiTable({}, nvars, nvars, 0, complete=True)
    sec = g.section
    pd = g.gin.support()
    reg = g.gin.max_degree()
    B = koszul_betti(sec.basis, max_i=pd, max_j=max(reg - 1, 0))
    return BettiTable(B.entries, nvars, nvars, max(reg - 1, 0), complete=True)


# --------------------------------------------------------------------------- predicates


@dataclass
class NdpVerdict:
    holds: bool | None
    witness: tuple[int, int, int] | None = None   # (i, j, beta)
    reason: str = ""

    def __bool__(self):
        return bool(self.holds)


def property_ndp(B: BettiTable, d: int, steps: int) -> NdpVerdict:
    """``N_{d,steps}``: ``beta_{i,j} = 0`` for ``1 <= i <= steps`` and ``j >= d``."""
    for (i, j), v in sorted(B.entries.items()):
        if 1 <= i <= steps and j >= d and v:
            return NdpVerdict(False, (i, j, v), f"beta_{{{i},{j}}} = {v}")
    if not B.complete and steps > B.max_i:
        return NdpVerdict(None, None, "table truncated in homological degree")
    if not B.complete:
        return NdpVerdict(None, None, "table truncated in internal degree")
    return NdpVerdict(True)


def is_acm_dlinear(B: BettiTable, e: int, d: int) -> bool:
    """Projective dimension ``e`` and every ``beta_{i,j}`` with ``i >= 1`` in row ``j = d - 1``."""
    if not B.complete:
        raise TruncatedTableError("ACM linearity needs a complete table")
    if B.projective_dimension() != e:
        return False
    return all(j == d - 1 for (i, j) in B.entries if i >= 1)


@dataclass
class ThmAReport:
    e: int
    ell: int
    rows: list[dict]
    vanishing_above_e: bool
    bound_holds: bool
    equality_indices: list[int]
    equivalences: dict[str, bool | None] = field(default_factory=dict)
    informational: bool = False

    @property
    def consistent(self) -> bool:
        if self.informational:
            return True
        if not (self.bound_holds and self.vanishing_above_e):
            return False
        if self.equality_indices:
            return all(v is not False for v in self.equivalences.values())
        return True

    def as_dict(self) -> dict:
        return {
            "e": self.e,
            "ell": self.ell,
            "rows": self.rows,
            "vanishing_above_e": self.vanishing_above_e,
            "bound_holds": self.bound_holds,
            "equality_indices": self.equality_indices,
            "equivalences": self.equivalences,
            "informational": self.informational,
        }


def thmA_verdict(B: BettiTable, e: int, ell: int, gin=None, degree: int | None = None, certified: bool = True) -> ThmAReport:
    """Margins ``C(i+ell-1, ell) C(e+ell, i+ell) - beta_{i,ell}`` for ``1 <= i <= e``.

    At any equality the three equivalent conditions are checked: Gin equals
    ``(x0..x_{e-1})^(ell+1)``, the resolution is ACM ``(ell+1)``-linear, and
    the degree is ``C(e+ell, ell)``.  ``certified=False`` marks the report as
    informational (ND(ell) was not established).
    """
    from .monideal import power_ideal, power_ideal_betti

    rows = []
    equal = []
    ok = True
    for i in range(1, e + 1):
        b = B.get(i, ell)
        bound = power_ideal_betti(e, ell, i)
        row = {"i": i, "beta": b, "bound": bound, "margin": None if b is None else bound - b}
        rows.append(row)
        if b is None:
            continue
        if b > bound:
            ok = False
        if b == bound:
            equal.append(i)
    above = all(not v for (i, j), v in B.entries.items() if j == ell and i > e)
    eq: dict[str, bool | None] = {}
    if equal:
        if gin is not None:
            J0 = power_ideal(e, ell, nvars=gin.gin.nvars)
            eq["gin_is_power_ideal"] = gin.gin.same_as(J0)
        else:
            eq["gin_is_power_ideal"] = None
        eq["acm_linear"] = is_acm_dlinear(B, e, ell + 1) if B.complete else None
        eq["minimal_degree"] = None if degree is None else degree == comb(e + ell, ell)
    return ThmAReport(e, ell, rows, above, ok, equal, eq, informational=not certified)


@dataclass
class RigidityReport:
    d: int
    e: int
    nd_holds: bool | None
    ndp_holds: bool | None
    failed: list[str]
    acm_linear: bool | None = None
    degree: int | None = None
    degree_bound: int | None = None
    conclusion_asserted: bool = False
    ok: bool = True

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in (
            "d", "e", "nd_holds", "ndp_holds", "failed", "acm_linear",
            "degree", "degree_bound", "conclusion_asserted", "ok")}


def rigidity_check(I, d: int, seed: int = 0, trials: int = 2, betti: BettiTable | None = None, gin=None) -> RigidityReport:
    """ND(d-1) together with ``N_{d,e}`` forces an ACM ``d``-linear resolution and degree ``C(d-1+e, e)``.

    The conclusion is only asserted when both hypotheses are verified; a
    failure of the conclusion then sets ``ok=False`` (a contract violation).
    """
    from .gin import generic_initial_ideal
    from .hilbert import hilbert_data
    from .monideal import MonomialIdeal
    from .nd import nd_check

    if isinstance(I, MonomialIdeal):
        I = I.to_ideal()
    H = hilbert_data(I)
    e = H.codim
    g = gin or generic_initial_ideal(I, trials=trials, seed=seed)
    cert = nd_check(I, d - 1, seed=seed, gin=g, hilbert=H)
    B = betti or betti_table(I, seed=seed, gin=g)
    ndp = property_ndp(B, d, e)
    failed = []
    if cert.verdict != "certified":
        failed.append(f"ND({d - 1})")
    if not ndp.holds:
        failed.append(f"N_{{{d},{e}}}" + (f" ({ndp.reason})" if ndp.reason else ""))
    rep = RigidityReport(d, e, cert.verdict == "certified", ndp.holds, failed)
    rep.degree = H.degree
    rep.degree_bound = comb(d - 1 + e, e)
    if not failed:
        rep.conclusion_asserted = True
        rep.acm_linear = is_acm_dlinear(B, e, d)
        rep.ok = rep.acm_linear and rep.degree == rep.degree_bound
    return rep
