"""Acceptance criteria 1-10.

Each ``criterion_*`` function returns ``(ok, detail)`` and measures its own
runtime against the stated limit.  Under pytest the verdicts are collected
and printed as one PASS/FAIL line per criterion in the terminal summary;
``python tests/test_acceptance.py`` prints the same lines directly.
"""
from __future__ import annotations

import sys
import time
from fractions import Fraction
from math import comb
from pathlib import Path

import numpy as np
import pytest

from ndsyz.betti import betti_table, is_acm_dlinear, koszul_betti, property_ndp, rigidity_check, thmA_verdict
from ndsyz.boij_soderberg import decompose, from_betti, recompose
from ndsyz.cli import analyze
from ndsyz.constructions import (
    ProjectionError,
    general_hyperplane_section,
    generic_catalecticant_minors,
    project_from_points,
    random_points,
    rational_normal_curve,
    recenter,
    rnc_variety,
)
from ndsyz.gin import cancellation_decomposition, generic_initial_ideal
from ndsyz.groebner import groebner_of
from ndsyz.hilbert import h_nonnegativity_check, hilbert_data, hilbert_function_linear_algebra
from ndsyz.io import read_ideal, read_table
from ndsyz.monideal import (
    MonomialIdeal,
    binomial_identity,
    borel_closure,
    borel_point_section,
    distraction,
    ek_betti,
    power_ideal,
    power_ideal_betti,
)
from ndsyz.nd import nd_check, nd_index
from ndsyz.pei import multisecant_length_sampler, partial_elimination_ideals, secant_locus_check
from ndsyz.polyring import Ideal, Polynomial, RingContext, monomials_of_degree, random_invertible_matrix

DATA = Path(__file__).resolve().parent.parent / "data"

GIN_TORIC = [
    "x0^4", "x0^3*x1^2", "x0^2*x1^3", "x0*x1^5", "x1^6",
    "x0*x1^4*x2^2", "x1^5*x2^2", "x0^3*x1*x2^4", "x0^2*x1^2*x2^5",
]
CURVE_TABLE = {(0, 0): 1, (1, 2): 1, (1, 3): 6, (2, 3): 9, (3, 3): 3}
SECTION_TABLE = {(0, 0): 1, (1, 2): 4, (2, 2): 3}
DISTRACTION_CASES = [(2, 1), (2, 2), (3, 2)]


class Clock:
    def __init__(self, limit: float):
        self.limit = limit
        self.t0 = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.t0

    def ok(self) -> bool:
        return self.elapsed < self.limit

    def note(self) -> str:
        return f"{self.elapsed:.2f}s (limit {self.limit:g}s)"


def _distraction_object(e: int, ell: int) -> Ideal:
    return distraction(power_ideal(e, ell, nvars=e + 2), seed=1)


def _ci22() -> Ideal:
    R = RingContext(4)
    return Ideal(R, [R.parse("x0^2 + x1*x2 + x3^2"), R.parse("x0*x3 - x1^2 + x2^2")])


def _projected_curve(deg: int, centers: int, seed: int) -> tuple[Ideal, int]:
    """Isomorphic projection of RNC_deg from random outer points; reseeds on degenerate centers."""
    I = rational_normal_curve(deg)
    for attempt in range(20):
        rng = np.random.default_rng(seed + attempt)
        pts = random_points(I.ring.nvars, centers, rng)
        try:
            return project_from_points(I, pts, seed=seed + attempt, isomorphic=True), attempt
        except ProjectionError:
            continue
    raise RuntimeError("no nondegenerate projection center found")


# --------------------------------------------------------------------------- criteria


def criterion_1():
    clock = Clock(300)
    f = read_ideal(DATA / "toric_threefold.ideal")
    rep = analyze(f.ideal, seed=0)
    d = rep.data
    gin_ok = sorted(d["gin"]["gin"]) == sorted(GIN_TORIC)
    checks = {
        "gin": gin_ok,
        "nd_index=3": d["nd_index"] == 3,
        "codim=2": d["hilbert"]["e"] == 2,
        "pd(R/Gin)=3": d["gin_projective_dimension"] == 3,
        "no problems": not rep.problems,
    }
    ok = all(checks.values()) and clock.ok()
    bad = [k for k, v in checks.items() if not v]
    return ok, f"{clock.note()}" + (f" failed: {bad}" if bad else "")


def criterion_2():
    clock = Clock(60)
    C, reseeds = _projected_curve(6, 3, seed=0)
    B = betti_table(C, seed=0)
    S = general_hyperplane_section(C, 1, seed=0)
    BS = betti_table(S, seed=0)
    ok_c = B.entries == CURVE_TABLE
    ok_s = BS.entries == SECTION_TABLE
    ok = ok_c and ok_s and clock.ok()
    return ok, f"curve {ok_c}, section {ok_s}, reseeds {reseeds}, {clock.note()}"


def criterion_3_closed_form():
    clock = Clock(1)
    bad = []
    for e in range(1, 7):
        for ell in range(1, 5):
            B = ek_betti(power_ideal(e, ell))
            for i in range(1, e + 3):
                want = comb(i + ell - 1, ell) * comb(e + ell, i + ell) if i <= e else 0
                if B.entries.get((i, ell), 0) != want or power_ideal_betti(e, ell, i) != want:
                    bad.append((e, ell, i))
    ok = not bad and clock.ok()
    return ok, f"closed form on 24 pairs {'ok' if not bad else bad[:3]}, {clock.note()}"


def criterion_3_row_clause():
    """The stated (e, ell) = (6, 2) row must read (20, 45, 36, 10, ...)."""
    B = ek_betti(power_ideal(6, 2))
    row = [B.entries.get((i, 2), 0) for i in range(1, 7)]
    ok = row[:4] == [20, 45, 36, 10]
    return ok, f"(6,2) row is {tuple(row)}"


def criterion_3_printed_table():
    """The printed 3-linear table (20, 45, 36, 10) is the e = 4, ell = 2 row, and the catalecticant realizes it."""
    B = ek_betti(power_ideal(4, 2))
    row = [B.entries.get((i, 2), 0) for i in range(1, 5)]
    Y = generic_catalecticant_minors(3, (5, 5))
    BY = betti_table(Y, seed=0)
    ok = row == [20, 45, 36, 10] and BY.entries == {(0, 0): 1, (1, 2): 20, (2, 2): 45, (3, 2): 36, (4, 2): 10}
    return ok, f"(4,2) row {tuple(row)}, catalecticant table {'matches' if ok else BY.entries}"


def criterion_4():
    clock = Clock(1)
    bad = [(i, e, ell) for e in range(1, 9) for ell in range(1, 7) for i in range(1, e + 1)
           if binomial_identity(i, e, ell)[0] != binomial_identity(i, e, ell)[1]]
    ok = not bad and clock.ok()
    return ok, f"{'all 216 cases' if not bad else bad[:3]}, {clock.note()}"


def criterion_5():
    clock = Clock(1)
    T = from_betti(read_table(DATA / "bs_table.txt"))
    parts = decompose(T)
    got = {s.degrees: s.coefficient for s in parts}
    want = {(0, 4, 5, 6): Fraction(4, 5), (0, 4, 5, 6, 8): Fraction(1, 5)}
    ok = got == want and recompose(parts) == T and clock.ok()
    return ok, f"{ {k: str(v) for k, v in got.items()} }, {clock.note()}"


def criterion_6():
    clock = Clock(1)
    f = read_ideal(DATA / "borel_curve_t5.ideal")
    M = MonomialIdeal.from_polynomials(f.ideal.ring, f.ideal.gens)
    sec = borel_point_section(M, 2)
    want = MonomialIdeal.parse(sec.ring, ["x0^2", "x0*x1^2", "x1^5"])
    c2 = nd_check(M, 2)
    c1 = nd_check(M, 1, gin=c2.gin)
    deg = hilbert_data(M).degree
    checks = {
        "section": sec.same_as(want),
        "ND(2) refuted": c2.verdict == "refuted",
        "ND(1) certified": c1.verdict == "certified",
        "degree 7": deg == 7,
    }
    ok = all(checks.values()) and clock.ok()
    return ok, f"section {sec}, degree {deg}, {clock.note()}"


def criterion_7():
    clock = Clock(120)
    notes = []
    ok = True
    for e, ell in DISTRACTION_CASES:
        D = _distraction_object(e, ell)
        g = generic_initial_ideal(D, seed=0)
        H = hilbert_data(D)
        cert = nd_check(D, ell, gin=g, hilbert=H)
        B = betti_table(D, gin=g)
        A = thmA_verdict(B, e, ell, gin=g, degree=H.degree)
        J0 = power_ideal(e, ell, nvars=D.ring.nvars)
        checks = [
            cert.certified,
            A.equality_indices == list(range(1, e + 1)),
            is_acm_dlinear(B, e, ell + 1),
            g.gin.same_as(J0),
            H.degree == comb(e + ell, ell),
            A.consistent,
        ]
        ok &= all(checks)
        notes.append(f"({e},{ell}) {'ok' if all(checks) else checks}")
    ok &= clock.ok()
    return ok, ", ".join(notes) + f", {clock.note()}"


def criterion_8():
    clock = Clock(120)
    notes = []
    ok = True
    for e, ell in DISTRACTION_CASES:
        R = rigidity_check(_distraction_object(e, ell), ell + 1)
        good = R.conclusion_asserted and R.ok and R.acm_linear and R.degree == comb(ell + e, e)
        ok &= good
        notes.append(f"({e},{ell}) {'ok' if good else R.as_dict()}")
    f = read_ideal(DATA / "borel_curve_t5.ideal")
    for name, I in (("CI(2,2)", _ci22()), ("t=5 curve", f.ideal)):
        for d in (2, 3):
            R = rigidity_check(I, d)
            good = bool(R.failed) and not R.conclusion_asserted and R.acm_linear is None
            ok &= good
            notes.append(f"{name} d={d} fails {R.failed}")
    ok &= clock.ok()
    return ok, "; ".join(notes) + f"; {clock.note()}"


# criterion 9 parts share one 10 minute budget
_BUDGET = {"spent": 0.0}


def _random_ideal(rng: np.random.Generator, p: int) -> Ideal:
    n = int(rng.integers(2, 5))
    R = RingContext(n, p)
    gens = []
    for _ in range(int(rng.integers(1, 4))):
        d = int(rng.integers(1, 4))
        monos = monomials_of_degree(n, d)
        k = int(rng.integers(1, min(4, len(monos)) + 1))
        pick = rng.choice(len(monos), size=k, replace=False)
        gens.append(Polynomial(R, {monos[j]: int(rng.integers(1, p)) for j in pick}))
    return Ideal(R, gens)


def _random_borel(rng: np.random.Generator) -> MonomialIdeal:
    n = int(rng.integers(2, 6))
    R = RingContext(n)
    seeds = []
    for _ in range(int(rng.integers(1, 4))):
        d = int(rng.integers(1, 6))
        monos = monomials_of_degree(n, d)
        seeds.append(monos[int(rng.integers(len(monos)))])
    M = borel_closure(R, seeds)
    # keep generators of degree <= 5
    return MonomialIdeal.from_monomials(R, [m for m in M.min_gens if sum(m) <= 5])


def criterion_9_hf():
    clock = Clock(600)
    rng = np.random.default_rng(9)
    bad = 0
    for _ in range(200):
        I = _random_ideal(rng, 101)
        H = hilbert_data(I)
        G = groebner_of(I)
        Hin = hilbert_data(G.initial_ideal())
        g = random_invertible_matrix(I.ring.nvars, I.ring.prime, rng)
        Hg = hilbert_data(I.transform(g))
        top = max(f.degree for f in I.gens) + 2
        for d in range(top + 1):
            v = H.hilbert_function(d)
            if not (v == Hin.hilbert_function(d) == Hg.hilbert_function(d) == hilbert_function_linear_algebra(I, d)):
                bad += 1
                break
    _BUDGET["spent"] += clock.elapsed
    return bad == 0, f"(i) 200 ideals, {bad} mismatches, {clock.note()}"


def criterion_9_ek():
    clock = Clock(600)
    rng = np.random.default_rng(10)
    bad = 0
    for _ in range(50):
        M = _random_borel(rng)
        E = ek_betti(M)
        K = koszul_betti(M, max_i=M.nvars, max_j=max(M.max_degree() - 1, 0))
        bad += E.entries != K.entries
    _BUDGET["spent"] += clock.elapsed
    return bad == 0, f"(ii) 50 Borel ideals, {bad} mismatches, {clock.note()}"


def criterion_9_cancellation():
    clock = Clock(600)
    rng = np.random.default_rng(11)
    bad = 0
    for _ in range(25):
        I = _random_ideal(rng, 32003)
        g = generic_initial_ideal(I, seed=int(rng.integers(1 << 30)))
        B = betti_table(I, gin=g)
        c = cancellation_decomposition(B, ek_betti(g.gin))
        bad += c is None
    _BUDGET["spent"] += clock.elapsed
    return bad == 0, f"(iii) 25 ideals, {bad} without cancellation, {clock.note()}"


def criterion_9_multisecant():
    clock = Clock(600)
    notes = []
    ok = True
    # (degree of the curve, plane dimension); RNC_deg satisfies N_{2,p} for every p < deg
    for deg, pdim in ((3, 1), (4, 1), (4, 2), (5, 3)):
        X = rnc_variety(deg)
        B = betti_table(X.ideal)
        assert property_ndp(B, 2, pdim).holds
        st = multisecant_length_sampler(X.ideal, pdim, 2, samples=64, seed=deg * 10 + pdim, variety=X)
        ok &= st.within_bound and len(st.lengths) == 64
        notes.append(f"RNC{deg} p={pdim}: max {st.max_length} <= {st.bound}")
    _BUDGET["spent"] += clock.elapsed
    return ok, "(iv) " + ", ".join(notes) + f", {clock.note()}"


def _corpus() -> list[tuple[str, Ideal]]:
    items = [(p.stem, read_ideal(p).ideal) for p in sorted(DATA.glob("*.ideal"))]
    items += [(f"rnc{d}", rational_normal_curve(d)) for d in (3, 4, 5)]
    items += [(f"J0 distraction {e},{ell}", _distraction_object(e, ell)) for e, ell in DISTRACTION_CASES]
    items.append(("projected sextic", _projected_curve(6, 3, seed=0)[0]))
    items.append(("catalecticant 3x6", generic_catalecticant_minors(3, (5, 5))))
    items.append(("CI(2,2)", _ci22()))
    return items


def criterion_9_hvector():
    clock = Clock(600)
    notes = []
    ok = True
    for name, I in _corpus():
        H = hilbert_data(I)
        g = generic_initial_ideal(I, seed=0)
        idx = nd_index(I, cap=max(g.gin.max_degree(), 1), gin=g, hilbert=H)
        if idx < 1:
            continue
        r = h_nonnegativity_check(I, idx + 1, data=H)
        ok &= r.ok
        notes.append(f"{name}: ND({idx}) {'ok' if r.ok else r.violations}")
    _BUDGET["spent"] += clock.elapsed
    return ok, f"(v) {len(notes)} certified members, " + ", ".join(notes) + f", {clock.note()}"


def criterion_10():
    clock = Clock(30)
    notes = []
    ok = True
    for deg in (3, 5):
        X = rational_normal_curve(deg)
        rng = np.random.default_rng(100 + deg)
        # move a random outer point to (1, 0, ..., 0); projecting from it eliminates x0
        J = recenter(X, random_points(X.ring.nvars, 1, rng), seed=deg)
        rep = secant_locus_check(J, 2)
        F = partial_elimination_ideals(J, 1)
        image_deg = hilbert_data(F[0]).degree
        good = not rep.skipped and rep.linear and image_deg == deg
        ok &= good
        notes.append(f"RNC{deg}: K_1 generator degrees {rep.degrees}, image degree {image_deg}")
    ok &= clock.ok()
    return ok, ", ".join(notes) + f", {clock.note()}"


# --------------------------------------------------------------------------- pytest wrappers


def _run(name: str, fn):
    from conftest import record

    ok, detail = fn()
    record(name, ok, detail)
    return ok, detail


def test_criterion_1_gin_oracle():
    ok, detail = _run("criterion 1", criterion_1)
    assert ok, detail


def test_criterion_2_betti_oracle():
    ok, detail = _run("criterion 2", criterion_2)
    assert ok, detail


def test_criterion_3_closed_form():
    ok, detail = _run("criterion 3", criterion_3_closed_form)
    assert ok, detail


@pytest.mark.xfail(strict=True, reason="closed form gives (56, 210, 336, 280, 120, 21) at e=6; the printed table is the e=4 row")
def test_criterion_3_stated_row():
    ok, detail = _run("criterion 3", criterion_3_row_clause)
    assert ok, detail


def test_criterion_3_printed_table_is_e4():
    ok, detail = criterion_3_printed_table()
    assert ok, detail


def test_criterion_4_binomial_identity():
    ok, detail = _run("criterion 4", criterion_4)
    assert ok, detail


def test_criterion_5_boij_soderberg():
    ok, detail = _run("criterion 5", criterion_5)
    assert ok, detail


def test_criterion_6_nd_refutation():
    ok, detail = _run("criterion 6", criterion_6)
    assert ok, detail


def test_criterion_7_equality_loop():
    ok, detail = _run("criterion 7", criterion_7)
    assert ok, detail


def test_criterion_8_rigidity():
    ok, detail = _run("criterion 8", criterion_8)
    assert ok, detail


@pytest.mark.parametrize("part", [criterion_9_hf, criterion_9_ek, criterion_9_cancellation,
                                  criterion_9_multisecant, criterion_9_hvector],
                         ids=["hf", "ek", "cancellation", "multisecant", "hvector"])
def test_criterion_9_properties(part):
    ok, detail = _run("criterion 9", part)
    assert ok, detail


def test_criterion_9_total_runtime():
    spent = _BUDGET["spent"]
    from conftest import record

    record("criterion 9", spent < 600, f"total {spent:.1f}s (limit 600s)")
    assert spent < 600


def test_criterion_10_pei_linearity():
    ok, detail = _run("criterion 10", criterion_10)
    assert ok, detail


ALL = [
    ("criterion 1", [criterion_1]),
    ("criterion 2", [criterion_2]),
    ("criterion 3", [criterion_3_closed_form, criterion_3_row_clause]),
    ("criterion 4", [criterion_4]),
    ("criterion 5", [criterion_5]),
    ("criterion 6", [criterion_6]),
    ("criterion 7", [criterion_7]),
    ("criterion 8", [criterion_8]),
    ("criterion 9", [criterion_9_hf, criterion_9_ek, criterion_9_cancellation,
                     criterion_9_multisecant, criterion_9_hvector]),
    ("criterion 10", [criterion_10]),
]


def main() -> int:
    failed = 0
    for name, parts in ALL:
        results = [fn() for fn in parts]
        ok = all(r[0] for r in results)
        failed += not ok
        print(f"{name}: {'PASS' if ok else 'FAIL'}  " + "; ".join(d for _, d in results), flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
