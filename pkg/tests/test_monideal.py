from math import comb
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from ndsyz.betti import koszul_betti
from ndsyz.hilbert import hilbert_data
from ndsyz.monideal import (
    MonomialIdeal,
    NotBorelFixedError,
    binomial_identity,
    borel_closure,
    borel_point_section,
    distraction,
    ek_betti,
    is_borel_fixed,
    minimal_generators,
    power_ideal,
    power_ideal_betti,
)
from ndsyz.polyring import RingContext

from strategies import borel_ideals

GIN_TORIC = ["x0^4", "x0^3*x1^2", "x0^2*x1^3", "x0*x1^5", "x1^6",
             "x0*x1^4*x2^2", "x1^5*x2^2", "x0^3*x1*x2^4", "x0^2*x1^2*x2^5"]
R6 = RingContext(6)
R4 = RingContext(4)


def ex41(t: int) -> MonomialIdeal:
    return MonomialIdeal.parse(R4, ["x0^3", "x0^2*x1", "x0*x1^2", f"x1^{t}", "x0^2*x2"])


def test_minimal_generators():
    R = RingContext(3)
    assert minimal_generators(R, [(1, 0, 0), (2, 0, 0)]).min_gens == ((1, 0, 0),)
    M = minimal_generators(R, [(1, 1, 0), (0, 1, 1)])
    assert len(M) == 2
    assert len(MonomialIdeal.parse(R6, GIN_TORIC)) == 9


def test_generators_sorted_by_degree():
    M = MonomialIdeal.parse(R6, list(reversed(GIN_TORIC)))
    assert M.generator_strings() == GIN_TORIC


def test_borel_examples():
    R = RingContext(3)
    assert is_borel_fixed(MonomialIdeal.parse(R, ["x0^2", "x0*x1", "x1^2"]))
    assert not is_borel_fixed(MonomialIdeal.parse(R, ["x1^2"]))
    assert is_borel_fixed(MonomialIdeal.parse(R6, GIN_TORIC))
    assert is_borel_fixed(ex41(5))


def test_borel_closure():
    R = RingContext(3)
    M = borel_closure(R, [(0, 1, 0)])
    assert M.same_as(MonomialIdeal.parse(R, ["x0", "x1"]))


def test_ek_examples():
    R = RingContext(3)
    B = ek_betti(MonomialIdeal.parse(R, ["x0^4"]))
    assert B.entries == {(0, 0): 1, (1, 3): 1}
    B = ek_betti(power_ideal(3, 1))
    assert B.entries == {(0, 0): 1, (1, 1): 6, (2, 1): 8, (3, 1): 3}
    assert ek_betti(MonomialIdeal.parse(R6, GIN_TORIC)).projective_dimension() == 3
    with pytest.raises(NotBorelFixedError):
        ek_betti(MonomialIdeal.parse(R, ["x1^2"]))


def test_power_ideal():
    J = power_ideal(3, 1)
    assert len(J) == 6 and J.nvars == 3
    assert power_ideal(1, 4).min_gens == ((5,),)
    assert [power_ideal_betti(3, 1, i) for i in range(1, 5)] == [6, 8, 3, 0]
    assert power_ideal(2, 2, nvars=5).support() == 2


def test_power_ideal_e4_row_is_the_secant_table():
    assert [power_ideal_betti(4, 2, i) for i in range(1, 5)] == [20, 45, 36, 10]


@pytest.mark.parametrize("e", range(1, 7))
@pytest.mark.parametrize("ell", range(1, 5))
def test_ek_matches_closed_form(e, ell):
    B = ek_betti(power_ideal(e, ell))
    for i in range(1, e + 2):
        want = comb(i + ell - 1, ell) * comb(e + ell, i + ell) if i <= e else 0
        assert B.entries.get((i, ell), 0) == want == power_ideal_betti(e, ell, i)


def test_binomial_identity_grid():
    for e in range(1, 9):
        for ell in range(1, 7):
            for i in range(1, e + 1):
                lhs, rhs = binomial_identity(i, e, ell)
                assert lhs == rhs


def test_borel_point_section():
    sec = borel_point_section(ex41(5), 2)
    assert sec.same_as(MonomialIdeal.parse(RingContext(3), ["x0^2", "x0*x1^2", "x1^5"]))
    J = power_ideal(2, 2, nvars=4)
    assert borel_point_section(J, 2).same_as(power_ideal(2, 2))
    R = RingContext(3)
    assert borel_point_section(MonomialIdeal.parse(R, ["x0"]), 1).same_as(MonomialIdeal.parse(R, ["x0"]))


def test_distraction_shape():
    R = RingContext(3)
    D = distraction(MonomialIdeal.parse(R, ["x0^2"]), seed=4)
    (f,) = D.gens
    assert f.degree == 2 and len(f) > 1
    D = distraction(ex41(5), seed=0)
    assert sorted(g.degree for g in D.gens) == [3, 3, 3, 3, 5]


@settings(max_examples=15)
@given(borel_ideals(max_vars=4, max_degree=4), st.integers(0, 1000))
def test_distraction_preserves_hilbert_function(M, seed):
    if M.is_unit():
        return
    D = distraction(M, seed=seed)
    H, HD = hilbert_data(M), hilbert_data(D)
    for d in range(M.max_degree() + 3):
        assert H.hilbert_function(d) == HD.hilbert_function(d)


@settings(max_examples=30)
@given(borel_ideals())
def test_ek_equals_koszul(M):
    if M.is_unit():
        return
    B = koszul_betti(M, max_i=M.nvars, max_j=max(M.max_degree() - 1, 0))
    assert ek_betti(M).entries == B.entries


def test_with_nvars_and_support():
    M = MonomialIdeal.parse(R6, GIN_TORIC)
    assert M.support() == 3
    assert M.with_nvars(3).same_as(M)
    with pytest.raises(ValueError):
        M.with_nvars(2)
