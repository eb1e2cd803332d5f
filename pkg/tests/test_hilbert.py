from math import comb
from pathlib import Path

import numpy as np
from hypothesis import given, settings

from ndsyz.constructions import rational_normal_curve
from ndsyz.groebner import groebner_of
from ndsyz.hilbert import (
    dimension_degree,
    divide_one_minus_t,
    h_nonnegativity_check,
    hilbert_data,
    hilbert_function,
    hilbert_function_linear_algebra,
    hilbert_series_numerator,
    k_polynomial,
)
from ndsyz.io import read_ideal
from ndsyz.monideal import MonomialIdeal, distraction, power_ideal
from ndsyz.polyring import Ideal, RingContext, random_invertible_matrix

from strategies import homogeneous_ideals

DATA = Path(__file__).parent.parent / "data"


def test_zero_ideal():
    R = RingContext(4)
    assert hilbert_function(Ideal(R, []), 2) == 10
    H = hilbert_data(Ideal(R, []))
    assert H.degree == 1 and H.codim == 0


def test_twisted_cubic():
    I = rational_normal_curve(3)
    assert [hilbert_function(I, d) for d in (1, 2, 3)] == [4, 7, 10]
    assert [hilbert_function_linear_algebra(I, d) for d in (1, 2, 3)] == [4, 7, 10]
    G = MonomialIdeal.parse(I.ring, ["x0^2", "x0*x1", "x1^2"])
    assert list(hilbert_data(G).h_vector) == [1, 2]
    assert dimension_degree(I) == (1, 2, 3)


def test_point_section_of_t_curve():
    for t in (3, 5, 7):
        M = MonomialIdeal.parse(RingContext(3), ["x0^2", "x0*x1^2", f"x1^{t}"])
        H = hilbert_data(M)
        assert H.krull_dim == 1
        assert hilbert_function(M, 3 * t) == t + 2


def test_power_ideal_h_vector():
    for e in range(1, 5):
        for ell in range(1, 4):
            H = hilbert_data(power_ideal(e, ell, nvars=e + 2))
            assert list(H.h_vector) == [comb(e - 1 + j, j) for j in range(ell + 1)]
            assert H.degree == comb(e + ell, ell) and H.codim == e


def test_principal_monomial():
    M = MonomialIdeal.parse(RingContext(3), ["x0"])
    h, krull = hilbert_series_numerator(M)
    assert h == [1] and krull == 2


def test_toric_threefold():
    I = read_ideal(DATA / "toric_threefold.ideal").ideal
    H = hilbert_data(I)
    assert (H.proj_dim, H.codim) == (3, 2)
    assert H.degree == sum(H.h_vector)
    r = h_nonnegativity_check(I, 4, data=H)
    assert r.ok
    assert r.h_vector[:4] == [1, 2, 3, 4]
    assert r.h_vector[4] == 5 - I.dim_in_degree(4) == 4


def test_h_check_on_distraction_and_hypersurface():
    D = distraction(power_ideal(3, 2, nvars=5), seed=2)
    r = h_nonnegativity_check(D, 2)
    assert r.ok and r.h_vector == [1, 3, 6]
    R = RingContext(4)
    f = Ideal(R, [R.parse("x0^3 + x1^3 + x2^3 + x3^3")])
    r = h_nonnegativity_check(f, 2)
    assert r.ok and r.h_vector == [1, 1, 1]


def test_k_polynomial_and_division():
    M = MonomialIdeal.parse(RingContext(2), ["x0^2", "x0*x1"])
    # 1 - 2t^2 + t^3
    assert k_polynomial(M) == [1, 0, -2, 1]
    assert divide_one_minus_t([1, 0, -2, 1]) == [1, 1, -1]


@settings(max_examples=30)
@given(homogeneous_ideals())
def test_invariance_and_sum(I):
    H = hilbert_data(I)
    assert H.degree == sum(H.h_vector)
    rng = np.random.default_rng(0)
    g = random_invertible_matrix(I.ring.nvars, I.ring.prime, rng)
    Hg = hilbert_data(I.transform(g))
    Hin = hilbert_data(groebner_of(I).initial_ideal())
    for d in range(6):
        v = H.hilbert_function(d)
        assert v == Hg.hilbert_function(d) == Hin.hilbert_function(d) == hilbert_function_linear_algebra(I, d)
