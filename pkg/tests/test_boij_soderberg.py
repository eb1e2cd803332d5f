from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ndsyz.betti import betti_table
from ndsyz.boij_soderberg import (
    NotDecomposableError,
    Summand,
    chain_ok,
    decompose,
    from_betti,
    pure_table,
    recompose,
    to_rows,
)
from ndsyz.io import read_table
from ndsyz.monideal import ek_betti, power_ideal

from examples import DATA, projected_sextic, toric_threefold
from strategies import homogeneous_ideals


def _values(T):
    return [T[k] for k in sorted(T)]


def test_pure_tables():
    assert _values(pure_table((0, 1, 2))) == [1, 2, 1]
    assert _values(pure_table((0, 4, 5, 6))) == [1, 15, 24, 10]
    assert _values(pure_table((0, 4, 5, 6, 8))) == [1, 30, 64, 40, 5]
    with pytest.raises(ValueError):
        pure_table((0, 2, 2))


def test_printed_table():
    T = from_betti(read_table(DATA / "bs_table.txt"))
    parts = decompose(T)
    assert [(s.coefficient, s.degrees) for s in parts] == [
        (Fraction(1, 5), (0, 4, 5, 6, 8)),
        (Fraction(4, 5), (0, 4, 5, 6)),
    ]
    assert recompose(parts) == T and chain_ok(parts)


def test_pure_table_is_itself():
    T = pure_table((0, 2, 3, 5))
    assert decompose(T) == [Summand(Fraction(1), (0, 2, 3, 5))]


def test_linear_resolution_is_pure():
    parts = decompose(from_betti(ek_betti(power_ideal(3, 2))))
    assert len(parts) == 1 and parts[0].degrees == (0, 3, 4, 5)


def test_outside_the_cone():
    with pytest.raises(NotDecomposableError):
        decompose({(0, 0): Fraction(1), (1, 1): Fraction(1), (2, 2): Fraction(1)})


def test_rows_key_conversion():
    B = ek_betti(power_ideal(2, 1))
    assert to_rows(from_betti(B)) == {k: Fraction(v) for k, v in B.entries.items()}


@pytest.mark.parametrize("make", [toric_threefold, projected_sextic])
def test_actual_tables_decompose(make):
    T = from_betti(betti_table(make()))
    parts = decompose(T)
    assert recompose(parts) == T and chain_ok(parts)
    assert all(s.coefficient > 0 for s in parts)


@settings(max_examples=20)
@given(homogeneous_ideals(prime=32003))
def test_cone_membership(I):
    B = betti_table(I)
    if not B.entries or B.entries == {(0, 0): 1}:
        return
    T = from_betti(B)
    parts = decompose(T)
    assert recompose(parts) == T and chain_ok(parts)


@settings(max_examples=40)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.lists(st.integers(1, 7), min_size=1, max_size=3))
def test_recomposition_of_chains(gaps, weights):
    # build a chain of degree sequences by bumping the last entry
    base = [0]
    for g in gaps:
        base.append(base[-1] + g)
    seqs = []
    for w in range(len(weights)):
        seq = list(base)
        seq[-1] += w
        seqs.append(tuple(seq))
    T = {}
    for seq, w in zip(seqs, weights):
        for k, v in pure_table(seq).items():
            T[k] = T.get(k, Fraction(0)) + w * v
    parts = decompose(T)
    assert recompose(parts) == {k: v for k, v in T.items() if v}
    assert chain_ok(parts)
