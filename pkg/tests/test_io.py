import pytest
from hypothesis import given, settings

from ndsyz.groebner import ideals_equal
from ndsyz.io import (
    InhomogeneousGeneratorError,
    emit_ideal,
    parse_ideal_text,
    read_ideal,
    read_table,
)
from ndsyz.polyring import PolynomialSyntaxError

from examples import DATA
from strategies import homogeneous_ideals


def test_parse_basic():
    f = parse_ideal_text("# conic\nnvars = 3\nx0*x2-x1^2,\n")
    (g,) = f.ideal.gens
    assert g == f.ideal.ring.parse("x0*x2 - x1^2")
    assert f.ideal.ring.nvars == 3


def test_negative_coefficient_and_inferred_nvars():
    f = parse_ideal_text("-x0\nx2^2\n")
    assert f.ideal.ring.nvars == 3
    assert f.ideal.gens[0].terms == {(1, 0, 0): 32002}


def test_prime_header():
    f = parse_ideal_text("prime = 101\n202*x0 + x1\n")
    assert f.ideal.gens[0] == f.ideal.ring.parse("x1")


def test_rejections():
    with pytest.raises(InhomogeneousGeneratorError, match=r"\[0, 1\]"):
        parse_ideal_text("x0 + 1\n")
    with pytest.raises(PolynomialSyntaxError) as exc:
        parse_ideal_text("x0\nx0 * * x1\n")
    assert exc.value.line == 2


def test_expectations_and_files():
    f = read_ideal(DATA / "toric_threefold.ideal")
    assert f.name == "toric_threefold"
    assert f.expect["nd_index"] == "3"
    assert len(f.ideal.gens) == 7
    B = read_table(DATA / "bs_table.txt")
    assert B.entries[(3, 3)] == 16 and B.entries[(4, 4)] == 1


@settings(max_examples=25)
@given(homogeneous_ideals(prime=32003))
def test_emit_parse_round_trip(I):
    again = parse_ideal_text(emit_ideal(I, name="x")).ideal
    assert again.ring.nvars == I.ring.nvars
    assert ideals_equal(again.gens, I.gens)
