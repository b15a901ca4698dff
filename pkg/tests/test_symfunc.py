from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from starcsf.partition import Partition, partitions
from starcsf.symfunc import (
    SymFunc,
    evaluate_at_ones,
    from_json,
    multiply,
    parse_text,
    power_monomial_to_star,
    star_monomial_to_power,
    to_power,
    to_star,
)


def P(*parts):
    return Partition(parts)


def test_small_stars_in_power_basis():
    # an edge: k^2 - k colorings
    assert star_monomial_to_power(1) == parse_text("p(1)")
    assert star_monomial_to_power(2) == parse_text("p(1,1) - p(2)")
    assert star_monomial_to_power(3) == parse_text("p(1,1,1) - 2 p(2,1) + p(3)")


def test_power_monomials_in_star_basis():
    assert power_monomial_to_star(2) == parse_text("st(1,1) - st(2)")
    assert power_monomial_to_star(3) == parse_text("st(1,1,1) - 2 st(2,1) + st(3)")


def _sympy_to_star(f):
    """Independent change of basis: solve the full transition matrix."""
    ps = list(partitions(f.degree))
    idx = {lam: i for i, lam in enumerate(ps)}
    m = sympy.zeros(len(ps), len(ps))
    for j, lam in enumerate(ps):
        for mu, c in to_power(SymFunc.basis_element("star", lam)).items():
            m[idx[mu], j] = c
    rhs = sympy.Matrix([f.coefficient(lam) for lam in ps])
    sol = m.LUsolve(rhs)
    return SymFunc("star", f.degree, {lam: Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for lam, v in zip(ps, sol)})


@pytest.mark.parametrize("n", range(1, 8))
def test_to_star_matches_matrix_solve(n):
    for lam in partitions(n):
        p = SymFunc.basis_element("power", lam)
        got = to_star(p)
        assert got == _sympy_to_star(p)
        assert got.is_integral()


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trips_on_basis(n):
    for lam in partitions(n):
        s = SymFunc.basis_element("star", lam)
        assert to_star(to_power(s)) == s
        p = SymFunc.basis_element("power", lam)
        assert to_power(to_star(p)) == p


coeffs = st.integers(-50, 50)


@st.composite
def symfuncs(draw, basis="star"):
    n = draw(st.integers(1, 7))
    support = list(partitions(n))
    chosen = draw(st.lists(st.sampled_from(support), max_size=6))
    return SymFunc(basis, n, [(lam, draw(coeffs)) for lam in chosen])


@given(symfuncs())
def test_change_of_basis_round_trip(f):
    assert to_star(to_power(f)) == f


@given(symfuncs(), symfuncs())
def test_multiplication_commutes_with_change_of_basis(f, g):
    assert to_power(multiply(f, g)) == multiply(to_power(f), to_power(g))
    assert multiply(f, g) == multiply(g, f)


@given(symfuncs())
def test_text_and_json_round_trip(f):
    if not f.is_zero():
        assert parse_text(f.to_text()) == f
    assert from_json(f.to_json()) == f


def test_arithmetic_and_zero_handling():
    a = parse_text("st(2,1) - st(3)")
    b = parse_text("st(3) + 2 st(1,1,1)")
    assert (a + b) == parse_text("2 st(1,1,1) + st(2,1)")
    assert (a - a).is_zero()
    assert len(a - a) == 0
    assert (-a) == a.scale(-1)
    assert a.scale(Fraction(1, 2)).coefficient((2, 1)) == Fraction(1, 2)
    assert not a.scale(Fraction(1, 2)).is_integral()
    assert a.coefficient((1, 1, 1)) == 0
    with pytest.raises(ValueError):
        a + SymFunc.basis_element("power", (3,))
    with pytest.raises(ValueError):
        SymFunc("star", 3, {(2,): 1})


def test_text_format():
    f = SymFunc("star", 7, {(4, 2, 1): -1, (4, 3): 1, (6, 1): -2})
    assert f.to_text() == "-st(4,2,1) + st(4,3) - 2 st(6,1)"
    assert parse_text("−st(4,2,1) + st(4,3) − 2 st(6,1)") == f
    assert SymFunc.zero("star", 3).to_text() == "0"


def test_json_shape():
    f = parse_text("-2 st(2,1) + st(3)")
    assert f.to_json_obj() == {
        "basis": "star",
        "n": 3,
        "terms": [{"partition": [2, 1], "coeff": "-2"}, {"partition": [3], "coeff": "1"}],
    }


@pytest.mark.parametrize("bad", ["st(2,1) + p(3)", "st(2,1) +", "x(3)", ""])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_text(bad)


def test_evaluate_at_ones_counts_colorings():
    # St_3: center gets k colors, each leaf k-1
    for k in range(1, 6):
        assert evaluate_at_ones(SymFunc.basis_element("star", (3,)), k) == k * (k - 1) ** 2
    assert evaluate_at_ones(SymFunc.basis_element("star", (2, 1)), 3) == 6 * 3
