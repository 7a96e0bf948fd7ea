from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gforest.ring import ONE, ZERO, BivarPoly, NonExactDivision, Q, Y


def P(terms):
    return BivarPoly(terms)


coeffs = st.one_of(
    st.integers(min_value=-9, max_value=9),
    st.fractions(min_value=-4, max_value=4, max_denominator=6),
)
polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 5)), coeffs, max_size=6
).map(BivarPoly)


def test_like_term_addition():
    yq = P({(1, 1): 1})
    assert yq + P({(1, 1): 2}) == P({(1, 1): 3})


def test_additive_identity():
    p = P({(2, 1): 3, (0, 0): -1})
    assert p + ZERO == p
    assert ZERO + p == p


def test_addition_of_table_row_halves():
    high = P({(0, 4): 1, (0, 3): 4})
    low = P({(0, 2): 10, (0, 1): 12, (0, 0): 6})
    assert (high + low).to_text() == "q^4+4q^3+10q^2+12q+6"


def test_product_of_binomials():
    assert (1 + Y) * (1 + Q) == P({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})


def test_multiplicative_identity():
    p = P({(3, 2): -5, (0, 1): Fraction(1, 2)})
    assert p * ONE == p


def test_square_of_yq():
    yq = Y * Q
    assert yq * yq == P({(2, 2): 1})


def test_eval_q_at_minus_one_collapses_row():
    row = P({(0, 4): 1, (0, 3): 4, (0, 2): 10, (0, 1): 12, (0, 0): 6})
    assert row.eval_q(-1) == ONE


def test_eval_q_at_one_groups_by_y_degree():
    p = P({(1, 2): 3, (1, 0): 4, (0, 5): 2})
    assert p.eval_q(1) == P({(1, 0): 7, (0, 0): 2})


def test_eval_q_at_zero_kills_positive_q_terms():
    assert P({(2, 1): 1}).eval_q(0).is_zero()
    assert P({(2, 0): 1, (0, 3): 5}).eval_q(0) == P({(2, 0): 1})


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        P({(-1, 0): 1})


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
@settings(max_examples=60)
def test_add_then_subtract_is_bit_identical(a, b):
    assert ((a + b) - b).term_map() == a.term_map()


@given(polys)
@settings(max_examples=40)
def test_no_zero_terms_stored(a):
    assert all(c for _, c in a.terms())
    assert (a - a).is_zero()


@given(polys, st.integers(0, 4))
@settings(max_examples=30)
def test_power_matches_repeated_product(a, e):
    expect = ONE
    for _ in range(e):
        expect = expect * a
    assert a**e == expect


@given(polys, polys)
@settings(max_examples=40)
def test_exact_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divide_exact(b) == a


def test_exact_division_failure():
    with pytest.raises(NonExactDivision):
        (1 + Y).divide_exact(1 + Q)


def test_divide_scalar():
    p = P({(0, 1): 3})
    assert p.divide_scalar(2) == P({(0, 1): Fraction(3, 2)})
    assert p.divide_scalar(3) == P({(0, 1): 1})


def test_whole_fractions_collapse_to_int():
    p = P({(0, 0): Fraction(6, 2)})
    assert p.term_map() == {(0, 0): 3}
    assert type(p.constant_coefficient()) is int


def test_canonical_term_order_is_decreasing_q_then_y():
    p = P({(0, 2): 1, (2, 2): 1, (1, 3): 1, (0, 0): 5})
    assert [m for m, _ in p.terms()] == [(1, 3), (2, 2), (0, 2), (0, 0)]


def test_text_rendering_corner_cases():
    assert ZERO.to_text() == "0"
    assert P({(0, 0): -7}).to_text() == "-7"
    assert P({(1, 1): -1, (0, 0): 1}).to_text() == "-yq+1"
    assert P({(2, 10): 1}).to_text() == "y^2q^10"
    assert P({(0, 1): Fraction(1, 2)}).to_text() == "1/2q"


def test_latex_rendering():
    row = P({(0, 12): 1, (0, 3): 4, (0, 0): 6})
    assert row.to_latex() == "q^{12}+4 q^3+6"


def test_json_terms():
    p = P({(1, 2): Fraction(-3, 2), (0, 0): 4})
    assert p.to_json_terms() == [
        {"dy": 1, "dq": 2, "num": -3, "den": 2},
        {"dy": 0, "dq": 0, "num": 4, "den": 1},
    ]
