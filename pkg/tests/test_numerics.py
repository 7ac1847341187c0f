from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from katoval.numerics import (
    IncompatibleFieldError,
    InvalidInputError,
    QuadNumber,
    hj_expand,
    hj_value,
    quad_sign,
    squarefree_part,
)

from oracles import coprime_pairs

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
PHI = (1 + QuadNumber.sqrt(5)) / 2


def q5(a, b):
    return QuadNumber(a, b, 5)


def test_square_factors_move_into_the_coefficient():
    assert QuadNumber(0, 1, 20) == QuadNumber(0, 2, 5)
    assert QuadNumber(1, 3, 9) == QuadNumber(10)
    assert squarefree_part(72) == (6, 2)


def test_golden_ratio_identities():
    assert PHI * PHI == PHI + 1
    assert PHI.norm() == -1
    assert str(PHI) == "1/2 + 1/2*sqrt(5)"
    assert 1 / PHI == PHI - 1


def test_mixing_fields_is_an_error():
    with pytest.raises(IncompatibleFieldError):
        QuadNumber.sqrt(2) + QuadNumber.sqrt(3)


def test_exact_comparison_near_the_boundary():
    # 1 + sqrt(5) > 3  iff  5 > 4
    assert 1 + QuadNumber.sqrt(5) > 3
    assert quad_sign(QuadNumber(3, -1, 5) * QuadNumber(3, -1, 5) - QuadNumber(14, -6, 5)) == 0
    assert QuadNumber(7, -3, 5) > 0  # 7 > 3*sqrt(5) = 6.708...
    assert QuadNumber(6, -3, 5) < 0


def test_floats_are_not_silently_compared():
    with pytest.raises(TypeError):
        _ = PHI < 1.6


@given(rationals, rationals, rationals, rationals)
def test_field_axioms(a, b, c, d):
    x, y = q5(a, b), q5(c, d)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    if y:
        assert (x / y) * y == x


@given(rationals, rationals)
def test_sign_matches_float_when_far_from_zero(a, b):
    x = q5(a, b)
    f = float(x)
    if abs(f) > 1e-9:
        assert quad_sign(x) == (1 if f > 0 else -1)


@given(rationals, rationals)
def test_norm_is_product_with_conjugate(a, b):
    x = q5(a, b)
    assert x * x.conjugate() == x.norm()


def test_hj_known_chains():
    assert hj_expand(7, 3) == [3, 2, 2]
    assert hj_expand(22, 9) == [3, 2, 5]
    assert hj_value([3, 2, 10]) == (47, 19)
    for k in range(2, 30):
        assert hj_expand(5 * k - 3, 2 * k - 1) == [3, 2, k]


def test_hj_round_trip_up_to_200():
    for p, q in coprime_pairs(200):
        chain = hj_expand(p, q)
        assert all(a >= 2 for a in chain)
        assert hj_value(chain) == (p, q)


@pytest.mark.parametrize("p,q", [(6, 4), (5, 5), (3, 0), (3, 7)])
def test_hj_rejects_bad_pairs(p, q):
    with pytest.raises(InvalidInputError):
        hj_expand(p, q)


def test_hj_value_rejects_short_entries():
    with pytest.raises(InvalidInputError):
        hj_value([3, 1, 2])


def test_to_fraction():
    assert QuadNumber(Fraction(3, 2)).to_fraction() == Fraction(3, 2)
    with pytest.raises(InvalidInputError):
        PHI.to_fraction()
