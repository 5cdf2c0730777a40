from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import poly_mul
from qrational.errors import DomainError, NotDivisibleError
from qrational.qpoly import (
    ONE,
    ZERO,
    LaurentPoly,
    exact_divide,
    format_poly,
    latex_poly,
    monomial,
    q_int,
    q_int_inv,
    unimodal,
)

small_ints = st.integers(min_value=-20, max_value=20)
laurent = st.builds(
    LaurentPoly,
    st.lists(small_ints, max_size=8),
    st.integers(min_value=-4, max_value=4),
)
polys = st.builds(LaurentPoly, st.lists(small_ints, max_size=8))
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=7).filter(lambda x: x != 0)


def as_dict(p: LaurentPoly) -> dict:
    return dict(p.terms())


def test_mul_example():
    assert LaurentPoly([1, 1]) * LaurentPoly([1, 1, 1]) == LaurentPoly([1, 2, 2, 1])


def test_numerator_of_five_halves_by_hand():
    assert LaurentPoly([1, 1, 1]) * LaurentPoly([1, 1]) - LaurentPoly([1]).shift(2) == LaurentPoly([1, 2, 1, 1])


def test_shift_below_zero():
    p = LaurentPoly([1, 1]).shift(-1)
    assert p.min_exp == -1
    assert p.coeffs == (1, 1)


def test_normalization_trims_both_ends():
    p = LaurentPoly([0, 0, 3, 0, 0])
    assert p.min_exp == 2 and p.coeffs == (3,)
    assert LaurentPoly([0, 0]) == ZERO
    assert ZERO.coeffs == () and ZERO.min_exp == 0


def test_comparison_with_integers():
    assert LaurentPoly([3]) == 3
    assert ZERO == 0
    assert ONE + 1 == 2


def test_evaluate_examples():
    p = LaurentPoly([1, 2, 1, 1])
    assert p(1) == 5
    assert p(-1) == -1
    assert LaurentPoly([1, 1])(-1) == 0
    assert ZERO(Fraction(7, 3)) == 0


def test_evaluate_negative_power_at_zero():
    with pytest.raises(DomainError):
        LaurentPoly([1], -1)(0)


def test_exact_divide_examples():
    assert exact_divide(LaurentPoly([1, 1, 1, 1]), LaurentPoly([1, 1])) == LaurentPoly([1, 0, 1])
    with pytest.raises(NotDivisibleError) as info:
        exact_divide(LaurentPoly([1, 2, 1, 1]), LaurentPoly([1, 1]))
    assert info.value.remainder == LaurentPoly([-1])
    p = LaurentPoly([4, 0, -2, 9])
    assert exact_divide(p, ONE) == p


def test_exact_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_divide(ONE, ZERO)


def test_unimodal_examples():
    assert unimodal(LaurentPoly([1, 2, 1, 1]))
    assert not unimodal(LaurentPoly([1, 1, 2, 1, 2]))
    assert unimodal(LaurentPoly([1]))


def test_q_integers():
    assert q_int(4) == LaurentPoly([1, 1, 1, 1])
    assert q_int(0) == ZERO
    assert q_int_inv(3) == LaurentPoly([1, 1, 1], -2)
    # [-a]_q = -q^(-a) [a]_q
    assert q_int(-2) == -(q_int(2).shift(-2))


def test_units_have_inverses():
    assert monomial(3, -1) ** -1 == monomial(-3, -1)
    with pytest.raises(DomainError):
        LaurentPoly([1, 1]) ** -1


def test_to_list_rejects_negative_powers():
    assert LaurentPoly([0, 1, 2]).to_list() == [0, 1, 2]
    with pytest.raises(DomainError):
        LaurentPoly([1], -1).to_list()


def test_formatting():
    assert format_poly(LaurentPoly([1, 2, 1, 1])) == "1 + 2q + q^2 + q^3"
    assert latex_poly(LaurentPoly([1, 2, 1, 1])) == "1+2q+q^{2}+q^{3}"
    assert format_poly(LaurentPoly([-1, 0, -2])) == "-1 - 2q^2"
    assert format_poly(LaurentPoly([1, 1], -1)) == "q^-1 + 1"
    assert format_poly(ZERO) == "0"


def test_json_uses_decimal_strings():
    big = LaurentPoly([10**30, -1], -2)
    data = big.to_json()
    assert data == {"min_exp": -2, "coeffs": [str(10**30), "-1"]}
    assert LaurentPoly.from_json(data) == big


def test_big_coefficients_multiply_exactly():
    # Large enough to force the big-integer path.
    a = LaurentPoly([3**80 + i for i in range(40)])
    b = LaurentPoly([(-2) ** 70 - i for i in range(30)])
    assert as_dict(a * b) == poly_mul(as_dict(a), as_dict(b))


def test_long_operands_multiply_exactly():
    # Long enough to take the vectorized path.
    a = LaurentPoly([(i * 7919) % 101 - 50 for i in range(300)], -5)
    b = LaurentPoly([(i * 104729) % 97 - 48 for i in range(250)], 3)
    assert as_dict(a * b) == poly_mul(as_dict(a), as_dict(b))


def test_times_qint_matches_product():
    p = LaurentPoly([5, -3, 0, 2], -1)
    for a in range(0, 7):
        assert p.times_qint(a) == p * q_int(a)


@given(laurent, laurent, laurent)
def test_ring_associativity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)


@given(laurent, laurent)
def test_ring_commutativity(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(laurent, laurent, laurent)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(laurent)
def test_additive_inverse_and_identity(a):
    assert a - a == ZERO
    assert a + ZERO == a
    assert a * ONE == a
    assert -(-a) == a


@given(laurent, laurent)
def test_mul_matches_dict_oracle(a, b):
    assert as_dict(a * b) == poly_mul(as_dict(a), as_dict(b))


@settings(max_examples=1000)
@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_mul_then_divide_round_trip(a, b):
    assert exact_divide(a * b, b) == a


@given(laurent, laurent, rationals)
def test_evaluate_is_a_ring_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(laurent, st.integers(min_value=-6, max_value=6))
def test_shift_is_multiplication_by_monomial(a, k):
    assert a.shift(k) == a * monomial(k)


@given(laurent, rationals)
def test_invert_variable(a, x):
    assert a.invert_variable()(x) == a(1 / x)
    assert a.invert_variable().invert_variable() == a


@given(laurent)
def test_json_round_trip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


@given(polys)
def test_reversed_is_mirror(p):
    if p.is_zero():
        return
    coeffs = p.to_list()[p.valuation:]
    assert p.reversed().to_list()[p.reversed().valuation:] == coeffs[::-1]
