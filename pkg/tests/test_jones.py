from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import nested_regular
from qrational.contfrac import Rational, expand_regular
from qrational.errors import DomainError
from qrational.jones import (
    SignedLaurent,
    from_signed_laurent,
    jones,
    jones_text,
    jones_via_closures,
    to_signed_laurent,
)
from qrational.qpoly import LaurentPoly
from qrational.qrat import qdeform
from qrational.verify import coprime_pairs

P = LaurentPoly
ROUTES = ("qdeform", "continuant", "regular", "closures")


def test_examples():
    assert jones(Rational(8, 3)).j == P([1, 1, 2, 1, 2, 1])
    assert jones(Rational(15, 4)).j == P([1, 1, 2, 3, 2, 3, 2, 1])
    assert jones(Rational(2, 1)).j == P([1, 0, 1])


def test_classical_normalizations():
    v = to_signed_laurent(jones(Rational(15, 4)), 16, -1)
    # -t^8 + t^7 - 2t^6 + 3t^5 - 2t^4 + 3t^3 - 2t^2 + t
    assert dict(v.coeffs.terms()) == {16: -1, 14: 1, 12: -2, 10: 3, 8: -2, 6: 3, 4: -2, 2: 1}
    assert str(v) == "-t^8 + t^7 - 2t^6 + 3t^5 - 2t^4 + 3t^3 - 2t^2 + t"
    v = to_signed_laurent(jones(Rational(8, 3)), 3, -1)
    assert str(v) == "-t^(3/2) + t^(1/2) - 2t^(-1/2) + t^(-3/2) - 2t^(-5/2) + t^(-7/2)"
    assert v.coefficient(-1) == -2


@given(
    st.lists(st.integers(min_value=-9, max_value=9), max_size=8),
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-12, max_value=12),
    st.sampled_from((1, -1)),
)
def test_signed_laurent_round_trip(coeffs, lo, p_halves, sign):
    j = P(coeffs, lo)
    assert from_signed_laurent(to_signed_laurent(j, p_halves, sign)) == j


def test_parity_mismatch_is_rejected():
    with pytest.raises(DomainError):
        from_signed_laurent(SignedLaurent(P([1]), 1, 1))
    with pytest.raises(DomainError):
        to_signed_laurent(P([1]), 0, 2)


def test_routes_agree():
    for x in coprime_pairs(20):
        values = {route: jones(x, route).j for route in ROUTES}
        values["weighted"] = jones_via_closures(x, method="weighted").j
        assert len(set(values.values())) == 1, (x, values)
        j = values["qdeform"]
        assert j(1) == x.r
        assert j.valuation >= 0 and all(c >= 0 for c in j.coeffs)


def test_evaluation_oracle():
    # J = R - qS with R/S = [(r+s)/s]_q, so J / S = (nested fraction) - q at any point.
    q0 = Fraction(2, 3)
    for x in coprime_pairs(24):
        y = Rational(x.r + x.s, x.s)
        s_val = qdeform(y).den(q0)
        assert jones(x, "continuant").j(q0) == (nested_regular(expand_regular(y).a, q0) - q0) * s_val


def test_domain_and_route_errors():
    with pytest.raises(DomainError):
        jones(Rational(1, 1))
    with pytest.raises(DomainError):
        jones(Rational(2, 3))
    with pytest.raises(ValueError):
        jones(Rational(5, 2), route="skein")
    with pytest.raises(ValueError):
        jones_via_closures(Rational(5, 2), method="bogus")


def test_json_and_text():
    jp = jones(Rational(8, 3))
    assert jp.to_json() == {"knot": "8/3", "j": {"min_exp": 0, "coeffs": ["1", "1", "2", "1", "2", "1"]}}
    assert jones_text(jp) == "1 + q + 2q^2 + q^3 + 2q^4 + q^5"
    assert jones_text(jp, latex=True) == "1+q+2q^{2}+q^{3}+2q^{4}+q^{5}"
