import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl21inv.ring import (ColorForm, ExponentOverflow, GaussLaurent, LaurentPoly,
                          NotDivisible, PrefactorMismatch, QuadExponent, Scalar,
                          exact_div, qn, qpow, specialize_colors_equal,
                          specialize_q_to_i)
from sl21inv.ring.packing import EXP_LIMIT, decode, encode

from strategies import color_forms, generic_forms, polys

q, q1, q2 = (LaurentPoly.var(i) for i in range(3))


@given(st.lists(st.integers(-EXP_LIMIT, EXP_LIMIT), max_size=4))
def test_packing_roundtrip(e):
    assert decode(encode(e), len(e)) == tuple(e)


@given(st.lists(st.integers(-999, 999), min_size=3, max_size=3),
       st.lists(st.integers(-999, 999), min_size=3, max_size=3))
def test_packing_is_additive(e, f):
    assert encode(e) + encode(f) == encode([x + y for x, y in zip(e, f)])


def test_packing_overflow():
    with pytest.raises(ExponentOverflow):
        encode([EXP_LIMIT + 1])
    with pytest.raises(ExponentOverflow):
        q ** (EXP_LIMIT + 1)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(polys(), polys())
def test_exact_div_recovers_factor(a, b):
    if b.is_zero:
        return
    assert exact_div(a * b, b) == a


def test_exact_div_rejects_non_multiple():
    with pytest.raises(NotDivisible):
        exact_div(q + 2, q - 1)
    with pytest.raises(ZeroDivisionError):
        exact_div(q, LaurentPoly.zero())


def test_exact_div_of_quantum_integers():
    a = ColorForm.var(1)
    assert exact_div(qn(2 * a), qn(a)) == qpow(a) + qpow(-a)
    assert exact_div(qn(3), qn(1)) == q ** 2 + 1 + q ** -2


@given(polys(), polys())
def test_q_to_i_is_a_ring_morphism(a, b):
    assert specialize_q_to_i(a * b) == specialize_q_to_i(a) * specialize_q_to_i(b)
    assert specialize_q_to_i(a + b) == specialize_q_to_i(a) + specialize_q_to_i(b)


@given(polys(), polys())
def test_equal_colors_is_a_ring_morphism(a, b):
    assert specialize_colors_equal(a * b) == specialize_colors_equal(a) * specialize_colors_equal(b)


@given(color_forms(), color_forms())
def test_qpow_is_multiplicative(c, d):
    assert qpow(c) * qpow(d) == qpow(c + d)
    assert qn(c) * (qpow(d) + qpow(-d)) == qn(c + d) + qn(c - d)


@given(color_forms())
def test_qn_shift_by_two_at_q_equal_i(c):
    # <a+2> = -<a> at q = i
    assert specialize_q_to_i(qn(c + 2)) == -specialize_q_to_i(qn(c))


@given(generic_forms())
def test_qn_pair_at_q_equal_i(c):
    # <a><a+1> = i <2a> at q = i
    lhs = specialize_q_to_i(qn(c) * qn(c + 1))
    rhs = GaussLaurent.i() * specialize_q_to_i(qn(2 * c))
    assert lhs == rhs


@given(color_forms())
def test_color_dual_is_an_involution(c):
    assert c.dual().dual() == c


def test_color_form_text():
    assert str(ColorForm.var(1, 1, 1)) == "a1+1"
    assert str(ColorForm(0)) == "0"
    assert not ColorForm(-1).is_typical and ColorForm.var(2).is_typical


def test_quad_exponent_product():
    a, b = ColorForm.var(1), ColorForm.var(2)
    quad, lin, const = QuadExponent.product(a + 1, b, 2)
    assert quad == QuadExponent((((1, 2), 2),)) and lin == 2 * b and const == 0
    assert str(QuadExponent((((1, 2), -2),))) == "-2*a1*a2"


def test_scalar_add_is_strict():
    a, b = ColorForm.var(1), ColorForm.var(2)
    x = Scalar.qexp(a, b)
    assert (x + x).poly == 2
    with pytest.raises(PrefactorMismatch):
        x + Scalar.one()
    assert (x * x.inverse()).prefactor.is_zero


@given(polys())
def test_text_roundtrip(p):
    assert LaurentPoly.parse(str(p)) == p


@given(polys())
def test_json_roundtrip(p):
    assert LaurentPoly.from_json(p.to_json()) == p
    assert LaurentPoly.from_json_obj(json.loads(json.dumps(p.to_json_obj()))) == p


def test_canonical_text():
    p = q * q1 ** 2 - q - q ** -1 + q ** -1 * q1 ** -2
    assert str(p) == "q^-1*q1^-2 - q^-1 - q + q*q1^2"
    assert str(LaurentPoly.zero()) == "0"


def test_gauss_text_and_json():
    g = GaussLaurent(q1, 2 * q1 ** -1) + GaussLaurent.i()
    assert GaussLaurent.from_json_obj(g.to_json_obj()) == g
    assert "i" in g.to_text()
