import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl21inv.diagram import validate
from sl21inv.ring import ColorForm
from sl21inv.skein import (AtypicalEdge, CheckedRelation, Inadmissible,
                           LinearRelation, Mismatch, build_IH, catalog,
                           hopf_chain, internal_color, is_critical, report,
                           theta_value, verify_relation)

a, b, c, d = (ColorForm.var(i) for i in range(1, 5))

KNOWN_FAILING = {"AIH4"}


@pytest.fixture(scope="module")
def outcomes():
    return {o.relation: o for o in report()}


def test_catalog_names_unique():
    names = [r.name for r in catalog()]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("name", [r.name for r in catalog() if r.name not in KNOWN_FAILING])
def test_relation_holds(outcomes, name):
    o = outcomes[name]
    assert o.ok, o.witness


def test_printed_aih4_fails_and_negated_form_holds(outcomes):
    assert outcomes["AIH4"].status == "fail"
    assert outcomes["AIH4"].witness.startswith("closure #0")
    assert outcomes["AIH4:negated-rhs"].ok


def test_ih3_uses_printed_coefficients(outcomes):
    assert outcomes["IH3"].ok and outcomes["AIH3"].ok


def test_build_I_internal_color():
    m = build_IH("I", a, b, a, b, (1, -1))
    assert m.slices[0].out.color == a + b + 1
    assert build_IH("I", a, b, a, b, (-1, 1)).slices[0].out.color == a + b


def test_build_H_slicings_agree_on_color():
    for variant in (0, 1):
        m = build_IH("H", a, b, c, a + b - c + 1, (1, 1), variant)
        assert validate(m)
    assert internal_color("H", a, b, c, a + b - c + 1, (1, 1)) == c - a - 1


def test_inconsistent_constraints():
    with pytest.raises(Inadmissible):
        build_IH("I", a, b, c, d, (1, 1))
    with pytest.raises(Inadmissible):
        build_IH("H", a, b, c, c, (1, -1))
    with pytest.raises(ValueError):
        internal_color("X", a, b, c, d, (1, 1))


def test_atypical_internal_edge():
    # I with e = a + b + 1 = 0
    with pytest.raises(AtypicalEdge):
        build_IH("I", a, -1 - a, c, -c, (1, 1))


def test_critical_edges():
    assert is_critical(a, b, a, b)
    assert is_critical(a, b, c, b)
    assert not is_critical(a, b, c, d)


@given(st.integers(-3, 3), st.integers(-3, 3), st.sampled_from([1, -1]), st.sampled_from([0, 1]))
def test_theta_is_one_for_shifted_colors(i, j, sign, variant):
    x, div = theta_value(a + i, b + j, sign, variant)
    assert x.prefactor.is_zero and x.poly == div


def test_theta_rejects_atypical():
    with pytest.raises(AtypicalEdge):
        theta_value(a, -a, 1)
    with pytest.raises(Inadmissible):
        theta_value(a, b, 0)


def test_hopf_chain_steps():
    steps = hopf_chain()
    assert len(steps) == 5
    assert all(ok for _, ok, _ in steps), steps


def test_verify_relation_reports_mismatch_and_errors():
    def boom():
        raise Mismatch("x", "witness")
    assert verify_relation(CheckedRelation("x", boom)).status == "fail"

    def bad():
        build_IH("I", a, b, c, d, (1, 1))
    o = verify_relation(CheckedRelation("y", bad))
    assert o.status == "error" and "Inadmissible" in o.witness


def test_open_mismatch_witness():
    from sl21inv.ring import Scalar
    from sl21inv.skein import _identity, _kink, _t
    twice = Scalar.qexp(a, a + 1, -2) * 2
    r = LinearRelation("bad-kink", [_t(1, _kink(a))], [_t(twice, _identity(a))])
    o = verify_relation(r)
    assert o.status == "fail" and "entry" in o.witness
