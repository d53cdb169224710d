import pytest

from sl21inv import qrep
from sl21inv.linalg import PARITY, Mat, PMat
from sl21inv.ring import ColorForm, LaurentPoly, QuadExponent, Scalar, qn, qpow

a, b, c = (ColorForm.var(i) for i in range(1, 4))
q = LaurentPoly.var(0)
I4 = Mat.identity(4)


def supercomm(X, Y, odd):
    return X @ Y + Y @ X if odd else X @ Y - Y @ X


@pytest.mark.parametrize("col", [a, a + 2, -a - 1, 2 * a - 3])
def test_cartan_relations(col):
    r = qrep.rep_matrices(col)
    # <1>[E1, F1] = q^h1 - q^-h1 and {E2hat, F2} = q^h2 - q^-h2
    assert supercomm(r.E1, r.F1, False).scale(qn(1)) == r.qh(1) - r.qh(1, -1)
    assert supercomm(r.E2hat, r.F2, True) == r.qh(2) - r.qh(2, -1)
    assert supercomm(r.E1, r.F2, False).is_zero
    assert supercomm(r.E2hat, r.F1, False).is_zero
    assert (r.E2hat @ r.E2hat).is_zero and (r.F2 @ r.F2).is_zero


def test_serre_relations():
    r = qrep.rep_matrices(a)
    E1, E2 = r.E1, r.E2hat
    serre = E1 @ E1 @ E2 - (E1 @ E2 @ E1).scale(q + q ** -1) + E2 @ E1 @ E1
    assert serre.is_zero
    F1, F2 = r.F1, r.F2
    assert (F1 @ F1 @ F2 - (F1 @ F2 @ F1).scale(q + q ** -1) + F2 @ F1 @ F1).is_zero


def test_atypical_colors_rejected():
    for bad in (0, -1, ColorForm(0)):
        with pytest.raises(qrep.AtypicalColor):
            qrep.rep_matrices(bad)


@pytest.mark.parametrize("gen", ["E1", "F1", "E2hat", "F2", "h1", "h2"])
def test_braiding_commutes_with_action(gen):
    c_ab = qrep.braiding(a, b)
    lhs = qrep.coproduct(gen, b, a) @ c_ab.mat
    rhs = c_ab.mat @ qrep.coproduct(gen, a, b)
    assert lhs == rhs


def test_r_matrix_inverse():
    R, Ri = qrep.r_matrix(a, b), qrep.r_matrix_inv(a, b)
    assert R @ Ri == PMat.plain(Mat.identity(16))
    assert qrep.braiding(a, b) @ qrep.braiding_inv(a, b) == PMat.plain(Mat.identity(16))


def test_rbar_fixes_highest_vector():
    Rb = qrep.build_rbar(a, b)
    assert Rb[0, 0] == 1 and all(Rb[i, 0].is_zero for i in range(1, 16))


@pytest.mark.parametrize("sign", [1, -1])
def test_gamma_is_a_module_map(sign):
    e = a + b if sign > 0 else a + b + 1
    g = qrep.gamma(sign, a, b)
    r = qrep.rep_matrices(e)
    for gen in ("E1", "F1", "E2hat", "F2", "h1", "h2"):
        act = r.qh(int(gen[1])) if gen.startswith("h") else getattr(r, gen)
        assert qrep.coproduct(gen, a, b) @ g == g @ act


def test_duality_maps_are_module_maps():
    for gen in ("E1", "F1", "E2hat", "F2"):
        assert (qrep.coproduct(gen, a, a.dual()) @ qrep.pbar_b(a)).is_zero
        assert (qrep.pbar_d(a) @ qrep.coproduct(gen, a.dual(), a)).is_zero


def test_zigzag_identities():
    bb, dd = qrep.pbar_b(a), qrep.pbar_d(a)
    left = (I4.kron(dd)) @ (bb.kron(I4))
    right = (dd.kron(I4)) @ (I4.kron(bb))
    assert left == I4
    assert right == I4


def test_circle_is_zero():
    assert (qrep.pbar_d(a) @ qrep.pbar_b(a.dual())).is_zero
    assert (qrep.pbar_d(a.dual()) @ qrep.pbar_b(a)).is_zero


def test_second_duality_pair():
    bp, dp = qrep.cocup_cocap(a)
    assert (dp.kron(I4)) @ (I4.kron(bp)) == I4


def test_twist():
    assert qrep.twist(a) == Scalar.qexp(a, a + 1, -2)
    t = qrep.twist(a) * qrep.twist_inv(a)
    assert t.prefactor.is_zero and t.poly == 1


def test_sprime_oracle_values():
    s = qrep.sprime_oracle(qrep.Weight(0, a), qrep.Weight(0, b))
    assert s.prefactor == QuadExponent((((1, 2), -4),))
    assert s.poly == qpow(-2 * a - 2 * b - 1) * qn(b) * qn(b + 1)


def test_d_weight():
    d = qrep.d_weight(qrep.Weight(0, a))
    assert d.numerator == 1 and d.divisor == qn(a) * qn(a + 1)
    with pytest.raises(qrep.AtypicalColor):
        qrep.d_weight(qrep.Weight(0, -1))


def test_parity_convention():
    assert PARITY == (0, 1, 0, 1)
