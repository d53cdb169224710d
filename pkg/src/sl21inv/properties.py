"""Structural checks of M and of its Conway specialization on braid fixtures.

Each check returns a ``Check(name, ok, detail)``; nothing here raises on a
failed property, so a suite can report every result.
"""

from dataclasses import dataclass

from sl21inv.diagram import BraidWord, linking_data
from sl21inv.evaluate import (ResidualPrefactor, conway, f_prime,
                              framing_correction, m_invariant)
from sl21inv.qrep import Weight, d_weight
from sl21inv.ring import (GaussLaurent, LaurentPoly, NotDivisible, exact_div,
                          specialize_colors_equal)

__all__ = [
    "Check", "framing_cancels", "divisible_for_each_cut", "cut_independent",
    "same_invariant", "conway_tilde", "conway_identity", "modified_doubling",
    "reorder_symmetric", "standard_suite",
]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _braid(x):
    return x if isinstance(x, BraidWord) else BraidWord.parse(x)


def framing_cancels(b, label=""):
    b = _braid(b)
    name = f"framing cancels [{label or b.letters}]"
    try:
        m_invariant(b)
    except ResidualPrefactor as exc:
        return Check(name, False, str(exc))
    return Check(name, True)


def divisible_for_each_cut(b, label=""):
    """The corrected numerator is divisible by <a_k><a_k+1> for every cut k."""
    b = _braid(b)
    meta = linking_data(b)
    corr = framing_correction(meta)
    bad = []
    for k in range(1, meta.n + 1):
        total = corr * f_prime(b, k, meta.colors).numerator
        div = d_weight(Weight(0, meta.colors[k - 1])).divisor
        try:
            exact_div(total.poly, div)
        except NotDivisible:
            bad.append(k)
        if not total.prefactor.is_zero:
            bad.append(k)
    return Check(f"divisibility [{label or b.letters}]", not bad,
                 f"fails for cuts {bad}" if bad else "")


def cut_independent(b, label=""):
    b = _braid(b)
    meta = linking_data(b)
    vals = [f_prime(b, k, meta.colors) for k in range(1, meta.n + 1)]
    bad = [k + 1 for k, v in enumerate(vals) if v != vals[0]]
    return Check(f"cut independence [{label or b.letters}]", not bad,
                 f"cuts {bad} differ from cut 1" if bad else "")


def same_invariant(words, label=""):
    """M agrees on several braid presentations of one link."""
    vals = [m_invariant(_braid(w)) for w in words]
    ok = all(v == vals[0] for v in vals[1:])
    return Check(f"presentation independence [{label}]", ok,
                 "" if ok else "; ".join(str(v) for v in vals))


def _equal_colors(g):
    if isinstance(g, GaussLaurent):
        return GaussLaurent(specialize_colors_equal(g.re), specialize_colors_equal(g.im))
    return specialize_colors_equal(g)


def conway_tilde(b):
    """(numerator, denominator) of the Conway function at t_1 = ... = t_n = q1^2."""
    c = conway(_braid(b))
    if hasattr(c, "denominator"):
        return _equal_colors(c.numerator), c.denominator
    return _equal_colors(c), LaurentPoly.one()


def _t_minus_inv(var=1, power=1):
    q = LaurentPoly.var(var)
    return q ** (2 * power) - q ** (-2 * power)


def conway_identity(plus, minus, zero, label=""):
    """~nabla(L+) - ~nabla(L-) = (t - 1/t) ~nabla(L0), cleared of denominators."""
    (np, dp), (nm, dm), (n0, d0) = (conway_tilde(x) for x in (plus, minus, zero))
    lhs = np * (dm * d0) - nm * (dp * d0)
    rhs = _t_minus_inv() * n0 * (dp * dm)
    return Check(f"Conway identity [{label}]", lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}")


def _double_var(g, i):
    images = {i: tuple([0] * i + [2])}
    if isinstance(g, GaussLaurent):
        return GaussLaurent(g.re.remap(images), g.im.remap(images))
    return g.remap(images)


def modified_doubling(plus, minus, base, i=1, label=""):
    """t_i nabla(L+) - t_i^-1 nabla(L-) = prod t_j^lk_ij (t_i^2 - t_i^-2) nabla(L)(t_i -> t_i^2).

    ``plus`` and ``minus`` are the (2, +-1)-cables of component i of ``base``;
    variables are q_k with t_k = q_k^2.
    """
    plus, minus, base = _braid(plus), _braid(minus), _braid(base)
    cp, cm, c0 = conway(plus), conway(minus), conway(base)
    qi = LaurentPoly.var(i)

    def split(c):
        if hasattr(c, "denominator"):
            return c.numerator, c.denominator
        return c, LaurentPoly.one()

    (np, dp), (nm, dm), (n0, d0) = split(cp), split(cm), split(c0)
    n0, d0 = _double_var(n0, i), _double_var(d0, i)
    meta = linking_data(base)
    factor = LaurentPoly.one()
    for j in range(1, meta.n + 1):
        if j != i:
            factor = factor * LaurentPoly.var(j, 2 * meta.lk[i - 1][j - 1])
    lhs = (qi ** 2 * np * dm - qi ** -2 * nm * dp) * d0
    rhs = factor * _t_minus_inv(i, 2) * n0 * dp * dm
    return Check(f"modified doubling [{label}]", lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}")


def reorder_symmetric(b, reordered, label=""):
    """~nabla is unchanged when the same link is given with components reordered."""
    n1, d1 = conway_tilde(b)
    n2, d2 = conway_tilde(reordered)
    ok = n1 * d2 == n2 * d1
    return Check(f"reorder symmetry [{label}]", ok, "" if ok else f"{n1} vs {n2}")


def standard_suite(fixtures=None):
    """The property checks on the bundled fixtures and small cable families."""
    from sl21inv.diagram import load_fixture
    names = fixtures or ["unknot", "hopf", "trefoil", "borromean", "l9n27"]
    out = []
    for name in names:
        fx = load_fixture(name)
        out.append(framing_cancels(fx.braid, name))
        if fx.components > 1:
            out.append(divisible_for_each_cut(fx.braid, name))
            out.append(cut_independent(fx.braid, name))
    out.append(same_invariant([BraidWord(2, (-1, -1, -1)), BraidWord(3, (-1, -1, -1, -2)),
                               BraidWord(3, (-1, -2, -1, -2))], "trefoil"))
    out.append(conway_identity(BraidWord(2, (1, 1, 1)), BraidWord(2, (1,)), BraidWord(2, (1, 1)),
                               "trefoil / unknot / Hopf"))
    out.append(modified_doubling(BraidWord(2, (1,)), BraidWord(2, (-1,)), BraidWord(1, ()),
                                 1, "unknot"))
    out.append(modified_doubling(BraidWord(3, (-2, -1, -1, -2, 1)), BraidWord(3, (-2, -1, -1, -2, -1)),
                                 BraidWord(2, (-1, -1)), 1, "negative Hopf"))
    out.append(reorder_symmetric(BraidWord(3, (1, -2) * 3), BraidWord(3, (1,) + (1, -2) * 3 + (-1,)),
                                 "Borromean"))
    return out
