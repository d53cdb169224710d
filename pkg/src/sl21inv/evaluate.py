"""The functor F on Morse words, brackets, F', M and its specializations."""

from dataclasses import dataclass
from functools import lru_cache

from sl21inv import qrep
from sl21inv.diagram import (BraidWord, Cap, Cross, Cup, Merge, Split, _step,
                             braid_to_morse, linking_data, validate)
from sl21inv.linalg import Mat, PMat
from sl21inv.ring import (ColorForm, GaussLaurent, LaurentPoly, QuadExponent,
                          Scalar, exact_div, qn, qpow, specialize_colors_equal,
                          specialize_q_to_i)
from sl21inv.ring import _backend

__all__ = [
    "WIDTH_CAP", "WidthExceeded", "NotScalarMultiple", "ResidualPrefactor",
    "InvalidDiagram", "evaluate", "bracket", "merge_map", "FPrime", "f_prime",
    "f_prime_tangle", "KnotValue", "ConwayKnot", "m_invariant", "links_gould",
    "conway", "framing_correction",
]

WIDTH_CAP = 8


class WidthExceeded(RuntimeError):
    """A level is wider than WIDTH_CAP strands."""


class NotScalarMultiple(ArithmeticError):
    """F of a (1,1)-tangle is not a multiple of the identity."""


class ResidualPrefactor(ArithmeticError):
    """The framing correction left a nonzero quadratic exponent."""


class InvalidDiagram(ValueError):
    def __init__(self, report):
        super().__init__(f"{report.kind} at slice {report.slice_index}: {report.message}")
        self.report = report


@lru_cache(maxsize=None)
def merge_map(sign, x, y):
    """Vertex V(x) (x) V(y) -> V(e): gamma^{-1-x,e} with its left leg bent down."""
    e = x + y + 1 if sign > 0 else x + y
    g = qrep.gamma(sign, x.dual(), e)
    return (qrep.pbar_d(x.dual()).kron(Mat.identity(4))) @ (Mat.identity(4).kron(g))


def _operator(level, s):
    """(matrix, input arity) of a slice acting on ``level``."""
    if isinstance(s, Cross):
        x, y = level[s.pos].module, level[s.pos + 1].module
        return (qrep.braiding(x, y) if s.kind > 0 else qrep.braiding_inv(y, x)), 2
    if isinstance(s, Cup):
        return qrep.pbar_b(s.left.module), 0
    if isinstance(s, Cap):
        return qrep.pbar_d(level[s.pos + 1].module), 2
    if isinstance(s, Split):
        return qrep.gamma(s.sign, s.left.module, s.right.module), 1
    if isinstance(s, Merge):
        return merge_map(s.sign, level[s.pos].module, level[s.pos + 1].module), 2
    raise TypeError(f"unknown slice {s!r}")


def _table(mat):
    """Input index -> [(output index, term dict)] for a slice matrix."""
    table = {}
    for (i, j), v in mat.e.items():
        table.setdefault(j, []).append((i, v._t))
    return table


def evaluate(m, check=True):
    """F(m) as a 4**top x 4**bottom matrix with a single quadratic prefactor."""
    if check:
        rep = validate(m)
        if not rep:
            raise InvalidDiagram(rep)
    if m.max_width > WIDTH_CAP:
        raise WidthExceeded(f"diagram width {m.max_width} exceeds {WIDTH_CAP}")
    kernel = _backend.kernel
    ncol = 4 ** len(m.bottom)
    # state key idx * ncol + col: basis index idx of the current level, input column col
    states = {col * ncol + col: {0: 1} for col in range(ncol)}
    pref = QuadExponent()
    level = list(m.bottom)
    steps = []
    for s in m.slices:
        op, k_in = _operator(level, s)
        if isinstance(op, PMat):
            pref = pref + op.prefactor
            op = op.mat
        k_out = (op.rows.bit_length() - 1) // 2
        steps.append((_table(op), len(level), s.pos, k_in, k_out))
        level = _step(level, s)
    states = kernel.contract_all(states, steps, ncol)
    entries = {divmod(key, ncol): LaurentPoly._raw(v) for key, v in states.items()}
    return PMat(pref, Mat(4 ** len(level), ncol, entries))


def bracket(m):
    """The scalar x with F(m) = x Id for a (1,1)-tangle m."""
    if len(m.bottom) != 1 or len(m.top) != 1 or m.bottom[0].module != m.top[0].module:
        raise ValueError("bracket needs a (1,1)-tangle with equal end colors")
    F = evaluate(m)
    x = F.mat[0, 0]
    for (i, j), v in F.mat.e.items():
        if i != j or v != x:
            raise NotScalarMultiple(f"entry ({i},{j}) = {v} breaks x*Id with x = {x}")
    if len(F.mat.e) not in (0, 4):
        raise NotScalarMultiple("diagonal is not constant")
    return Scalar(F.prefactor, x)


@dataclass(frozen=True)
class FPrime:
    """F' = numerator / divisor, with divisor <a><a+1> for the cut color a."""
    numerator: Scalar
    divisor: LaurentPoly

    def __eq__(self, other):
        if not isinstance(other, FPrime):
            return NotImplemented
        if self.numerator.is_zero or other.numerator.is_zero:
            return self.numerator.is_zero and other.numerator.is_zero
        return (self.numerator.prefactor == other.numerator.prefactor
                and self.numerator.poly * other.divisor == other.numerator.poly * self.divisor)

    __hash__ = None


def f_prime_tangle(m):
    a = m.bottom[0].module
    return FPrime(bracket(m), qrep.d_weight(qrep.Weight(0, a)).divisor)


def f_prime(b, cut=1, colors=None):
    return f_prime_tangle(braid_to_morse(b, cut, colors))


def framing_correction(meta):
    """Scalar q**(sum over ordered pairs lk*_ij (2 a_i a_j + a_i + a_j))."""
    out = Scalar.one()
    for i in range(1, meta.n + 1):
        for j in range(1, meta.n + 1):
            lk = meta.lk_star(i, j)
            if not lk:
                continue
            ai, aj = meta.colors[i - 1], meta.colors[j - 1]
            out = out * Scalar.qexp(ai, aj, 2 * lk) * qpow(lk * (ai + aj))
    return out


@dataclass(frozen=True)
class KnotValue:
    """M of a knot as numerator / denominator, denominator <a><a+1>."""
    numerator: LaurentPoly
    denominator: LaurentPoly

    def split_m0(self):
        """P with M = M0 + P, M0 the unknot value; None if not Laurent."""
        from sl21inv.ring import NotDivisible
        try:
            return exact_div(self.numerator - 1, self.denominator)
        except NotDivisible:
            return None

    def __eq__(self, other):
        if not isinstance(other, KnotValue):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None


@dataclass(frozen=True)
class ConwayKnot:
    """Conway potential of a knot, numerator / (q1^2 - q1^-2)."""
    numerator: GaussLaurent
    denominator: LaurentPoly

    def __eq__(self, other):
        if not isinstance(other, ConwayKnot):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None


def _as_braid(b):
    if isinstance(b, BraidWord):
        return b
    raise TypeError("expected a BraidWord")


def m_invariant(b, cut=1, colors=None):
    """M(L): a LaurentPoly for links, a KnotValue for knots."""
    b = _as_braid(b)
    meta = linking_data(b, colors)
    fp = f_prime(b, cut, meta.colors)
    total = framing_correction(meta) * fp.numerator
    if not total.prefactor.is_zero:
        raise ResidualPrefactor(f"quadratic exponent {total.prefactor} survived the correction")
    if meta.n == 1:
        return KnotValue(total.poly, fp.divisor)
    return exact_div(total.poly, fp.divisor)


def links_gould(b, cut=1):
    """Links-Gould invariant in (q, q1): <a><a+1> M at equal colors."""
    M = m_invariant(b, cut)
    if isinstance(M, KnotValue):
        return specialize_colors_equal(M.numerator)
    a = ColorForm.var(1)
    return qn(a) * qn(a + 1) * specialize_colors_equal(M)


def conway(b, cut=1):
    """i * M at q = i; knots give a ConwayKnot over q1^2 - q1^-2."""
    M = m_invariant(b, cut)
    i = GaussLaurent.i()
    if isinstance(M, KnotValue):
        q1 = LaurentPoly.var(1)
        # <a><a+1> at q = i equals i (q1^2 - q1^-2), so i N / D = N / (q1^2 - q1^-2)
        return ConwayKnot(specialize_q_to_i(M.numerator), q1 ** 2 - q1 ** -2)
    return i * specialize_q_to_i(M)
