"""The four-dimensional typical modules V(0, a) and their structure maps.

Basis v1..v4 is indexed 0..3, with v1, v3 even and v2, v4 odd.  Matrices act
on column vectors (entry (i, j) is the v_i-coefficient of the image of v_j).

E2 has the entry <a>/<1>, which is not a Laurent polynomial.  ``Rep4`` keeps
``E2hat = <1> E2`` and ``Ephat = <1> E'`` instead; every place E2 or E'
enters (relations, the R-matrix) carries the matching factor of <1>.
"""

from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache

from sl21inv.linalg import PARITY, Mat, PMat
from sl21inv.ring import (ColorForm, LaurentPoly, Scalar, exact_div, qn,
                          qpow)

__all__ = [
    "AtypicalColor", "Weight", "Rep4", "rep_matrices", "build_rbar", "build_K",
    "r_matrix", "r_matrix_inv", "braiding", "braiding_inv", "flip", "twist",
    "twist_inv", "pbar_b", "pbar_d", "cocup_cocap", "gamma_plus",
    "gamma_minus", "gamma", "coproduct", "sprime_oracle", "d_weight", "DWeight",
]

EXP_Q_BOUND = 16
_EVEN_ODD = {"h1": 0, "h2": 0, "E1": 0, "F1": 0, "E2hat": 1, "F2": 1,
             "Ephat": 1, "Fp": 1}


class AtypicalColor(ValueError):
    """A color is the constant 0 or -1 (no four-dimensional typical module)."""


def _typical(*colors):
    out = []
    for c in colors:
        c = ColorForm.lift(c)
        if not c.is_typical:
            raise AtypicalColor(f"color {c} is atypical")
        out.append(c)
    return out if len(out) > 1 else out[0]


@dataclass(frozen=True)
class Weight:
    """Highest weight (a1, a2) with a1 a natural number and a2 an affine form."""

    a1: int
    a2: ColorForm

    def __post_init__(self):
        if self.a1 < 0:
            raise ValueError("a1 must be a natural number")
        object.__setattr__(self, "a2", ColorForm.lift(self.a2))

    @property
    def is_typical(self):
        a2 = self.a2
        bad0 = a2.is_constant and a2.const == 0
        bad1 = a2.is_constant and a2.const == -1 - self.a1
        return not (bad0 or bad1)


@dataclass(frozen=True)
class Rep4:
    color: ColorForm
    parity: tuple
    h1: tuple
    h2: tuple
    E1: Mat
    F1: Mat
    E2hat: Mat
    F2: Mat
    Ephat: Mat
    Fp: Mat

    def qh(self, which, sign=1):
        """Diagonal matrix q**(sign * h_which)."""
        h = self.h1 if which == 1 else self.h2
        return Mat.diag([qpow(sign * x) for x in h])


@lru_cache(maxsize=None)
def rep_matrices(color):
    a = _typical(color)
    q = LaurentPoly.var(0)
    E1 = Mat(4, 4, {(3, 1): 1})
    F1 = Mat(4, 4, {(1, 3): 1})
    E2hat = Mat(4, 4, {(0, 3): qpow(-a) * qn(a), (1, 2): qn(a + 1)})
    F2 = Mat(4, 4, {(2, 1): 1, (3, 0): qpow(a)})
    Ephat = E1 @ E2hat - (E2hat @ E1).scale(q ** -1)
    Fp = F2 @ F1 - (F1 @ F2).scale(q)
    h1 = tuple(ColorForm(c) for c in (0, -1, 0, 1))
    h2 = (a, a + 1, a + 1, a)
    return Rep4(a, PARITY, h1, h2, E1, F1, E2hat, F2, Ephat, Fp)


def coproduct(gen, a, b):
    """Delta(gen) acting on V(a) (x) V(b) as a 16x16 matrix.

    ``gen`` is one of E1, E2hat, F1, F2, h1, h2 (h's act by q**h).
    Delta(E) = E (x) 1 + q**-h (x) E and Delta(F) = F (x) q**h + 1 (x) F.
    """
    ra, rb = rep_matrices(a), rep_matrices(b)
    if gen in ("h1", "h2"):
        i = int(gen[1])
        return ra.qh(i).kron(rb.qh(i))
    i = 1 if gen.endswith("1") else 2
    p = _EVEN_ODD[gen]
    I4 = Mat.identity(4)
    X, Y = getattr(ra, gen), getattr(rb, gen)
    if gen.startswith("E"):
        return X.kron(I4) + ra.qh(i, -1).kron(Y, PARITY, p)
    return X.kron(rb.qh(i)) + I4.kron(Y, PARITY, p)


def _qfactorial(n):
    q = LaurentPoly.var(0)
    out = LaurentPoly.one()
    for k in range(1, n + 1):
        out = out * sum((q ** j for j in range(k)), LaurentPoly.zero())
    return out


def _exp_q(X):
    """sum_n X**n / (n)_q!, truncated where X**n vanishes."""
    out = Mat.identity(X.rows)
    term = Mat.identity(X.rows)
    for n in range(1, EXP_Q_BOUND + 1):
        term = term @ X
        if term.is_zero:
            return out
        fact = _qfactorial(n)
        out = out + term.map(lambda v: exact_div(v, fact))
    raise ArithmeticError("q-exponential argument is not nilpotent")


@lru_cache(maxsize=None)
def build_rbar(a, b):
    """The unipotent factor of R on V(a) (x) V(b)."""
    a, b = _typical(a, b)
    ra, rb = rep_matrices(a), rep_matrices(b)
    X = ra.E1.kron(rb.F1).scale(qn(1))
    Y = ra.Ephat.kron(rb.Fp, PARITY, 1)
    Z = ra.E2hat.kron(rb.F2, PARITY, 1)
    return _exp_q(X) @ _exp_q(-Y) @ _exp_q(-Z)


def _k_exponents(a, b):
    ra, rb = rep_matrices(a), rep_matrices(b)
    out = []
    for i in range(4):
        for j in range(4):
            s = (Scalar.qexp(ra.h1[i], rb.h2[j], -1) * Scalar.qexp(ra.h2[i], rb.h1[j], -1)
                 * Scalar.qexp(ra.h2[i], rb.h2[j], -2))
            out.append(s)
    return out


@lru_cache(maxsize=None)
def build_K(a, b):
    """Diagonal K = q**(-h1(x)h2 - h2(x)h1 - 2 h2(x)h2) on V(a) (x) V(b)."""
    a, b = _typical(a, b)
    diag = _k_exponents(a, b)
    pref = diag[0].prefactor
    if any(s.prefactor != pref for s in diag):
        raise AssertionError("K has a non-uniform quadratic prefactor")
    return PMat(pref, Mat.diag([s.poly for s in diag]))


def _neumann_inverse(U):
    """Inverse of a unipotent matrix U as sum_k (1 - U)**k."""
    n = U.rows
    N = Mat.identity(n) - U
    out = Mat.identity(n)
    term = Mat.identity(n)
    for _ in range(n):
        term = term @ N
        if term.is_zero:
            return out
        out = out + term
    raise ArithmeticError("matrix is not unipotent")


@lru_cache(maxsize=None)
def r_matrix(a, b):
    K = build_K(a, b)
    return PMat(K.prefactor, build_rbar(a, b) @ K.mat)


@lru_cache(maxsize=None)
def r_matrix_inv(a, b):
    K = build_K(a, b)
    Kinv = Mat.diag([K.mat[i, i].inverse_monomial() for i in range(16)])
    return PMat(-K.prefactor, Kinv @ _neumann_inverse(build_rbar(a, b)))


@lru_cache(maxsize=None)
def flip():
    """Super flip v_i (x) v_j -> (-1)**(|v_i||v_j|) v_j (x) v_i."""
    e = {}
    for i in range(4):
        for j in range(4):
            e[(4 * j + i, 4 * i + j)] = -1 if PARITY[i] and PARITY[j] else 1
    return Mat(16, 16, e)


@lru_cache(maxsize=None)
def braiding(a, b):
    """c_{V(a),V(b)}: V(a) (x) V(b) -> V(b) (x) V(a)."""
    return flip() @ r_matrix(a, b)


@lru_cache(maxsize=None)
def braiding_inv(a, b):
    """Inverse of c_{V(a),V(b)}: V(b) (x) V(a) -> V(a) (x) V(b)."""
    return r_matrix_inv(a, b) @ flip()


def twist(color):
    a = _typical(color)
    return Scalar.qexp(a, a + 1, -2)


def twist_inv(color):
    return twist(color).inverse()


@lru_cache(maxsize=None)
def pbar_b(color):
    """Coevaluation 1 -> V(a) (x) V(-1-a), as a 16x1 matrix."""
    a = _typical(color)
    q = LaurentPoly.var(0)
    s = qpow(-a)
    return Mat(16, 1, {(2, 0): s, (8, 0): s * q ** -1,
                       (13, 0): s, (7, 0): -(s * q ** -1)})


@lru_cache(maxsize=None)
def pbar_d(color):
    """Evaluation V(-1-a) (x) V(a) -> 1, as a 1x16 matrix."""
    a = _typical(color)
    q = LaurentPoly.var(0)
    s = qpow(a)
    return Mat(1, 16, {(0, 2): s * q, (0, 7): s, (0, 8): s, (0, 13): -(s * q)})


def cocup_cocap(color):
    """The second duality pair (b', d') for V(a).

    b': 1 -> V(-1-a) (x) V(a) and d': V(a) (x) V(-1-a) -> 1.  Under the
    identification V(a)* = V(-1-a) these are the coevaluation and evaluation
    of the dual color.
    """
    a = _typical(color)
    return pbar_b(a.dual()), pbar_d(a.dual())


@lru_cache(maxsize=None)
def gamma_plus(a, b):
    """gamma_+^{a,b}: V(a+b) -> V(a) (x) V(b)."""
    a, b = _typical(a, b)
    _typical(a + b)
    e = {(0, 0): 1,
         (1, 1): qpow(-a), (4, 1): 1,
         (2, 2): qpow(-a), (7, 2): -qpow(b), (8, 2): qpow(b), (13, 2): qpow(b + 1),
         (3, 3): qpow(-a), (12, 3): 1}
    return Mat(16, 4, e)


@lru_cache(maxsize=None)
def gamma_minus(a, b):
    """gamma_-^{a,b}: V(a+b+1) -> V(a) (x) V(b)."""
    a, b = _typical(a, b)
    _typical(a + b + 1)
    s = a + b + 1
    e = {(2, 0): qpow(b + 1) * qn(a) * qn(a + 1),
         (7, 0): qpow(b) * qn(a + 1) * qn(b + 1),
         (8, 0): qpow(-a - 1) * qn(b) * qn(b + 1),
         (13, 0): -(qpow(b + 1) * qn(a + 1) * qn(b + 1)),
         (6, 1): qn(a + 1) * qn(s),
         (9, 1): qpow(-a - 1) * qn(b + 1) * qn(s),
         (10, 2): qn(s) * qn(s + 1),
         (11, 3): qpow(-a - 1) * qn(b + 1) * qn(s),
         (14, 3): qn(a + 1) * qn(s)}
    return Mat(16, 4, e)


def gamma(sign, a, b):
    return gamma_plus(a, b) if sign > 0 else gamma_minus(a, b)


def sprime_oracle(a, b):
    """Closed form of the long Hopf bracket S'(a, b)."""
    if not a.is_typical:
        raise AtypicalColor(f"weight {a} is atypical")
    ea = 2 * a.a2 + (a.a1 + 1)
    eb = 2 * b.a2 + (b.a1 + 1)
    lead = Scalar.qexp(ea, eb, -1)
    ratio = exact_div(qn((a.a1 + 1) * (b.a1 + 1)), qn(b.a1 + 1))
    return lead * (ratio * qn(b.a2) * qn(b.a2 + b.a1 + 1))


DWeight = namedtuple("DWeight", ["divisor", "numerator"])


def d_weight(a):
    """d(a) = <a1+1> / (<1> <a2> <a2+a1+1>) as (divisor, numerator)."""
    if not a.is_typical:
        raise AtypicalColor(f"weight {a} is atypical")
    num = exact_div(qn(a.a1 + 1), qn(1))
    return DWeight(qn(a.a2) * qn(a.a2 + a.a1 + 1), num)
