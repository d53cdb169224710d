"""Affine color forms, quadratic exponent prefactors and scalars."""

from dataclasses import dataclass

from sl21inv.ring.laurent import GaussLaurent, LaurentPoly
from sl21inv.ring.packing import encode

__all__ = ["ColorForm", "QuadExponent", "Scalar", "PrefactorMismatch",
           "qpow", "qn"]


class PrefactorMismatch(ArithmeticError):
    """Two scalars with different quadratic prefactors were added."""


def _clean(items):
    return tuple(sorted((k, v) for k, v in items if v))


@dataclass(frozen=True)
class ColorForm:
    """The affine form ``const + sum(lin[i] * alpha_i)`` with integer coefficients."""

    const: int = 0
    lin: tuple = ()

    def __post_init__(self):
        d = {}
        for i, c in self.lin:
            if i < 1:
                raise ValueError("color variables are indexed from 1")
            d[i] = d.get(i, 0) + c
        object.__setattr__(self, "lin", _clean(d.items()))

    @classmethod
    def var(cls, i, coef=1, const=0):
        return cls(const, ((i, coef),))

    @classmethod
    def lift(cls, x):
        if isinstance(x, ColorForm):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot use {type(x).__name__} as a color form")

    def coef(self, i):
        return dict(self.lin).get(i, 0)

    @property
    def is_constant(self):
        return not self.lin

    @property
    def is_typical(self):
        """Syntactic typicality of a1 = 0 colors: not the constant 0 or -1."""
        return not (self.is_constant and self.const in (0, -1))

    def variables(self):
        return {i for i, _ in self.lin}

    def __add__(self, other):
        try:
            other = ColorForm.lift(other)
        except TypeError:
            return NotImplemented
        d = dict(self.lin)
        for i, c in other.lin:
            d[i] = d.get(i, 0) + c
        return ColorForm(self.const + other.const, tuple(d.items()))

    __radd__ = __add__

    def __neg__(self):
        return ColorForm(-self.const, tuple((i, -c) for i, c in self.lin))

    def __sub__(self, other):
        try:
            other = ColorForm.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ColorForm.lift(other) - self

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return ColorForm(self.const * k, tuple((i, c * k) for i, c in self.lin))

    __rmul__ = __mul__

    def dual(self):
        """Color of the same edge read in the opposite direction."""
        return -1 - self

    def exponents(self):
        n = max((i for i, _ in self.lin), default=0) + 1
        exps = [0] * n
        exps[0] = self.const
        for i, c in self.lin:
            exps[i] = c
        return tuple(exps)

    def substitute(self, values):
        """Replace alpha_i by the forms in ``values`` (missing ones are kept)."""
        out = ColorForm(self.const)
        for i, c in self.lin:
            out = out + c * ColorForm.lift(values.get(i, ColorForm.var(i)))
        return out

    def to_text(self, names=None):
        parts = []
        for i, c in self.lin:
            nm = names[i] if names else f"a{i}"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(("-" if c < 0 else "+", mag + nm))
        if self.const or not parts:
            parts.append(("-" if self.const < 0 else "+", str(abs(self.const))))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += sign + body
        return s

    def __str__(self):
        return self.to_text()


def qpow(c):
    """The monomial q**c."""
    c = ColorForm.lift(c)
    return LaurentPoly._raw({encode(c.exponents()): 1})


def qn(c):
    """Quantum integer <c> = q**c - q**-c."""
    c = ColorForm.lift(c)
    return qpow(c) - qpow(-c)


@dataclass(frozen=True)
class QuadExponent:
    """Quadratic form ``sum c_ij alpha_i alpha_j`` stored on i <= j."""

    quad: tuple = ()

    def __post_init__(self):
        d = {}
        for (i, j), c in self.quad:
            key = (i, j) if i <= j else (j, i)
            d[key] = d.get(key, 0) + c
        object.__setattr__(self, "quad", _clean(d.items()))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def product(cls, c, d, k=1):
        """Split ``k * c * d`` into (quadratic form, linear ColorForm, constant)."""
        c, d = ColorForm.lift(c), ColorForm.lift(d)
        quad = {}
        for i, ci in c.lin:
            for j, dj in d.lin:
                key = (i, j) if i <= j else (j, i)
                quad[key] = quad.get(key, 0) + k * ci * dj
        lin = (k * c.const) * ColorForm(0, d.lin) + (k * d.const) * ColorForm(0, c.lin)
        return cls(tuple(quad.items())), lin, k * c.const * d.const

    @property
    def is_zero(self):
        return not self.quad

    def __bool__(self):
        return bool(self.quad)

    def __add__(self, other):
        if not isinstance(other, QuadExponent):
            return NotImplemented
        return QuadExponent(self.quad + other.quad)

    def __neg__(self):
        return QuadExponent(tuple((k, -c) for k, c in self.quad))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return QuadExponent(tuple((key, c * k) for key, c in self.quad))

    __rmul__ = __mul__

    def specialize_equal(self):
        """All alpha_i -> alpha_1."""
        return QuadExponent((((1, 1), sum(c for _, c in self.quad)),))

    def to_text(self, names=None):
        if not self.quad:
            return "0"
        out = []
        for (i, j), c in self.quad:
            ni = names[i] if names else f"a{i}"
            nj = names[j] if names else f"a{j}"
            mono = f"{ni}^2" if i == j else f"{ni}*{nj}"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            out.append(("-" if c < 0 else "+", mag + mono))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Scalar:
    """The value q**prefactor * poly."""

    prefactor: QuadExponent
    poly: object  # LaurentPoly or GaussLaurent

    @classmethod
    def one(cls):
        return cls(QuadExponent(), LaurentPoly.one())

    @classmethod
    def of(cls, poly, prefactor=None):
        if isinstance(poly, int):
            poly = LaurentPoly.const(poly)
        return cls(prefactor or QuadExponent(), poly)

    @classmethod
    def qexp(cls, c, d, k=1):
        """q**(k*c*d) for color forms c, d."""
        quad, lin, const = QuadExponent.product(c, d, k)
        return cls(quad, qpow(lin + const))

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.prefactor + other.prefactor, self.poly * other.poly)
        if isinstance(other, (int, LaurentPoly, GaussLaurent)):
            return Scalar(self.prefactor, self.poly * other)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.prefactor != self.prefactor:
            raise PrefactorMismatch(f"{self.prefactor} vs {other.prefactor}")
        return Scalar(self.prefactor, self.poly + other.poly)

    def __neg__(self):
        return Scalar(self.prefactor, -self.poly)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    @property
    def is_zero(self):
        return self.poly.is_zero

    def inverse(self):
        """Reciprocal of a unit scalar (monomial poly)."""
        return Scalar(-self.prefactor, self.poly.inverse_monomial())

    def __str__(self):
        if self.prefactor.is_zero:
            return str(self.poly)
        return f"q^({self.prefactor}) * ({self.poly})"

    def __repr__(self):
        return f"Scalar({self})"
