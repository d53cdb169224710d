"""Sparse multivariate Laurent polynomials with integer or Gaussian coefficients.

Variable 0 is ``q``; variable i >= 1 is ``q_i = q**alpha_i`` for the i-th
color.  A polynomial does not carry a variable list: exponent vectors are
conceptually infinite with trailing zeros, and names are supplied only when
printing or serializing.
"""

import json
import re

from sl21inv.ring import _backend
from sl21inv.ring.packing import (EXP_LIMIT, ExponentOverflow, decode, encode,
                                  max_abs_exponent, unit)

__all__ = [
    "LaurentPoly", "GaussLaurent", "NotDivisible", "exact_div",
    "specialize_q_to_i", "specialize_colors_equal", "default_names",
]


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


def default_names(nvars):
    return ["q"] + [f"q{i}" for i in range(1, nvars)]


def _key_nvars(keys):
    n = 1
    for k in keys:
        n = max(n, len(decode(k)))
    return n


def _check_sum(a, b):
    """Guard packed addition of keys from polys with bounds a._bound, b._bound."""
    if a._bound + b._bound <= EXP_LIMIT:
        return a._bound + b._bound
    exact = max_abs_exponent(a._t) + max_abs_exponent(b._t)
    if exact > EXP_LIMIT:
        raise ExponentOverflow("product exponents exceed the packed range")
    return exact


class LaurentPoly:
    """Element of Z[q^±1, q_1^±1, ..., q_n^±1] in canonical sparse form."""

    __slots__ = ("_t", "_bound", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms is None:
            pass
        elif isinstance(terms, int):
            if terms:
                t[0] = terms
        else:
            for exps, c in dict(terms).items():
                if c:
                    k = encode(exps)
                    t[k] = t.get(k, 0) + c
            t = {k: c for k, c in t.items() if c}
        self._t = t
        self._bound = max_abs_exponent(t)
        self._hash = None

    @classmethod
    def _raw(cls, t, bound=None):
        p = cls.__new__(cls)
        p._t = t
        p._bound = max_abs_exponent(t) if bound is None else bound
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls):
        return cls._raw({}, 0)

    @classmethod
    def one(cls):
        return cls._raw({0: 1}, 0)

    @classmethod
    def const(cls, c):
        return cls._raw({0: c} if c else {}, 0)

    @classmethod
    def var(cls, i, e=1):
        """The monomial x_i**e (x_0 = q)."""
        return cls._raw({unit(i, e): 1}, abs(e))

    @classmethod
    def monomial(cls, exps, coef=1):
        return cls._raw({encode(exps): coef} if coef else {},
                        max((abs(e) for e in exps), default=0))

    # inspection

    @property
    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    @property
    def nvars(self):
        return _key_nvars(self._t)

    def terms(self, nvars=None):
        """Mapping exponent tuple -> coefficient, tuples padded to ``nvars``."""
        n = self.nvars if nvars is None else nvars
        return {decode(k, n): c for k, c in self._t.items()}

    def sorted_terms(self, nvars=None):
        """(exponent tuple, coefficient) pairs in lexicographic exponent order."""
        return sorted(self.terms(nvars).items())

    def is_monomial(self):
        return len(self._t) == 1

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self):
        return self._t.get(0, 0)

    def variables(self):
        """Indices of variables that occur with a nonzero exponent."""
        used = set()
        for k in self._t:
            for i, e in enumerate(decode(k)):
                if e:
                    used.add(i)
        return used

    # arithmetic

    @staticmethod
    def _lift(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(_backend.kernel.add(self._t, other._t),
                                max(self._bound, other._bound))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(_backend.kernel.add(self._t, other._t, -1),
                                max(self._bound, other._bound))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()}, self._bound)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()},
                                    self._bound)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        bound = _check_sum(self, other)
        return LaurentPoly._raw(_backend.kernel.mul(self._t, other._t), bound)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse_monomial() ** (-n)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse_monomial(self):
        if len(self._t) != 1:
            raise NotDivisible("only monomials are units")
        (k, c), = self._t.items()
        if c not in (1, -1):
            raise NotDivisible(f"coefficient {c} is not a unit")
        return LaurentPoly._raw({-k: c}, self._bound)

    def shift(self, key):
        """Multiply by the monomial with packed key ``key``."""
        return LaurentPoly._raw({k + key: c for k, c in self._t.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # ring morphisms

    def remap(self, images):
        """Substitute x_i -> monomial with exponent vector ``images[i]``.

        ``images`` is a mapping from variable index to exponent tuple;
        unlisted variables map to themselves.
        """
        img = {i: encode(v) for i, v in images.items()}
        out = {}
        for k, c in self._t.items():
            nk = 0
            for i, e in enumerate(decode(k)):
                if e:
                    nk += e * img.get(i, unit(i))
            out[nk] = out.get(nk, 0) + c
        res = {k: c for k, c in out.items() if c}
        for k in res:  # reject silent digit overflow
            if any(abs(e) > EXP_LIMIT for e in decode(k)):
                raise ExponentOverflow("remapped exponent out of range")
        return LaurentPoly._raw(res)

    def coefficients_in(self, i):
        """Split as sum_e x_i**e * C_e; returns {e: C_e} with C_e free of x_i."""
        out = {}
        step = unit(i)
        for k, c in self._t.items():
            exps = decode(k)
            e = exps[i] if i < len(exps) else 0
            rest = k - e * step
            out.setdefault(e, {})[rest] = c
        return {e: LaurentPoly._raw(t) for e, t in out.items()}

    # serialization

    def to_text(self, names=None):
        n = self.nvars if names is None else len(names)
        names = default_names(n) if names is None else list(names)
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.sorted_terms(len(names)):
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            if len(exps) > len(names) and any(exps[len(names):]):
                raise ValueError("not enough variable names to print polynomial")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def to_json_obj(self, names=None):
        n = self.nvars if names is None else len(names)
        names = default_names(n) if names is None else list(names)
        return {"vars": names,
                "terms": [{"exp": list(e), "coef": c}
                          for e, c in self.sorted_terms(len(names))]}

    def to_json(self, names=None):
        return json.dumps(self.to_json_obj(names))

    @classmethod
    def from_json_obj(cls, obj):
        return cls({tuple(t["exp"]): t["coef"] for t in obj["terms"]})

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse(cls, text, names=None):
        """Inverse of ``to_text`` (sums of signed monomials)."""
        return _parse(text, names, cls)


def _split_terms(text):
    # split on top-level +/- that are not exponent signs (preceded by ^)
    s = text.replace(" ", "")
    terms, cur, sign = [], "", 1
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] != "^":
            terms.append((sign, cur))
            sign, cur = (1 if ch == "+" else -1), ""
        elif ch in "+-" and i == 0:
            sign = 1 if ch == "+" else -1
        else:
            cur += ch
    terms.append((sign, cur))
    return [(sg, t) for sg, t in terms if t]


def _parse(text, names, cls):
    text = text.strip()
    if text in ("", "0"):
        return cls.zero()
    index = {}
    if names is not None:
        index = {nm: i for i, nm in enumerate(names)}
    out = {}
    for sign, term in _split_terms(text):
        coef = sign
        exps = {}
        for factor in term.split("*"):
            if re.fullmatch(r"\d+", factor):
                coef *= int(factor)
                continue
            m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?", factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r}")
            name, e = m.group(1), int(m.group(2) or 1)
            if names is None:
                if name == "q":
                    i = 0
                elif re.fullmatch(r"q\d+", name):
                    i = int(name[1:])
                else:
                    raise ValueError(f"unknown variable {name!r}")
            else:
                if name not in index:
                    raise ValueError(f"unknown variable {name!r}")
                i = index[name]
            exps[i] = exps.get(i, 0) + e
        vec = [0] * (max(exps) + 1 if exps else 1)
        for i, e in exps.items():
            vec[i] = e
        k = encode(vec)
        out[k] = out.get(k, 0) + coef
    return cls._raw({k: c for k, c in out.items() if c})


# exact division

def _lowest_var(p):
    vs = p.variables()
    return min(vs) if vs else None


def exact_div(num, den):
    """Quotient Q with Q * den == num, or raise NotDivisible.

    Pivots on the lowest-index variable occurring in ``den``; negative
    exponents are cleared by monomial shifts, then long division runs with
    coefficients in the remaining variables (recursively exact).
    """
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return LaurentPoly.zero()
    if den.is_monomial():
        (k, c), = den._t.items()
        out = {}
        for kn, cn in num._t.items():
            qc, r = divmod(cn, c)
            if r:
                raise NotDivisible(f"{cn} is not divisible by {c}")
            out[kn - k] = qc
        return LaurentPoly._raw(out)
    v = _lowest_var(den)
    if v is None:  # nonzero constant, handled above as a monomial
        raise AssertionError("unreachable")
    N = num.coefficients_in(v)
    D = den.coefficients_in(v)
    dlo, dhi = min(D), max(D)
    dlead = D[dhi]
    nlo = min(N)
    # normalize both to polynomials in x_v with nonzero constant term
    N = {e - nlo: c for e, c in N.items()}
    D = {e - dlo: c for e, c in D.items()}
    ddeg = dhi - dlo
    Q = {}
    while N:
        ndeg = max(N)
        if ndeg < ddeg:
            raise NotDivisible("nonzero remainder")
        c = exact_div(N[ndeg], dlead)
        s = ndeg - ddeg
        Q[s] = c
        for e, dc in D.items():
            t = N.get(e + s, LaurentPoly.zero()) - c * dc
            if t.is_zero:
                N.pop(e + s, None)
            else:
                N[e + s] = t
    out = LaurentPoly.zero()
    step = nlo - dlo
    for e, c in Q.items():
        out = out + c * LaurentPoly.var(v, e + step)
    return out


# Gaussian coefficients

class GaussLaurent:
    """Laurent polynomial with Gaussian-integer coefficients, stored as re + i*im."""

    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        self.re = LaurentPoly._lift(re) if re is not None else LaurentPoly.zero()
        self.im = LaurentPoly._lift(im) if im is not None else LaurentPoly.zero()
        if self.re is NotImplemented or self.im is NotImplemented:
            raise TypeError("GaussLaurent parts must be LaurentPoly or int")

    @classmethod
    def i(cls):
        return cls(0, 1)

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussLaurent):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return GaussLaurent(other)
        if isinstance(other, complex) and other.real.is_integer() and other.imag.is_integer():
            return GaussLaurent(int(other.real), int(other.imag))
        return NotImplemented

    @property
    def is_zero(self):
        return self.re.is_zero and self.im.is_zero

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussLaurent(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussLaurent(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussLaurent(-self.re, -self.im)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussLaurent(self.re * other.re - self.im * other.im,
                            self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussLaurent(self.re, -self.im)

    def remap(self, images):
        return GaussLaurent(self.re.remap(images), self.im.remap(images))

    def _coeffs(self, nvars):
        out = {}
        for e, c in self.re.terms(nvars).items():
            out[e] = [c, 0]
        for e, c in self.im.terms(nvars).items():
            out.setdefault(e, [0, 0])[1] = c
        return sorted(out.items())

    @property
    def nvars(self):
        return max(self.re.nvars, self.im.nvars)

    def to_text(self, names=None):
        n = self.nvars if names is None else len(names)
        names = default_names(n) if names is None else list(names)
        if self.is_zero:
            return "0"
        parts = []
        for exps, (a, b) in self._coeffs(len(names)):
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if b == 0:
                sign, mag = ("-" if a < 0 else "+"), str(abs(a))
            elif a == 0:
                sign = "-" if b < 0 else "+"
                mag = "i" if abs(b) == 1 else f"{abs(b)}i"
            else:
                sign, mag = "+", f"({a}{'+' if b > 0 else '-'}{abs(b)}i)"
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            parts.append((sign, body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GaussLaurent({self.to_text()!r})"

    def to_json_obj(self, names=None):
        n = self.nvars if names is None else len(names)
        names = default_names(n) if names is None else list(names)
        return {"vars": names,
                "terms": [{"exp": list(e), "coef": {"re": a, "im": b}}
                          for e, (a, b) in self._coeffs(len(names))]}

    def to_json(self, names=None):
        return json.dumps(self.to_json_obj(names))

    @classmethod
    def from_json_obj(cls, obj):
        re_t, im_t = {}, {}
        for t in obj["terms"]:
            e = tuple(t["exp"])
            c = t["coef"]
            if isinstance(c, dict):
                re_t[e], im_t[e] = c.get("re", 0), c.get("im", 0)
            else:
                re_t[e] = c
        return cls(LaurentPoly(re_t), LaurentPoly(im_t))


_I_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def specialize_q_to_i(p):
    """Ring morphism q -> i.  The q slot of every exponent becomes zero."""
    if isinstance(p, GaussLaurent):
        return specialize_q_to_i(p.re) + GaussLaurent.i() * specialize_q_to_i(p.im)
    re_t, im_t = {}, {}
    for k, c in p._t.items():
        exps = decode(k)
        e0 = exps[0] if exps else 0
        rest = k - e0
        a, b = _I_POWERS[e0 % 4]
        if a:
            re_t[rest] = re_t.get(rest, 0) + a * c
        if b:
            im_t[rest] = im_t.get(rest, 0) + b * c
    return GaussLaurent(LaurentPoly._raw({k: c for k, c in re_t.items() if c}),
                        LaurentPoly._raw({k: c for k, c in im_t.items() if c}))


def specialize_colors_equal(p):
    """Send every color variable q_i (i >= 1) to q_1."""
    n = p.nvars
    images = {i: (0, 1) for i in range(2, n)}
    return p.remap(images)
