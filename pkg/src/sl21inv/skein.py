"""Skein relations for colored trivalent graphs, checked against the functor.

Relations are verified, never used for rewriting.  Open relations compare
morphisms entrywise at generic q.  Relations that only hold for closed
graphs are tested on a family of closures: each side is composed with a
closing tangle T, the right strand is capped off and the bracket of the
resulting (1,1)-tangle is compared.  The cut strand is the same on both
sides, so the common factor d(a) drops out.
"""

from dataclasses import dataclass, field
from itertools import product

from sl21inv.diagram import (Cap, Cross, Cup, Merge, MorseWord, Split, Strand,
                             validate)
from sl21inv.evaluate import bracket, evaluate
from sl21inv.linalg import PMat
from sl21inv.ring import (ColorForm, GaussLaurent, Scalar, qn, qpow,
                          specialize_q_to_i)

__all__ = [
    "Inadmissible", "AtypicalEdge", "Mismatch", "Term", "LinearRelation",
    "CheckedRelation", "Outcome", "internal_color", "build_IH", "is_critical",
    "theta_value", "hopf_chain", "catalog", "verify_relation", "report",
]


class Inadmissible(ValueError):
    """Vertex signs and colors admit no internal edge color."""


class AtypicalEdge(ValueError):
    """An edge would carry the constant color 0 or -1."""


class Mismatch(AssertionError):
    def __init__(self, name, witness):
        super().__init__(f"{name}: {witness}")
        self.witness = witness


def _lift(*xs):
    return tuple(ColorForm.lift(x) for x in xs)


def _half(s, sign):
    # -(s+1)/2 for sign -1, (s-1)/2 for sign +1, as integers
    return -(s + 1) // 2 if sign < 0 else (s - 1) // 2


def internal_color(kind, a, b, c, d, signs):
    """Color of the internal edge of I or H, checking both vertex constraints."""
    a, b, c, d = _lift(a, b, c, d)
    s, t = signs
    if kind == "I":
        e = a + b - _half(s, -1)
        ok = c + d - e == ColorForm(_half(t, 1))
    elif kind == "H":
        e = c - a + _half(s, -1)
        ok = d - b + e == ColorForm(_half(t, 1))
    else:
        raise ValueError(f"kind must be 'I' or 'H', not {kind!r}")
    if not ok:
        raise Inadmissible(f"{kind}({a},{b};{c},{d}) with signs {signs} has no internal color")
    if not e.is_typical:
        raise AtypicalEdge(f"internal edge of {kind} is colored {e}")
    return e


def is_critical(a, b, c, d):
    """Some edge of H is critical: an outer leg keeps its color across a vertex."""
    a, b, c, d = _lift(a, b, c, d)
    return c == a or d == b


def build_IH(kind, a, b, c, d, signs, variant=0):
    """The four-legged graph I or H from bottom (a, b) to top (c, d).

    I merges a, b into e with sign s and splits e into c, d with sign s'.
    H joins the left strand a->c and the right strand b->d by an edge e
    running right to left.  ``variant=1`` slices H with the left vertex low
    (e then runs downward); the two slicings are isotopic.
    """
    a, b, c, d = _lift(a, b, c, d)
    s, t = signs
    e = internal_color(kind, a, b, c, d, signs)
    bottom = (Strand(a), Strand(b))
    if kind == "I":
        slices = [Merge(0, s, Strand(e)), Split(0, t, Strand(c), Strand(d))]
    elif variant:
        slices = [Split(0, s, Strand(c), Strand(e, False)), Merge(1, t, Strand(d))]
    else:
        slices = [Split(1, t, Strand(e), Strand(d)), Merge(0, s, Strand(c))]
    m = MorseWord(bottom, slices)
    rep = validate(m)
    if not rep:
        raise (AtypicalEdge if rep.kind == "AtypicalEdge" else Inadmissible)(rep.message)
    return m


def _strands(*cols):
    return tuple(Strand(c) for c in _lift(*cols))


def _identity(*cols):
    return MorseWord(_strands(*cols))


def _crossing(a, b, kind):
    return MorseWord(_strands(a, b), [Cross(0, kind)])


def _stack(lower, upper):
    """upper o lower; assumes the levels match."""
    return MorseWord(lower.bottom, lower.slices + upper.slices)


def _close_right(m):
    """Cap the right strand of a 2-to-2 diagram into a (1,1)-tangle."""
    a, b = m.bottom
    return MorseWord((a,), [Cup(1, b)] + list(m.slices) + [Cap(1)])


def _closers(top, bottom):
    """Closing tangles from ``top`` back to ``bottom`` (both pairs of colors)."""
    c, d = top
    a, b = bottom
    out = []
    if (c, d) == (a, b):
        out.append(_identity(a, b))
        for k in (1, -1):
            out.append(MorseWord(_strands(a, b), [Cross(0, k), Cross(0, k)]))
    if (c, d) == (b, a):
        out += [_crossing(c, d, 1), _crossing(c, d, -1)]
    for kind, signs in product("IH", product((1, -1), repeat=2)):
        try:
            out.append(build_IH(kind, c, d, a, b, signs))
        except (Inadmissible, AtypicalEdge):
            pass
    return out


@dataclass(frozen=True)
class Term:
    coef: Scalar
    diagram: MorseWord
    unit: complex = 1  # extra constant factor applied at q = i


def _t(coef, diagram, unit=1):
    if not isinstance(coef, Scalar):
        coef = Scalar.of(coef)
    return Term(coef, diagram, unit)


@dataclass(frozen=True)
class Outcome:
    relation: str
    status: str
    witness: str = ""

    @property
    def ok(self):
        return self.status == "pass"

    def to_json_obj(self):
        d = {"relation": self.relation, "status": self.status}
        if self.witness:
            d["witness"] = self.witness
        return d


def _sum_open(terms):
    out = None
    for t in terms:
        F = evaluate(t.diagram)
        if F.mat.is_zero:
            continue
        P = PMat(F.prefactor + t.coef.prefactor, F.mat.scale(t.coef.poly))
        if out is None:
            out = P
        elif out.prefactor != P.prefactor:
            raise Mismatch("open", f"prefactors {out.prefactor} and {P.prefactor} differ")
        else:
            out = PMat(out.prefactor, out.mat + P.mat)
    return out


@dataclass
class LinearRelation:
    """sum(lhs) = sum(rhs) as morphisms ("open") or on closures ("closed")."""
    name: str
    lhs: list
    rhs: list
    mode: str = "open"
    at_i: bool = False
    closers: list = field(default_factory=list)

    def _residual_terms(self):
        return list(self.lhs) + [Term(-t.coef, t.diagram, t.unit) for t in self.rhs]

    def verify(self):
        terms = self._residual_terms()
        if self.mode == "open":
            P = _sum_open(terms)
            if P is not None and not P.mat.is_zero:
                (i, j), v = sorted(P.mat.e.items())[0]
                raise Mismatch(self.name, f"entry ({i},{j}) of lhs - rhs is {v}")
            return
        for n, T in enumerate(self.closers or [None]):
            r = _sum_closed(terms, self.at_i, T)
            if r is not None and not r.is_zero:
                raise Mismatch(self.name, f"closure #{n}: lhs - rhs = {r}")


@dataclass
class CheckedRelation:
    """A relation whose sides are not linear in F (products of F' values)."""
    name: str
    check: object

    def verify(self):
        self.check()


def verify_relation(r):
    try:
        r.verify()
    except Mismatch as exc:
        return Outcome(r.name, "fail", exc.witness)
    except (Inadmissible, AtypicalEdge, ArithmeticError, ValueError) as exc:
        return Outcome(r.name, "error", f"{type(exc).__name__}: {exc}")
    return Outcome(r.name, "pass")


# closed graphs

def _digon(e, left, sign):
    """(1,1)-tangle: e splits into (left, rest) and merges back."""
    e, left = _lift(e, left)
    rest = e - left - (0 if sign > 0 else 1)
    return MorseWord((Strand(e),), [Split(0, sign, Strand(left), Strand(rest)),
                                    Merge(0, -sign, Strand(e))])


def _d_inverse(a):
    return qn(a) * qn(a + 1)


def theta_value(a, b, sign=1, variant=0):
    """F' of the theta graph with outer edges a, b, as (numerator, divisor).

    The third edge is a + b (sign +1) or a + b + 1 (sign -1); vertices carry
    opposite signs.  ``variant=1`` draws the right edge downward.
    """
    a, b = _lift(a, b)
    if sign not in (1, -1):
        raise Inadmissible(f"vertex sign {sign}")
    e = a + b + (0 if sign > 0 else 1)
    for x in (a, b, e):
        if not x.is_typical:
            raise AtypicalEdge(f"theta edge colored {x}")
    if variant:
        # right edge as a downward strand of color -1-b
        bb = b.dual()
        m = MorseWord((Strand(e),), [Split(0, sign, Strand(a), Strand(bb, False)),
                                     Merge(0, -sign, Strand(e))])
    else:
        m = _digon(e, a, sign)
    rep = validate(m)
    if not rep:
        raise Inadmissible(rep.message)
    return bracket(m), _d_inverse(e)


def _check_theta(a, b):
    def run():
        for sign, variant in product((1, -1), (0, 1)):
            x, div = theta_value(a, b, sign, variant)
            if not (x.prefactor.is_zero and x.poly == div):
                raise Mismatch("theta", f"sign {sign} variant {variant}: F' = ({x})/({div})")
    return run


def _split_pieces(a, x, y):
    """Two (1,1)-tangles on color a with internal structure."""
    a, x, y = _lift(a, x, y)
    t1 = MorseWord((Strand(a),), [Split(0, 1, Strand(x), Strand(a - x)), Cross(0, -1),
                                  Merge(0, -1, Strand(a))])
    t2 = MorseWord((Strand(a),), [Split(0, -1, Strand(y), Strand(a - y - 1)),
                                  Cross(0, 1), Cross(0, 1), Merge(0, 1, Strand(a))])
    return t1, t2


def _check_split(a, x, y, at_i):
    """Two pieces joined along a pair of edges colored b -> a and a -> b."""
    a, x, y = _lift(a, x, y)

    def run():
        # distinct cut colors: b = a - 1, pieces V(a-1) -> V(a) -> V(a-1)
        b = a - 1
        up = MorseWord((Strand(b),), [Split(0, 1, Strand(x), Strand(b - x)),
                                      Merge(0, 1, Strand(a))])
        down = MorseWord((Strand(a),), [Split(0, -1, Strand(y), Strand(a - y - 1)),
                                        Cross(0, 1), Merge(0, -1, Strand(b))])
        if not evaluate(up).mat.is_zero:
            raise Mismatch("split", "a morphism V(a-1) -> V(a) is nonzero")
        if not bracket(_stack(up, down)).is_zero:
            raise Mismatch("split", "closure with distinct cut colors is nonzero")
        # equal cut colors: with F' = d(a) <.>, the relation reads
        # <whole> = <t1><t2> generically and <a><a+1><whole> = i<2a><t1><t2> at q = i
        t1, t2 = _split_pieces(a, x, y)
        whole = bracket(_stack(t1, t2))
        prod = bracket(t1) * bracket(t2)
        if whole.prefactor != prod.prefactor:
            raise Mismatch("split", f"prefactors {whole.prefactor} and {prod.prefactor}")
        if at_i:
            lhs = specialize_q_to_i(_d_inverse(a) * whole.poly)
            rhs = GaussLaurent.i() * specialize_q_to_i(qn(2 * a) * prod.poly)
        else:
            lhs, rhs = whole.poly, prod.poly
        if lhs != rhs:
            raise Mismatch("split", f"{lhs} != {rhs}")
    return run


def _kink(a, kind=1):
    a = ColorForm.lift(a)
    return MorseWord((Strand(a),), [Cup(1, Strand(a)), Cross(0, kind), Cap(1)])


def _vertex(sign, a, b, kind=None):
    """[e] -> [a, b] by a vertex, optionally followed by a crossing."""
    a, b = _lift(a, b)
    e = a + b + (0 if sign > 0 else 1)
    sl = [Split(0, sign, Strand(a), Strand(b))]
    if kind:
        sl.append(Cross(0, kind))
    return MorseWord((Strand(e),), sl)


def _vertex_closer(sign, a, b):
    """Merge [a, b] back to the vertex's source edge."""
    a, b = _lift(a, b)
    e = a + b + (0 if sign > 0 else 1)
    return MorseWord(_strands(a, b), [Merge(0, -sign, Strand(e))])


def _close(m, closer):
    whole = m if closer is None else _stack(m, closer)
    return whole if len(whole.bottom) == 1 else _close_right(whole)


def _sum_closed(terms, at_i, closer=None):
    total, pref = None, None
    for t in terms:
        x = t.coef * bracket(_close(t.diagram, closer))
        if x.is_zero:
            continue
        if pref is not None and pref != x.prefactor:
            raise Mismatch("closed", f"prefactors {pref} and {x.prefactor} differ")
        pref = x.prefactor
        v = specialize_q_to_i(x.poly) * GaussLaurent._lift(t.unit) if at_i else x.poly
        total = v if total is None else total + v
    return total


def hopf_chain(a=None, b=None):
    """The negative Hopf link resolved by the mirrored crossing relation.

    Returns a list of (step, ok, detail).  F' values are compared through
    brackets cut on the a strand, i.e. multiplied by <a><a+1>.
    """
    a = ColorForm.lift(a if a is not None else ColorForm.var(1))
    b = ColorForm.lift(b if b is not None else ColorForm.var(2))
    da = _d_inverse(a)
    x2 = _crossing(b, a, -1)
    hopf = _close_right(_stack(_crossing(a, b, -1), x2))
    pre = Scalar.qexp(a, b, 2) * qpow(a + b)
    pieces = [
        ("I(-+)", pre * (qpow(-a) * qn(b + 1)), build_IH("I", a, b, b, a, (-1, 1)),
         Scalar.qexp(a, b, 2)),
        ("I(+-)", pre * (qpow(b + 1) * qn(a)), build_IH("I", a, b, b, a, (1, -1)),
         Scalar.qexp(a + 1, b + 1, 2)),
        ("H(-+)", pre * (-qn(a + b + 1)), build_IH("H", a, b, b, a, (-1, 1)),
         Scalar.qexp(a, b + 1, 2)),
    ]
    D = qn(a + b + 1) * qn(a) * qn(b + 1)
    steps = []
    h = bracket(hopf)
    total = None
    for name, coef, m, want in pieces:
        got = bracket(_close_right(_stack(m, x2)))
        ok = got.prefactor == want.prefactor and got.poly == want.poly * da
        steps.append((f"F'({name} closed) = {want}", ok, str(Scalar(got.prefactor, got.poly))))
        term = coef * got
        total = term if total is None else total + term
    lhs = h * D
    ok = lhs.prefactor == total.prefactor and lhs.poly == total.poly
    steps.insert(0, ("crossing expansion", ok, f"{lhs} vs {total}"))
    want = Scalar.qexp(a, b, 4) * qpow(2 * a + 2 * b + 1) * da
    ok = h.prefactor == want.prefactor and h.poly == want.poly
    steps.append(("F'(H) = q^(4ab+2a+2b) q", ok, str(h)))
    return steps


def _check_hopf():
    bad = [f"{s}: {d}" for s, ok, d in hopf_chain() if not ok]
    if bad:
        raise Mismatch("hopf-chain", "; ".join(bad))


def catalog():
    """Every relation, at generic colors a, b, c (and x, y for inner edges)."""
    a, b, c, x, y = (ColorForm.var(i) for i in range(1, 6))
    one = 1
    I = lambda *args: build_IH("I", *args)  # noqa: E731
    H = lambda *args, **kw: build_IH("H", *args, **kw)  # noqa: E731
    rels = []
    add = rels.append

    # generic q, as morphisms
    add(LinearRelation("simple:kink", [_t(one, _kink(a))],
                       [_t(Scalar.qexp(a, a + 1, -2), _identity(a))]))
    for sign in (1, -1):
        add(LinearRelation(f"simple:digon{'+' if sign > 0 else '-'}",
                           [_t(one, _digon(a, x, sign))], [_t(qn(a) * qn(a + 1), _identity(a))]))
    add(LinearRelation("simple:vertex-", [_t(one, _vertex(-1, a, b, -1))],
                       [_t(Scalar.qexp(a + 1, b + 1, 2), _vertex(-1, b, a))]))
    add(LinearRelation("simple:vertex+", [_t(one, _vertex(1, a, b, -1))],
                       [_t(Scalar.qexp(a, b, 2), _vertex(1, b, a))]))
    d1 = a + b + 1 - c
    add(LinearRelation("IH1", [_t(one, I(a, b, c, d1, (1, 1)))], [_t(one, H(a, b, c, d1, (1, 1)))]))
    d2 = a + b - 1 - c
    add(LinearRelation("IH2", [_t(qn(c - a) * qn(c - a + 1), I(a, b, c, d2, (-1, -1)))],
                       [_t(qn(a + b) * qn(a + b + 1), H(a, b, c, d2, (-1, -1)))]))
    d = a + b - c
    i1 = qn(d - b) * qn(c + 1) * qn(d + 1)
    i2 = -qn(d - b) * qn(a) * qn(b)
    h1 = -qn(a + b + 1) * qn(b) * qn(d + 1)
    h2 = qn(a + b + 1) * qn(a) * qn(c + 1)
    add(LinearRelation("IH3", [_t(i1, I(a, b, c, d, (-1, 1))), _t(i2, I(a, b, c, d, (1, -1)))],
                       [_t(h1, H(a, b, c, d, (-1, 1))), _t(h2, H(a, b, c, d, (1, -1)))]))
    for s, t in product((1, -1), repeat=2):
        dd = a + b - c + (1 if s > 0 else 0) - (1 if t < 0 else 0)
        add(LinearRelation(f"H:slicings({s:+d}{t:+d})", [_t(one, H(a, b, c, dd, (s, t)))],
                           [_t(one, H(a, b, c, dd, (s, t), variant=1))]))
    pre = Scalar.qexp(a, b, 2) * qpow(a + b)
    add(LinearRelation(
        "Tab", [_t(pre * (qn(a + b + 1) * qn(b) * qn(a + 1)), _crossing(a, b, 1))],
        [_t(qpow(b) * qn(a + 1), I(a, b, b, a, (-1, 1))),
         _t(qpow(-1 - a) * qn(b), I(a, b, b, a, (1, -1))),
         _t(-qn(a + b + 1), H(a, b, b, a, (1, -1)))]))
    add(LinearRelation(
        "Tab:mirror", [_t(qn(a + b + 1) * qn(a) * qn(b + 1), _crossing(a, b, -1))],
        [_t(pre * (qpow(-a) * qn(b + 1)), I(a, b, b, a, (-1, 1))),
         _t(pre * (qpow(b + 1) * qn(a)), I(a, b, b, a, (1, -1))),
         _t(pre * -qn(a + b + 1), H(a, b, b, a, (-1, 1)))]))
    f = qn(2 * a + 1) * qn(a) * qn(a + 1)
    add(LinearRelation(
        "Taa", [_t(Scalar.qexp(a, a + 1, 2) * f, _crossing(a, a, 1))],
        [_t(-f, _identity(a, a)),
         _t(qpow(a) * qn(a + 1), I(a, a, a, a, (-1, 1))),
         _t(qpow(-1 - a) * qn(a), I(a, a, a, a, (1, -1)))]))
    add(CheckedRelation("split", _check_split(a, x, y, at_i=False)))
    add(CheckedRelation("theta", _check_theta(a, b)))
    add(CheckedRelation("hopf-chain", _check_hopf))

    # q = i, on closures
    iu = 1j
    add(LinearRelation("Pab", [_t(qn(2 * (a + b)), _identity(a, b))],
                       [_t(one, I(a, b, a, b, (1, -1)), iu), _t(-1, I(a, b, a, b, (-1, 1)), iu)],
                       mode="closed", at_i=True, closers=_closers((a, b), (a, b))))
    add(LinearRelation("Asimple:kink", [_t(one, _kink(a))],
                       [_t(Scalar.qexp(a, a + 1, -2), _identity(a))], mode="closed", at_i=True))
    add(LinearRelation("Asimple:digon", [_t(one, _digon(a, x, 1))],
                       [_t(qn(2 * a), _identity(a), iu)], mode="closed", at_i=True))
    for sign, want in ((-1, Scalar.qexp(a + 1, b + 1, 2)), (1, Scalar.qexp(a, b, 2))):
        add(LinearRelation(f"Asimple:vertex{'+' if sign > 0 else '-'}",
                           [_t(one, _vertex(sign, a, b, -1))], [_t(want, _vertex(sign, b, a))],
                           mode="closed", at_i=True,
                           closers=[_vertex_closer(sign, b, a)]))
    add(LinearRelation("AIH1", [_t(one, I(a, b, c, d1, (1, 1)))], [_t(one, H(a, b, c, d1, (1, 1)))],
                       mode="closed", at_i=True, closers=_closers((c, d1), (a, b))))
    add(LinearRelation("AIH2", [_t(qn(2 * (c - a)), I(a, b, c, d2, (-1, -1)))],
                       [_t(qn(2 * (a + b)), H(a, b, c, d2, (-1, -1)))],
                       mode="closed", at_i=True, closers=_closers((c, d2), (a, b))))
    add(LinearRelation("AIH3", [_t(qn(2 * (a + b)), H(a, b, c, d, (1, -1)))],
                       [_t(qn(2 * d), I(a, b, c, d, (-1, 1))), _t(-qn(2 * b), I(a, b, c, d, (1, -1)))],
                       mode="closed", at_i=True, closers=_closers((c, d), (a, b))))
    add(LinearRelation("AIH4", [_t(qn(2 * (a + b)), H(a, b, c, d, (-1, 1)))],
                       [_t(qn(2 * a), I(a, b, c, d, (1, -1))), _t(-qn(2 * c), I(a, b, c, d, (-1, 1)))],
                       mode="closed", at_i=True, closers=_closers((c, d), (a, b))))
    # the printed form above fails; with the right side negated it holds
    add(LinearRelation("AIH4:negated-rhs", [_t(qn(2 * (a + b)), H(a, b, c, d, (-1, 1)))],
                       [_t(-qn(2 * a), I(a, b, c, d, (1, -1))), _t(qn(2 * c), I(a, b, c, d, (-1, 1)))],
                       mode="closed", at_i=True, closers=_closers((c, d), (a, b))))
    add(LinearRelation("ATab", [_t(Scalar.qexp(a, b, 2) * qn(2 * (a + b)), _crossing(a, b, 1), iu)],
                       [_t(one, I(a, b, b, a, (-1, 1))), _t(qpow(-2 * (a + b)), I(a, b, b, a, (1, -1)))],
                       mode="closed", at_i=True, closers=_closers((b, a), (a, b))))
    add(CheckedRelation("Asplit", _check_split(a, x, y, at_i=True)))
    return rels


def report(relations=None):
    """Outcome for every relation in ``relations`` (default: the catalog)."""
    return [verify_relation(r) for r in (relations if relations is not None else catalog())]
