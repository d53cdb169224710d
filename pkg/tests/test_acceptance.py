"""End-to-end acceptance criteria, each with its own time limit.

Run ``pytest tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``;
both print one PASS/FAIL line per criterion.
"""

import sys
import time

import pytest

from sl21inv import qrep
from sl21inv.diagram import (BraidWord, Cap, Cross, Cup, MorseWord, Strand,
                             load_fixture)
from sl21inv.evaluate import (ConwayKnot, KnotValue, bracket, conway, evaluate,
                              f_prime, m_invariant)
from sl21inv.properties import standard_suite
from sl21inv.ring import ColorForm, GaussLaurent, LaurentPoly, qn
from sl21inv.skein import report

a, b, c = (ColorForm.var(i) for i in (1, 2, 3))
q = LaurentPoly.var(0)
q1, q2, q3 = (LaurentPoly.var(i) for i in (1, 2, 3))


def delta(x):
    return (x - x ** -1) * (q * x - (q * x) ** -1)


def c1_sprime():
    m = MorseWord((Strand(a),), [Cup(1, Strand(b)), Cross(0, 1), Cross(0, 1), Cap(1)])
    got = bracket(m)
    want = qrep.sprime_oracle(qrep.Weight(0, b), qrep.Weight(0, a))
    return got == want, f"bracket = {got}"


def c2_yang_baxter():
    S = (Strand(a), Strand(b), Strand(c))
    lhs = evaluate(MorseWord(S, [Cross(0, 1), Cross(1, 1), Cross(0, 1)]))
    rhs = evaluate(MorseWord(S, [Cross(1, 1), Cross(0, 1), Cross(1, 1)]))
    return lhs == rhs, f"{lhs.mat.rows}x{lhs.mat.cols}, {len(lhs.mat.e)} nonzero entries"


def c3_unknot():
    M = m_invariant(BraidWord(1))
    want = KnotValue(LaurentPoly.one(), (q1 - q1 ** -1) * (q1 * q - q1 ** -1 * q ** -1))
    return M == want, f"{M.numerator} / ({M.denominator})"


def c4_hopf():
    hopf = load_fixture("hopf").braid
    M = m_invariant(hopf)
    cut = f_prime(hopf, 1) == f_prime(hopf, 2)
    return M == q and M.variables() == {0} and cut, f"M = {M}, cuts agree: {cut}"


def c5_trefoil():
    P = m_invariant(load_fixture("trefoil").braid).split_m0()
    return P == q ** 2 * (q * q1 ** 2 + (q * q1 ** 2) ** -1), f"M = M0 + {P}"


def c6_borromean():
    M = m_invariant(load_fixture("borromean").braid)
    return M == delta(q) + delta(q1) * delta(q2) * delta(q3), f"{len(M.terms())} terms"


def c7_conway():
    u = conway(BraidWord(1))
    h = conway(load_fixture("hopf").braid)
    z = conway(load_fixture("l9n27").braid)
    ok = (u == ConwayKnot(GaussLaurent(1), q1 ** 2 - q1 ** -2)
          and h == GaussLaurent(-1) and z.is_zero)
    return ok, f"unknot {u.numerator}/({u.denominator}), Hopf {h}, L9n27 {z}"


def _mirror_swap12(p):
    # q -> 1/q, q_k -> 1/q_k, and q_1 <-> q_2
    return p.remap({0: (-1,), 1: (0, 0, -1), 2: (0, -1), 3: (0, 0, 0, -1)})


def c8_l9n27():
    M = m_invariant(load_fixture("l9n27").braid)
    want = qn(ColorForm(1)) * qn(ColorForm(2)) * (q ** 2 * q2 ** 2 + q2 ** -2 - 2)
    if M == want:
        return True, "exact match"
    note = ("matches after mirroring and swapping components 1, 2"
            if _mirror_swap12(M) == want else "no match up to mirror")
    return False, f"M = {M}; {note}"


def c9_skein():
    outs = report()
    bad = [f"{o.relation} ({o.witness})" for o in outs if not o.ok]
    return not bad, f"{len(outs) - len(bad)}/{len(outs)} pass" + (f"; failing: {'; '.join(bad)}" if bad else "")


def c10_properties():
    checks = standard_suite()
    bad = [f"{ch.name}: {ch.detail}" for ch in checks if not ch.ok]
    return not bad, f"{len(checks) - len(bad)}/{len(checks)} pass" + (f"; {'; '.join(bad)}" if bad else "")


CRITERIA = [
    (1, "S' oracle equivalence", 5, c1_sprime),
    (2, "Yang-Baxter, three colors", 60, c2_yang_baxter),
    (3, "M(unknot)", 1, c3_unknot),
    (4, "M(negative Hopf) = q, cut independence", 5, c4_hopf),
    (5, "M(trefoil)", 5, c5_trefoil),
    (6, "M(Borromean)", 120, c6_borromean),
    (7, "Conway specialization", 60, c7_conway),
    (8, "M(L9n27)", 600, c8_l9n27),
    (9, "skein suite", 600, c9_skein),
    (10, "property suite", 600, c10_properties),
]


def run_criterion(fn, limit):
    t = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t
    if elapsed > limit:
        ok, detail = False, f"{detail}; took {elapsed:.2f} s, limit {limit} s"
    return ok, elapsed, detail


def line(num, title, ok, elapsed, detail):
    return f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title} [{elapsed:.2f} s] {detail}"


@pytest.mark.parametrize("num,title,limit,fn", CRITERIA, ids=[f"c{n}" for n, *_ in CRITERIA])
def test_criterion(num, title, limit, fn, capsys):
    ok, elapsed, detail = run_criterion(fn, limit)
    with capsys.disabled():
        print("\n" + line(num, title, ok, elapsed, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, title, limit, fn in CRITERIA:
        ok, elapsed, detail = run_criterion(fn, limit)
        failed += not ok
        print(line(num, title, ok, elapsed, detail))
    sys.exit(1 if failed else 0)
