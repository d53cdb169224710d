# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled term kernel.

Same contract as ``_pykernel``.  Products are accumulated in a C++ hash map
over int64 keys and coefficients; operands whose keys do not fit in 64 bits
or whose coefficients could overflow are handed to the Python kernel.
"""

from libc.stdint cimport int64_t
from libcpp.pair cimport pair
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

from sl21inv.ring import _pykernel
from sl21inv.ring._pykernel import add_into, add, scale, prune

NAME = "compiled"

cdef object _COEF_CAP = 1 << 62
cdef object _KEY_CAP = 1 << 62

ctypedef vector[pair[int64_t, int64_t]] Terms
ctypedef unordered_map[int64_t, int64_t] Poly


cdef bint _load(dict d, vector[int64_t]& keys, vector[int64_t]& coefs):
    cdef int64_t k, c
    keys.reserve(len(d))
    coefs.reserve(len(d))
    try:
        for pk, pc in d.items():
            k = pk
            c = pc
            keys.push_back(k)
            coefs.push_back(c)
    except OverflowError:
        return False
    return True


cdef object _maxabs(dict d):
    m = 0
    for c in d.values():
        if c > m:
            m = c
        elif -c > m:
            m = -c
    return m


cdef bint _fits(dict a, dict b, object sign):
    # a single output coefficient sums at most min(len) products
    bound = _maxabs(a) * _maxabs(b) * min(len(a), len(b)) * abs(sign)
    return bound < _COEF_CAP


cdef bint _product(dict a, dict b, int64_t sign, unordered_map[int64_t, int64_t]& out):
    cdef vector[int64_t] ak, ac, bk, bc
    cdef size_t i, j, n, m
    cdef int64_t ka, ca
    if not _load(a, ak, ac) or not _load(b, bk, bc):
        return False
    n = ak.size()
    m = bk.size()
    out.reserve(n * m)
    for i in range(n):
        ka = ak[i]
        ca = ac[i] * sign
        for j in range(m):
            out[ka + bk[j]] += ca * bc[j]
    return True


def mul_add_into(dict acc, dict a, dict b, sign=1):
    """acc += sign * a * b, in place.  Zero entries may be left in ``acc``."""
    cdef unordered_map[int64_t, int64_t] out
    cdef unordered_map[int64_t, int64_t].iterator it
    if not a or not b:
        return
    if not _fits(a, b, sign) or not _product(a, b, sign, out):
        _pykernel.mul_add_into(acc, a, b, sign)
        return
    get = acc.get
    it = out.begin()
    while it != out.end():
        if deref(it).second != 0:
            k = deref(it).first
            acc[k] = get(k, 0) + deref(it).second
        inc(it)


def mul(dict a, dict b):
    cdef unordered_map[int64_t, int64_t] out
    cdef unordered_map[int64_t, int64_t].iterator it
    cdef dict res
    if not a or not b:
        return {}
    if not _fits(a, b, 1) or not _product(a, b, 1, out):
        return _pykernel.mul(a, b)
    res = {}
    it = out.begin()
    while it != out.end():
        if deref(it).second != 0:
            res[deref(it).first] = deref(it).second
        inc(it)
    return res


cdef int64_t _terms(dict d, Terms& out):
    """Load ``d`` into ``out``; the largest |coefficient|, or -1 if it does not fit."""
    cdef pair[int64_t, int64_t] t
    cdef int64_t big = 0
    out.reserve(len(d))
    for k, c in d.items():
        if not (-_KEY_CAP < k < _KEY_CAP and -_COEF_CAP < c < _COEF_CAP):
            return -1
        t.first = k
        t.second = c
        out.push_back(t)
        if t.second > big:
            big = t.second
        elif -t.second > big:
            big = -t.second
    return big


cdef int64_t _load_state(dict states, unordered_map[int64_t, Poly]& cur):
    """Copy a Python state dict into ``cur``; -1 if some entry does not fit."""
    cdef Poly* target
    for key, v in states.items():
        target = &cur[key]
        for k, c in v.items():
            if not (-_KEY_CAP < k < _KEY_CAP and -_COEF_CAP < c < _COEF_CAP):
                return -1
            target[0][k] = c
    return 0


cdef dict _dump_state(unordered_map[int64_t, Poly]& cur):
    cdef unordered_map[int64_t, Poly].iterator it = cur.begin()
    cdef Poly.iterator jt
    res = {}
    while it != cur.end():
        d = {}
        jt = deref(it).second.begin()
        while jt != deref(it).second.end():
            if deref(jt).second != 0:
                d[deref(jt).first] = deref(jt).second
            inc(jt)
        if d:
            res[deref(it).first] = d
        inc(it)
    return res


cdef void _bounds(unordered_map[int64_t, Poly]& cur, int64_t* big_c, int64_t* big_k, size_t* nmax):
    cdef unordered_map[int64_t, Poly].iterator it = cur.begin()
    cdef Poly.iterator jt
    cdef int64_t c, k
    big_c[0] = 0
    big_k[0] = 0
    nmax[0] = 0
    while it != cur.end():
        if deref(it).second.size() > nmax[0]:
            nmax[0] = deref(it).second.size()
        jt = deref(it).second.begin()
        while jt != deref(it).second.end():
            c = deref(jt).second
            k = deref(jt).first
            if c < 0:
                c = -c
            if k < 0:
                k = -k
            if c > big_c[0]:
                big_c[0] = c
            if k > big_k[0]:
                big_k[0] = k
            inc(jt)
        inc(it)


def contract_all(dict states, list steps, ncol):
    """Same contract as ``_pykernel.contract_all``; the state stays in C++ maps.

    Before each step the coefficient and exponent-key bounds are checked; if
    a product could overflow 64 bits the remaining steps run in Python.
    """
    cdef unordered_map[int64_t, Poly] cur, nxt
    cdef unordered_map[int64_t, Poly].iterator it
    cdef Poly.iterator jt
    cdef unordered_map[int64_t, vector[pair[int64_t, Terms]]] ctab
    cdef vector[pair[int64_t, Terms]]* outs
    cdef pair[int64_t, Terms] entry
    cdef Poly* target
    cdef Poly* src
    cdef int64_t low, up_in, mid_out, c_ncol, key, idx, col, head, rest, sub, tail, ka, ca
    cdef int64_t big_c, big_k, got, big_t, key_t
    cdef size_t i, j, nmax, nterms
    c_ncol = ncol
    if _load_state(states, cur) < 0:
        return _pykernel.contract_all(states, steps, ncol)
    for n, (table, width, p, k_in, k_out) in enumerate(steps):
        _bounds(cur, &big_c, &big_k, &nmax)
        ctab.clear()
        big_t = 0
        key_t = 0
        nterms = 0
        ok = True
        for s, lst in table.items():
            for o, coef in lst:
                entry.first = o
                entry.second.clear()
                got = _terms(coef, entry.second)
                if got < 0:
                    ok = False
                    break
                big_t = max(big_t, got)
                nterms = max(nterms, entry.second.size())
                for j in range(entry.second.size()):
                    key_t = max(key_t, abs(entry.second[j].first))
                ctab[s].push_back(entry)
            if not ok:
                break
        # one output coefficient collects at most cur.size() * nterms * nmax products
        if (not ok or big_k >= _KEY_CAP or key_t >= _KEY_CAP
                or (<object>big_c) * big_t * max(1, cur.size()) * max(1, nterms) * max(1, nmax) >= _COEF_CAP):
            return _pykernel.contract_all(_dump_state(cur), steps[n:], ncol)
        low = 4 ** (width - p - k_in)
        up_in = low * 4 ** k_in
        mid_out = 4 ** k_out
        nxt.clear()
        it = cur.begin()
        while it != cur.end():
            key = deref(it).first
            idx = key // c_ncol
            col = key % c_ncol
            head = idx // up_in
            rest = idx % up_in
            sub = rest // low
            tail = rest % low
            if ctab.count(sub):
                outs = &ctab[sub]
                src = &deref(it).second
                for i in range(outs.size()):
                    target = &nxt[((head * mid_out + deref(outs)[i].first) * low + tail) * c_ncol + col]
                    for j in range(deref(outs)[i].second.size()):
                        ka = deref(outs)[i].second[j].first
                        ca = deref(outs)[i].second[j].second
                        jt = src.begin()
                        while jt != src.end():
                            if deref(jt).second != 0:
                                target[0][ka + deref(jt).first] += ca * deref(jt).second
                            inc(jt)
            inc(it)
        cur.swap(nxt)
    return _dump_state(cur)
