"""Packed exponent keys.

An exponent vector (e_0, e_1, ...) is stored as the integer
``sum(e_i * 2**(16*i))``.  Each e_i is a balanced 16-bit digit, so the map is
linear and injective on |e_i| <= EXP_LIMIT: adding keys adds exponent
vectors.  Up to four variables fit a signed 64-bit word.
"""

WIDTH = 16
EXP_LIMIT = (1 << (WIDTH - 1)) - 1
_HALF = 1 << (WIDTH - 1)
_MASK = (1 << WIDTH) - 1


class ExponentOverflow(OverflowError):
    """An exponent left the representable range."""


def encode(exps):
    key = 0
    for i, e in enumerate(exps):
        if e:
            if not -EXP_LIMIT <= e <= EXP_LIMIT:
                raise ExponentOverflow(f"exponent {e} out of range")
            key += e << (WIDTH * i)
    return key


def decode(key, nvars=0):
    """Exponent tuple of ``key``, padded to at least ``nvars`` entries."""
    out = []
    while key:
        d = ((key + _HALF) & _MASK) - _HALF
        out.append(d)
        key = (key - d) >> WIDTH
    if len(out) < nvars:
        out.extend([0] * (nvars - len(out)))
    return tuple(out)


def unit(i, e=1):
    """Key of the monomial x_i**e."""
    if not -EXP_LIMIT <= e <= EXP_LIMIT:
        raise ExponentOverflow(f"exponent {e} out of range")
    return e << (WIDTH * i)


def max_abs_exponent(keys):
    m = 0
    for k in keys:
        for e in decode(k):
            if e > m:
                m = e
            elif -e > m:
                m = -e
    return m
