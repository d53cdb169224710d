"""Pure-Python term kernel.

A term dict maps a packed exponent key (see ``packing``) to a nonzero
integer coefficient.  Keys add under monomial multiplication, so every
routine here is plain integer arithmetic on dict items.
"""

NAME = "python"


def mul_add_into(acc, a, b, sign=1):
    """acc += sign * a * b, in place.  Zero entries may be left in ``acc``."""
    get = acc.get
    if len(a) > len(b):
        a, b = b, a
    bitems = list(b.items())
    for ka, ca in a.items():
        if sign != 1:
            ca = ca * sign
        for kb, cb in bitems:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb


def mul(a, b):
    out = {}
    mul_add_into(out, a, b)
    return {k: c for k, c in out.items() if c}


def add_into(acc, a, sign=1):
    get = acc.get
    for k, c in a.items():
        acc[k] = get(k, 0) + sign * c


def add(a, b, sign=1):
    out = dict(a)
    add_into(out, b, sign)
    return {k: c for k, c in out.items() if c}


def scale(a, c, shift=0):
    """Multiply every coefficient by ``c`` and every key by the monomial ``shift``."""
    if not c:
        return {}
    return {k + shift: v * c for k, v in a.items()}


def prune(acc):
    return {k: c for k, c in acc.items() if c}


def contract(states, table, ncol, width, p, k_in, k_out):
    """Apply one slice operator to a state dict.

    ``states`` maps ``idx * ncol + col`` to a term dict, where ``idx`` lists
    the basis digits of the current level (base 4, leftmost digit most
    significant) and ``col`` is the input column.  ``table`` maps the k_in
    input digits at position p to a list of (output digits, term dict).
    """
    low = 4 ** (width - p - k_in)
    up_in = low * 4 ** k_in
    mid_out = 4 ** k_out
    new = {}
    get = new.get
    for key, v in states.items():
        idx, col = divmod(key, ncol)
        head, rest = divmod(idx, up_in)
        sub, tail = divmod(rest, low)
        outs = table.get(sub)
        if outs is None:
            continue
        base = head * mid_out
        for out, coef in outs:
            nk = ((base + out) * low + tail) * ncol + col
            acc = get(nk)
            if acc is None:
                acc = new[nk] = {}
            mul_add_into(acc, coef, v)
    out = {}
    for k, acc in new.items():
        acc = prune(acc)
        if acc:
            out[k] = acc
    return out


def contract_all(states, steps, ncol):
    """Apply ``contract`` for each (table, width, p, k_in, k_out) in ``steps``."""
    for table, width, p, k_in, k_out in steps:
        states = contract(states, table, ncol, width, p, k_in, k_out)
    return states
