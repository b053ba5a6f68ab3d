"""Pure-Python arithmetic kernel.

Monomials are exponent tuples; polynomials at this level are plain dicts
mapping exponent tuples to nonzero coefficients (Fraction, or int mod p when
p > 0).  Module terms are keyed by (position, exponent tuple).

The compiled kernel in `_speedups.pyx` implements the same functions; both are
interchangeable and `rescur._kernel` picks one at import time.
"""

BACKEND = "python"


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a, b):
    """True when the monomial with exponents a divides the one with b."""
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def total_deg(a):
    return sum(a)


# Sort keys: larger key means larger monomial.
def key_lex(m):
    return m


def key_grlex(m):
    return (sum(m), m)


def key_grevlex(m):
    return (sum(m), tuple(-e for e in reversed(m)))


# Negated keys for heapq (min-heap pops the largest monomial first).
def heap_lex(m):
    return tuple(-e for e in m)


def heap_grlex(m):
    return (-sum(m), tuple(-e for e in m))


def heap_grevlex(m):
    return (-sum(m), tuple(reversed(m)))


def merge_terms(ta, tb, sign, p=0):
    """Return ta + sign*tb as a fresh dict with no zero coefficients."""
    out = dict(ta)
    if p:
        for e, c in tb.items():
            v = (out.get(e, 0) + sign * c) % p
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    else:
        for e, c in tb.items():
            v = out.get(e, 0) + sign * c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def mul_terms(ta, tb, p=0):
    """Multiply two term dicts keyed by exponent tuples."""
    out = {}
    for ea, ca in ta.items():
        for eb, cb in tb.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if p:
                v %= p
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def sub_scaled(work, c, shift, terms, p=0):
    """work -= c * x^shift * terms, in place; returns keys newly inserted.

    The reduction inner loop of Buchberger/division spends nearly all its time
    here.
    """
    new_keys = []
    for e, ce in terms.items():
        key = tuple(x + y for x, y in zip(shift, e))
        if key in work:
            v = work[key] - c * ce
            if p:
                v %= p
            if v:
                work[key] = v
            else:
                del work[key]
        else:
            v = -c * ce
            if p:
                v %= p
            if v:
                work[key] = v
                new_keys.append(key)
    return new_keys


def sub_scaled_vec(work, c, shift, terms, p=0):
    """Same as sub_scaled for module terms keyed by (position, exponents)."""
    new_keys = []
    for (pos, e), ce in terms.items():
        key = (pos, tuple(x + y for x, y in zip(shift, e)))
        if key in work:
            v = work[key] - c * ce
            if p:
                v %= p
            if v:
                work[key] = v
            else:
                del work[key]
        else:
            v = -c * ce
            if p:
                v %= p
            if v:
                work[key] = v
                new_keys.append(key)
    return new_keys
