# cython: language_level=3
"""Compiled arithmetic kernel; mirrors rescur._kernel_py exactly.

Coefficients stay generic Python objects (Fraction, or small ints mod p), so
the win comes from tight loops over exponent tuples and dict traffic, not from
native arithmetic.
"""

BACKEND = "compiled"


cdef inline tuple _tuple_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (<object>a[i]) + (<object>b[i])
    return tuple(out)


def exp_add(tuple a, tuple b):
    return _tuple_add(a, b)


def exp_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (<object>a[i]) - (<object>b[i])
    return tuple(out)


def exp_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if (<object>a[i]) > (<object>b[i]):
            return False
    return True


def exp_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] if (<object>a[i]) > (<object>b[i]) else b[i]
    return tuple(out)


def total_deg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef object s = 0
    for i in range(n):
        s += <object>a[i]
    return s


def key_lex(tuple m):
    return m


def key_grlex(tuple m):
    return (total_deg(m), m)


def key_grevlex(tuple m):
    cdef Py_ssize_t i, n = len(m)
    cdef list rev = [0] * n
    for i in range(n):
        rev[i] = -(<object>m[n - 1 - i])
    return (total_deg(m), tuple(rev))


def heap_lex(tuple m):
    cdef Py_ssize_t i, n = len(m)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = -(<object>m[i])
    return tuple(out)


def heap_grlex(tuple m):
    return (-total_deg(m), heap_lex(m))


def heap_grevlex(tuple m):
    cdef Py_ssize_t i, n = len(m)
    cdef list rev = [0] * n
    for i in range(n):
        rev[i] = m[n - 1 - i]
    return (-total_deg(m), tuple(rev))


def merge_terms(dict ta, dict tb, object sign, long p=0):
    cdef dict out = dict(ta)
    cdef object e, c, v
    for e, c in tb.items():
        v = out.get(e, 0) + sign * c
        if p:
            v = v % p
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def mul_terms(dict ta, dict tb, long p=0):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, e, v
    for ea, ca in ta.items():
        for eb, cb in tb.items():
            e = _tuple_add(<tuple>ea, <tuple>eb)
            v = out.get(e, 0) + ca * cb
            if p:
                v = v % p
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def sub_scaled(dict work, object c, tuple shift, dict terms, long p=0):
    cdef list new_keys = []
    cdef object e, ce, v
    cdef tuple key
    for e, ce in terms.items():
        key = _tuple_add(shift, <tuple>e)
        if key in work:
            v = work[key] - c * ce
            if p:
                v = v % p
            if v:
                work[key] = v
            else:
                del work[key]
        else:
            v = -c * ce
            if p:
                v = v % p
            if v:
                work[key] = v
                new_keys.append(key)
    return new_keys


def sub_scaled_vec(dict work, object c, tuple shift, dict terms, long p=0):
    cdef list new_keys = []
    cdef object k, ce, v
    cdef tuple key
    for k, ce in terms.items():
        key = ((<tuple>k)[0], _tuple_add(shift, <tuple>(<tuple>k)[1]))
        if key in work:
            v = work[key] - c * ce
            if p:
                v = v % p
            if v:
                work[key] = v
            else:
                del work[key]
        else:
            v = -c * ce
            if p:
                v = v % p
            if v:
                work[key] = v
                new_keys.append(key)
    return new_keys
