# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of :mod:`qaffine._pycore`.

Same data layout, same function set; only the dict loops are pushed
down to C.  Coefficients stay Python ints so exactness is unbounded.
"""

from math import gcd

BACKEND_NAME = "cython"


def normalize(dict terms, den):
    cdef list drop
    if not terms:
        return {}, 1
    drop = [k for k, c in terms.items() if c == 0]
    for k in drop:
        del terms[k]
    if not terms:
        return {}, 1
    if den < 0:
        den = -den
        for k in terms:
            terms[k] = -terms[k]
    g = den
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            return terms, den
    if g > 1:
        for k in terms:
            terms[k] //= g
        den //= g
    return terms, den


def add(dict at, ad, dict bt, bd):
    cdef dict out
    if not at:
        return dict(bt), bd
    if not bt:
        return dict(at), ad
    g = gcd(ad, bd)
    ma = bd // g
    mb = ad // g
    out = {}
    for k, c in at.items():
        out[k] = c * ma
    for k, c in bt.items():
        v = out.get(k, 0) + c * mb
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return normalize(out, ad * ma)


def neg(dict at, ad):
    cdef dict out = {}
    for k, c in at.items():
        out[k] = -c
    return out, ad


def mul(dict at, ad, dict bt, bd):
    cdef dict out
    cdef long er1, es1, er2, es2
    if not at or not bt:
        return {}, 1
    out = {}
    for k1, c1 in at.items():
        er1 = k1[0]
        es1 = k1[1]
        for k2, c2 in bt.items():
            er2 = k2[0]
            es2 = k2[1]
            k = (er1 + er2, es1 + es2)
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return normalize(out, ad * bd)


def scale(dict at, ad, p, q):
    cdef dict out
    if p == 0 or not at:
        return {}, 1
    out = {}
    for k, c in at.items():
        out[k] = c * p
    return normalize(out, ad * q)


def shift(dict at, ad, dr, ds):
    cdef dict out
    cdef long idr = dr, ids = ds
    if idr == 0 and ids == 0:
        return dict(at), ad
    out = {}
    for k, c in at.items():
        out[(k[0] + idr, k[1] + ids)] = c
    return out, ad


def swap_vars(dict at, ad):
    cdef dict out = {}
    for k, c in at.items():
        out[(k[1], k[0])] = c
    return out, ad
