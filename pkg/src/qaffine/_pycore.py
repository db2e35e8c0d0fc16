"""Sparse two-variable Laurent-polynomial kernels (pure-Python backend).

Shared representation (identical in the compiled twin ``_core.pyx``):

* a polynomial is a pair ``(terms, den)``: ``terms`` maps an exponent
  pair ``(er, es)`` to a nonzero integer coefficient, ``den`` is one
  positive integer denominator for the whole polynomial;
* exponents are stored in quarter units, so ``er == 6`` means
  ``r**(3/2)`` (the quarter grid is admitted defensively, half powers
  are the ones that actually occur);
* pairs are normalised: no zero coefficients, ``den > 0`` and
  ``gcd(den, *coefficients) == 1``.

Only the operations that dominate the operator suites live here; the
``Scalar`` field wrapper sits in :mod:`qaffine.scalars`.
"""

from math import gcd

BACKEND_NAME = "python"


def normalize(terms, den):
    """Strip zero terms and divide out the integer content."""
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


def add(at, ad, bt, bd):
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


def neg(at, ad):
    return {k: -c for k, c in at.items()}, ad


def mul(at, ad, bt, bd):
    if not at or not bt:
        return {}, 1
    out = {}
    for (er1, es1), c1 in at.items():
        for (er2, es2), c2 in bt.items():
            k = (er1 + er2, es1 + es2)
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return normalize(out, ad * bd)


def scale(at, ad, p, q):
    """Multiply by the rational p/q."""
    if p == 0 or not at:
        return {}, 1
    out = {k: c * p for k, c in at.items()}
    return normalize(out, ad * q)


def shift(at, ad, dr, ds):
    """Multiply by the monomial r^(dr/4) s^(ds/4)."""
    if dr == 0 and ds == 0:
        return dict(at), ad
    return {(er + dr, es + ds): c for (er, es), c in at.items()}, ad


def swap_vars(at, ad):
    """The tau involution r <-> s on exponents."""
    return {(es, er): c for (er, es), c in at.items()}, ad
