"""Exact arithmetic in Q(r^(1/4), s^(1/4)).

A :class:`Scalar` is a quotient of two sparse Laurent polynomials in r
and s whose exponents live on the quarter-integer grid (stored as ints
scaled by 4).  The ring operations are delegated to the selected kernel
backend; this module owns normalisation, the tau involution r <-> s,
quantum numbers/binomials and the canonical text rendering used in JSON
reports.

Equality is exact and never needs polynomial gcd: a == b iff
a.num * b.den - b.num * a.den is the zero polynomial.  Normalisation
still cancels what is cheap to cancel (integer and monomial content,
plus exact single-divisor division), so quotients like
(r^2 - s^2)/(r - s) come out as r + s.
"""

import re
from fractions import Fraction
from math import isqrt

from .backend import impl
from .errors import (DegenerateParameters, DivisionByZero, IndexOutOfRange,
                     ParseError, PoleAtPoint, QAffineError)

_ONE_LP = ({(0, 0): 1}, 1)


def _quarter(e):
    """Exponent as an int on the quarter grid."""
    q = Fraction(e) * 4
    if q.denominator != 1:
        raise QAffineError("exponent %r is not a quarter integer" % (e,))
    return int(q)


def _lp_is_zero(t):
    return not t[0]


def _lp_eq(a, b):
    return a[0] == b[0] and a[1] == b[1]


def _lp_min_exps(terms):
    it = iter(terms)
    er, es = next(it)
    for kr, ks in it:
        if kr < er:
            er = kr
        if ks < es:
            es = ks
    return er, es


def _lp_leading(terms):
    return max(terms)


def _divide_exact(at, ad, bt, bd):
    """Return a/b as an LP pair if b divides a exactly, else None."""
    if not at:
        return {}, 1
    # Work over Fractions on shifted (polynomial) supports.
    aoff = _lp_min_exps(at)
    boff = _lp_min_exps(bt)
    rem = {(kr - aoff[0], ks - aoff[1]): Fraction(c, ad) for (kr, ks), c in at.items()}
    div = {(kr - boff[0], ks - boff[1]): Fraction(c, bd) for (kr, ks), c in bt.items()}
    lead = max(div)
    lc = div[lead]
    quo = {}
    while rem:
        k = max(rem)
        dr, ds = k[0] - lead[0], k[1] - lead[1]
        if dr < 0 or ds < 0:
            return None
        c = rem[k] / lc
        quo[(dr, ds)] = c
        for (br, bs), bc in div.items():
            kk = (br + dr, bs + ds)
            v = rem.get(kk, 0) - c * bc
            if v:
                rem[kk] = v
            elif kk in rem:
                del rem[kk]
    den = 1
    for c in quo.values():
        den = den * c.denominator // _gcd(den, c.denominator)
    out = {}
    shift_r = aoff[0] - boff[0]
    shift_s = aoff[1] - boff[1]
    for (kr, ks), c in quo.items():
        out[(kr + shift_r, ks + shift_s)] = int(c * den)
    return impl.normalize(out, den)


def _gcd(a, b):
    from math import gcd
    return gcd(a, b)


class Scalar:
    """An element of the rational-function field in r and s."""

    __slots__ = ("nt", "nd", "dt", "dd")
    __hash__ = None

    def __init__(self, num, den=_ONE_LP, reduce=True):
        self.nt, self.nd = num
        self.dt, self.dd = den
        if _lp_is_zero((self.dt, self.dd)):
            raise DivisionByZero("zero denominator")
        if reduce:
            self._reduce()

    # -- construction ------------------------------------------------

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        if fr == 0:
            return Scalar(({}, 1), reduce=False)
        return Scalar(({(0, 0): fr.numerator}, fr.denominator), reduce=False)

    @staticmethod
    def mono(coeff, er=0, es=0):
        """coeff * r^er * s^es with quarter-integer exponents."""
        fr = Fraction(coeff)
        if fr == 0:
            return ZERO
        t = {(_quarter(er), _quarter(es)): fr.numerator}
        return Scalar((t, fr.denominator), reduce=False)

    # -- normalisation -----------------------------------------------

    def _reduce(self):
        self.nt, self.nd = impl.normalize(self.nt, self.nd)
        self.dt, self.dd = impl.normalize(self.dt, self.dd)
        if not self.nt:
            self.dt, self.dd = dict(_ONE_LP[0]), 1
            return
        if len(self.dt) == 1:
            ((er, es), c), = self.dt.items()
            t, d = impl.shift(self.nt, self.nd, -er, -es)
            self.nt, self.nd = impl.scale(t, d, self.dd, c)
            self.dt, self.dd = dict(_ONE_LP[0]), 1
            return
        if len(self.nt) <= 64 and len(self.dt) <= 16:
            q = _divide_exact(self.nt, self.nd, self.dt, self.dd)
            if q is not None:
                self.nt, self.nd = q
                self.dt, self.dd = dict(_ONE_LP[0]), 1
                return
        # Canonical quotient form: denominator anchored at exponent
        # (0,0) with positive leading coefficient.
        er, es = _lp_min_exps(self.dt)
        if er or es:
            self.dt, self.dd = impl.shift(self.dt, self.dd, -er, -es)
            self.nt, self.nd = impl.shift(self.nt, self.nd, -er, -es)
        lead = self.dt[_lp_leading(self.dt)]
        if lead < 0:
            self.nt, self.nd = impl.neg(self.nt, self.nd)
            self.dt, self.dd = impl.neg(self.dt, self.dd)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.nt

    def is_one(self):
        return _lp_eq(impl.mul(self.nt, self.nd, _ONE_LP[0], 1),
                      (self.dt, self.dd))

    def is_monomial(self):
        return len(self.nt) == 1 and len(self.dt) == 1

    def monomial_parts(self):
        """(coeff, er, es) as Fractions; requires a monomial scalar."""
        if not self.is_monomial():
            raise QAffineError("not a monomial: %s" % self)
        ((nr, ns), nc), = self.nt.items()
        ((dr, ds), dc), = self.dt.items()
        coeff = Fraction(nc * self.dd, self.nd * dc)
        return coeff, Fraction(nr - dr, 4), Fraction(ns - ds, 4)

    def has_quarter_powers(self):
        """True if any exponent sits strictly on the quarter grid."""
        for t in (self.nt, self.dt):
            for er, es in t:
                if er % 2 or es % 2:
                    return True
        return False

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if _lp_eq((self.dt, self.dd), (other.dt, other.dd)):
            return Scalar(impl.add(self.nt, self.nd, other.nt, other.nd),
                          (dict(self.dt), self.dd))
        n1 = impl.mul(self.nt, self.nd, other.dt, other.dd)
        n2 = impl.mul(other.nt, other.nd, self.dt, self.dd)
        return Scalar(impl.add(*n1, *n2),
                      impl.mul(self.dt, self.dd, other.dt, other.dd))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(impl.neg(self.nt, self.nd), (dict(self.dt), self.dd),
                      reduce=False)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return Scalar(impl.mul(self.nt, self.nd, other.nt, other.nd),
                      impl.mul(self.dt, self.dd, other.dt, other.dd))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverting zero")
        return Scalar((dict(self.dt), self.dd), (dict(self.nt), self.nd))

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise DivisionByZero("dividing by zero scalar")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise QAffineError("scalar powers must be integers")
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        lhs = impl.mul(self.nt, self.nd, other.dt, other.dd)
        rhs = impl.mul(other.nt, other.nd, self.dt, self.dd)
        return _lp_eq(lhs, rhs)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    # -- involution and evaluation --------------------------------------

    def tau(self):
        """Swap r and s (a field automorphism, an involution)."""
        return Scalar(impl.swap_vars(self.nt, self.nd),
                      impl.swap_vars(self.dt, self.dd))

    def sqrt_monomial(self):
        """Square root of a monomial with square rational coefficient."""
        coeff, er, es = self.monomial_parts()
        if coeff < 0:
            raise QAffineError("negative monomial has no real square root")
        num, den = coeff.numerator, coeff.denominator
        rn, rd = isqrt(num), isqrt(den)
        if rn * rn != num or rd * rd != den:
            raise QAffineError("coefficient %s is not a rational square" % coeff)
        return Scalar.mono(Fraction(rn, rd), er / 2, es / 2)

    def eval_sqrt(self, u, v):
        """Evaluate at r = u^2, s = v^2 (so half powers are rational)."""
        u, v = Fraction(u), Fraction(v)
        num = _lp_eval(self.nt, self.nd, u, v)
        den = _lp_eval(self.dt, self.dd, u, v)
        if den == 0:
            raise PoleAtPoint("denominator vanishes at r=%s^2, s=%s^2" % (u, v))
        return num / den

    # -- rendering -------------------------------------------------------

    def render(self):
        num = _render_poly(self.nt, self.nd)
        if _lp_eq((self.dt, self.dd), _ONE_LP):
            return num
        return "(%s) / (%s)" % (num, _render_poly(self.dt, self.dd))

    def __repr__(self):
        return "Scalar[%s]" % self.render()

    __str__ = render


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_fraction(x)
    raise TypeError("cannot coerce %r to Scalar" % (x,))


def _lp_eval(terms, den, u, v):
    total = Fraction(0)
    for (er, es), c in terms.items():
        if er % 2 or es % 2:
            raise QAffineError("quarter power cannot be evaluated at a square point")
        total += Fraction(c) * u ** (er // 2) * v ** (es // 2)
    return total / den


def _render_exp(e4):
    f = Fraction(e4, 4)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def _render_poly(terms, den):
    if not terms:
        return "0"
    parts = []
    for (er, es) in sorted(terms, reverse=True):
        c = Fraction(terms[(er, es)], den)
        bit = str(c)
        if er:
            bit += " * r^(%s)" % _render_exp(er)
        if es:
            bit += " * s^(%s)" % _render_exp(es)
        parts.append(bit)
    return " + ".join(parts)


ZERO = Scalar(({}, 1), reduce=False)
ONE = Scalar.mono(1)
R = Scalar.mono(1, 1, 0)
S = Scalar.mono(1, 0, 1)


def scalar_arith(a, b, op):
    """Field arithmetic dispatcher: op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise QAffineError("unknown op %r" % op)


def tau_scalar(a):
    return a.tau()


def qnumber(n, u, v):
    """[n]_{u,v} = (u^n - v^n)/(u - v), exact."""
    if (u - v).is_zero():
        raise DegenerateParameters("qnumber needs u != v")
    if n == 0:
        return ZERO
    if n < 0:
        return -((u * v) ** n) * qnumber(-n, u, v)
    out = ZERO
    for k in range(n):
        out = out + u ** k * v ** (n - 1 - k)
    return out


def qfactorial(n, u, v):
    out = ONE
    for k in range(2, n + 1):
        out = out * qnumber(k, u, v)
    return out


def qbinomial(m, n, u, v):
    """Gaussian binomial [m choose n]_{u,v}."""
    if not 0 <= n <= m:
        raise IndexOutOfRange("qbinomial needs 0 <= n <= m, got (%s, %s)" % (m, n))
    out = ONE
    for k in range(1, n + 1):
        out = out * qnumber(m - n + k, u, v) / qnumber(k, u, v)
    return out


def _exact_sqrt(fr):
    fr = Fraction(fr)
    if fr < 0:
        return None
    rn, rd = isqrt(fr.numerator), isqrt(fr.denominator)
    if rn * rn == fr.numerator and rd * rd == fr.denominator:
        return Fraction(rn, rd)
    return None


def eval_at_point(a, r0, s0):
    """Evaluate at rational r0, s0 admitting exact square roots."""
    u = _exact_sqrt(r0)
    v = _exact_sqrt(s0)
    if u is None or v is None:
        raise QAffineError("r0, s0 must be exact rational squares; "
                           "use eval_sqrt with explicit square roots")
    return a.eval_sqrt(u, v)


# -- parsing (inverse of render) ------------------------------------------

_TOKEN = re.compile(r"\s*(-?\d+/\d+|-?\d+|[rs]|\^|\(|\)|\*|\+|/|-)")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("bad scalar text at offset %d: %r" % (pos, text[pos:pos + 12]))
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        t = self.peek()
        if t is None or (expect is not None and t != expect):
            raise ParseError("expected %r, got %r" % (expect, t))
        self.i += 1
        return t

    def parse_scalar(self):
        if self.peek() == "(":
            save = self.i
            self.take("(")
            num = self.parse_poly()
            self.take(")")
            if self.peek() == "/":
                self.take("/")
                self.take("(")
                den = self.parse_poly()
                self.take(")")
                return num / den
            self.i = save
        out = self.parse_poly()
        if self.peek() is not None:
            raise ParseError("trailing tokens: %r" % self.toks[self.i:])
        return out

    def parse_poly(self):
        out = self.parse_term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                out = out + self.parse_term()
            else:
                out = out - self.parse_term()
        return out

    def parse_term(self):
        sign = 1
        while self.peek() == "-":
            self.take()
            sign = -sign
        out = Scalar.from_fraction(sign)
        seen = False
        while True:
            t = self.peek()
            if t in ("r", "s"):
                out = out * self.parse_power()
            elif t is not None and (t[0].isdigit() or (t[0] == "-" and len(t) > 1)):
                out = out * Scalar.from_fraction(Fraction(self.take()))
            elif t == "*" and seen is not False:
                self.take()
                continue
            elif not seen:
                raise ParseError("empty term near %r" % (t,))
            else:
                return out
            seen = True

    def parse_power(self):
        var = self.take()
        e = Fraction(1)
        if self.peek() == "^":
            self.take("^")
            self.take("(")
            num = Fraction(self.take())
            self.take(")")
            e = num
        if var == "r":
            return Scalar.mono(1, e, 0)
        return Scalar.mono(1, 0, e)


def parse_scalar(text):
    """Parse the canonical rendering back into a Scalar."""
    return _Parser(_tokenize(text)).parse_scalar()
