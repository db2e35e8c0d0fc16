"""Truncated level-one Fock module F = S(h^-) (x) K[Q].

States are oscillator monomials prod a_i(-n) tensored with a lattice
marker e^beta.  Operator application is always exact: a mode operator
applied to a state is a finite linear combination, so the truncation
window only selects which states a suite enumerates and tests on, it
never introduces approximation.  A generous hard cap still guards
runaway compositions and raises TruncationOverflow.

Coefficients live in a pluggable ring: exact Scalars, or tuples of
rational evaluations at fixed sample points (the fast probabilistic
mode; exact mode stays the arbiter).
"""

import itertools
from fractions import Fraction

from .errors import QAffineError, TruncationOverflow
from .roots import beta_add, beta_neg
from .scalars import ONE, R, S, Scalar, qnumber

_RS = R * S
_R_MINUS_S = R - S


class FockState:
    """Oscillator multiset (sorted tuple of (i, n) pairs) with lattice tag."""

    __slots__ = ("osc", "beta", "_h")

    def __init__(self, osc, beta):
        self.osc = osc
        self.beta = beta
        self._h = hash((osc, beta))

    def __hash__(self):
        return self._h

    def __eq__(self, other):
        return self.osc == other.osc and self.beta == other.beta

    def osc_degree(self):
        return sum(n for _, n in self.osc)

    def render(self):
        if not self.osc:
            head = "1"
        else:
            parts = []
            for (i, n), grp in itertools.groupby(self.osc):
                m = len(list(grp))
                bit = "a_%d(-%d)" % (i, n)
                if m > 1:
                    bit += "^%d" % m
                parts.append(bit)
            head = " ".join(parts)
        return "%s (x) e^%s" % (head, list(self.beta))

    def __repr__(self):
        return "FockState[%s]" % self.render()


def vacuum(rs):
    return FockState((), rs.zero_point())


def state_degree(rs, state):
    norm = rs.bilinear_form(state.beta, state.beta)
    if isinstance(norm, Fraction):
        raise QAffineError("non-integral lattice norm")
    if norm % 2:
        raise QAffineError("odd lattice norm on a simply-laced root lattice")
    return state.osc_degree() + norm // 2


class Truncation:
    """Verification window: total degree cutoff plus a lattice box."""

    def __init__(self, max_osc_degree=3, beta_box=2):
        self.max_degree = int(max_osc_degree)
        self.beta_box = int(beta_box)

    def contains(self, rs, state):
        if any(abs(b) > self.beta_box for b in state.beta):
            return False
        return state_degree(rs, state) <= self.max_degree

    def __repr__(self):
        return "Truncation(degree<=%d, |b_i|<=%d)" % (self.max_degree, self.beta_box)


def _osc_multisets(colors, budget):
    """All sorted oscillator tuples with total degree <= budget."""
    pairs = [(i, n) for i in colors for n in range(1, budget + 1)]

    def rec(start, left):
        yield ()
        for idx in range(start, len(pairs)):
            i, n = pairs[idx]
            if n > left:
                continue
            for rest in rec(idx, left - n):
                yield ((i, n),) + rest
    seen = set()
    for tup in rec(0, budget):
        t = tuple(sorted(tup))
        if t not in seen:
            seen.add(t)
            yield t


def window_states(rs, trunc):
    """Deterministically ordered basis of the window."""
    box = range(-trunc.beta_box, trunc.beta_box + 1)
    out = []
    for beta in itertools.product(box, repeat=rs.n):
        norm = rs.bilinear_form(beta, beta)
        if isinstance(norm, Fraction) or norm % 2 or norm // 2 > trunc.max_degree:
            continue
        left = trunc.max_degree - norm // 2
        for osc in _osc_multisets(rs.finite_index_set, left):
            out.append(FockState(osc, beta))
    out.sort(key=lambda st: (state_degree(rs, st), st.beta, st.osc))
    return out


def heisenberg_bracket(rs, i, m, j, l):
    """[a_i(m), a_j(l)] at level one (gamma = r, gamma' = s)."""
    if m == 0 or l == 0:
        raise QAffineError("Heisenberg modes are nonzero integers")
    if m + l != 0:
        return Scalar.from_fraction(0)
    am = abs(m)
    aij = rs.a(i, j)
    if aij == 0:
        return Scalar.from_fraction(0)
    out = Scalar.mono(Fraction(1, am), Fraction(am, 2), Fraction(am, 2))
    out = out * Scalar.mono(1, Fraction(-m * aij, 2), Fraction(-m * aij, 2))
    return out * qnumber(m * aij, R, S) * qnumber(am, R, S)


# -- coefficient rings ------------------------------------------------------


class ExactCoeffs:
    """Scalar coefficients; the arbiter mode."""

    name = "exact"

    zero = Scalar.from_fraction(0)
    one = ONE

    @staticmethod
    def from_scalar(s):
        return s

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a):
        return a.is_zero()

    @staticmethod
    def render(a):
        return a.render()


class SampledCoeffs:
    """Evaluations at fixed square sample points r = u^2, s = v^2."""

    name = "sampled"

    def __init__(self, points):
        self.points = tuple((Fraction(u), Fraction(v)) for u, v in points)
        for u, v in self.points:
            if u * u == v * v:
                raise QAffineError("sample points must satisfy r != +-s")
        self.zero = (Fraction(0),) * len(self.points)
        self.one = (Fraction(1),) * len(self.points)

    def from_scalar(self, s):
        return tuple(s.eval_sqrt(u, v) for u, v in self.points)

    @staticmethod
    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def mul(a, b):
        return tuple(x * y for x, y in zip(a, b))

    @staticmethod
    def neg(a):
        return tuple(-x for x in a)

    @staticmethod
    def is_zero(a):
        return all(x == 0 for x in a)

    @staticmethod
    def render(a):
        return "[" + ", ".join(str(x) for x in a) + "]"


EXACT = ExactCoeffs()


def _partitions(m):
    """Partitions of m as sorted tuples of parts."""
    if m == 0:
        return [()]
    out = []

    def rec(left, maxpart, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for p in range(min(left, maxpart), 0, -1):
            acc.append(p)
            rec(left - p, p, acc)
            acc.pop()
    rec(m, m, [])
    return out


def _sym_factor(parts):
    f = 1
    for _, grp in itertools.groupby(parts):
        k = len(list(grp))
        for t in range(2, k + 1):
            f *= t
    return f


class FockEngine:
    """Applies mode operators with exact coefficients and caching."""

    def __init__(self, rs, trunc=None, coeffs=EXACT, hard_cap=None):
        self.rs = rs
        self.trunc = trunc or Truncation()
        self.ring = coeffs
        self.hard_cap = hard_cap if hard_cap is not None else self.trunc.max_degree + 16
        self._op_cache = {}
        self._a_coeff = {}
        self._series_coeff = {}
        self._scalar_cache = {}

    # -- scalar plumbing ---------------------------------------------------

    def map_scalar(self, s):
        return self.ring.from_scalar(s)

    def _pairing_pow(self, kind, i, beta, power):
        if kind == "omega":
            val = self.rs.pairing_lattice(beta, i)
            return val ** power
        val = self.rs.pairing_lattice_rev(i, beta)
        return val ** (-power)

    # -- elementary actions --------------------------------------------------

    def a_bracket(self, i, j, l):
        """Exact scalar [a_i(l), a_j(-l)] for l > 0, cached."""
        key = (i, j, l)
        if key not in self._a_coeff:
            self._a_coeff[key] = heisenberg_bracket(self.rs, i, l, j, -l)
        return self._a_coeff[key]

    def apply_a(self, i, l, state):
        """a_i(l) on a single state -> list of (state, exact Scalar)."""
        if l < 0:
            osc = tuple(sorted(state.osc + ((i, -l),)))
            return [(FockState(osc, state.beta), ONE)]
        out = []
        seen = set()
        for idx, (j, n) in enumerate(state.osc):
            if n != l or (j, n) in seen:
                continue
            seen.add((j, n))
            if self.rs.a(i, j) == 0:
                continue
            mult = state.osc.count((j, n))
            rest = list(state.osc)
            rest.remove((j, n))
            coeff = self.a_bracket(i, j, l) * mult
            out.append((FockState(tuple(rest), state.beta), coeff))
        return out

    def _apply_a_lin(self, i, l, lin):
        ring = self.ring
        out = {}
        for st, c in lin.items():
            for st2, sc in self.apply_a(i, l, st):
                v = ring.mul(c, self.map_scalar(sc))
                acc = out.get(st2)
                v = v if acc is None else ring.add(acc, v)
                if ring.is_zero(v):
                    out.pop(st2, None)
                else:
                    out[st2] = v
        return out

    # -- exponential series coefficients ---------------------------------------

    def series_coeff(self, side, sign, parts):
        """Scalar coefficient of one partition in E_-^sign / E_+^sign."""
        key = (side, sign, parts)
        if key in self._series_coeff:
            return self._series_coeff[key]
        coeff = Scalar.from_fraction(Fraction(1, _sym_factor(parts)))
        for n in parts:
            if side == "-":
                base = Scalar.mono(1, 0, Fraction(n, 2) if sign == "+" else Fraction(-n, 2))
                if sign == "-":
                    base = -base
            else:
                base = Scalar.mono(1, Fraction(-n, 2) if sign == "+" else Fraction(n, 2), 0)
                if sign == "+":
                    base = -base
            coeff = coeff * base / qnumber(n, R, S)
        self._series_coeff[key] = coeff
        return coeff

    def _creation_poly(self, i, sign, m, state, base_coeff):
        """Apply the degree-m part of E_-^sign(alpha_i, z)."""
        ring = self.ring
        out = {}
        for parts in _partitions(m):
            coeff = ring.mul(base_coeff, self.map_scalar(self.series_coeff("-", sign, parts)))
            osc = tuple(sorted(state.osc + tuple((i, n) for n in parts)))
            st = FockState(osc, state.beta)
            acc = out.get(st)
            coeff = coeff if acc is None else ring.add(acc, coeff)
            if ring.is_zero(coeff):
                out.pop(st, None)
            else:
                out[st] = coeff
        return out

    def _annihilation_poly(self, i, sign, n, state):
        """Apply the degree-n part of E_+^sign(alpha_i, z) to one state."""
        ring = self.ring
        out = {}
        for parts in _partitions(n):
            lin = {state: self.map_scalar(self.series_coeff("+", sign, parts))}
            for p in parts:
                lin = self._apply_a_lin(i, p, lin)
                if not lin:
                    break
            for st, c in lin.items():
                acc = out.get(st)
                c = c if acc is None else ring.add(acc, c)
                if ring.is_zero(c):
                    out.pop(st, None)
                else:
                    out[st] = c
        return out

    # -- the vertex operator modes ------------------------------------------------

    def _apply_x(self, i, sign, k, state):
        rs = self.rs
        ring = self.ring
        beta = state.beta
        alpha_pair = sum(rs.cartan[i][j] * beta[j - 1] for j in rs.finite_index_set)
        nu = rs.nu_beta(i, beta)
        eps = rs.cocycle(rs.simple_root(i), beta)
        if sign == "+":
            zpow = alpha_pair + 1
            new_beta = beta_add(beta, rs.simple_root(i))
            pref = eps * Scalar.mono(1, nu - Fraction(1, 2), 0)
        else:
            zpow = -alpha_pair + 1
            new_beta = beta_add(beta, beta_neg(rs.simple_root(i)))
            pref = eps * Scalar.mono(1, 0, nu - Fraction(1, 2))
        shift = -k - zpow      # required m - n
        pref_r = self.map_scalar(pref)
        out = {}
        for n in range(0, state.osc_degree() + 1):
            m = n + shift
            if m < 0:
                continue
            if m + state.osc_degree() - n + self._lat_deg(new_beta) > self.hard_cap:
                raise TruncationOverflow(
                    "x_%d^%s(%d) image left the hard cap on %s" % (i, sign, k, state.render()))
            killed = self._annihilation_poly(i, sign, n, state)
            for st, c in killed.items():
                mid = FockState(st.osc, new_beta)
                for st2, c2 in self._creation_poly(i, sign, m, mid, c).items():
                    v = ring.mul(c2, pref_r)
                    acc = out.get(st2)
                    v = v if acc is None else ring.add(acc, v)
                    if ring.is_zero(v):
                        out.pop(st2, None)
                    else:
                        out[st2] = v
        return out

    def _lat_deg(self, beta):
        norm = self.rs.bilinear_form(beta, beta)
        return norm // 2 if not isinstance(norm, Fraction) else 0

    def _apply_omega_mode(self, i, m, state):
        """omega_i(m): z^-m coefficient of Psi_i(z)."""
        ring = self.ring
        out = {}
        for parts in _partitions(m):
            base = (_R_MINUS_S ** len(parts)) * Fraction(1, _sym_factor(parts))
            lin = {state: self.map_scalar(base)}
            for p in parts:
                lin = self._apply_a_lin(i, p, lin)
                if not lin:
                    break
            for st, c in lin.items():
                v = ring.mul(c, self.map_scalar(self.rs.pairing_lattice(st.beta, i)))
                acc = out.get(st)
                v = v if acc is None else ring.add(acc, v)
                if ring.is_zero(v):
                    out.pop(st, None)
                else:
                    out[st] = v
        return out

    def _apply_omegap_mode(self, i, m, state):
        """omega'_i(-m): z^m coefficient of Phi_i(z)."""
        ring = self.ring
        out = {}
        for parts in _partitions(m):
            base = ((-_R_MINUS_S) ** len(parts)) * Fraction(1, _sym_factor(parts))
            coeff = ring.mul(self.map_scalar(base),
                             self.map_scalar(self.rs.pairing_lattice_rev(i, state.beta) ** -1))
            osc = tuple(sorted(state.osc + tuple((i, n) for n in parts)))
            st = FockState(osc, state.beta)
            acc = out.get(st)
            coeff = coeff if acc is None else ring.add(acc, coeff)
            if ring.is_zero(coeff):
                out.pop(st, None)
            else:
                out[st] = coeff
        return out

    # -- dispatch ------------------------------------------------------------

    def apply_key(self, key, state):
        cached = self._op_cache.get((key, state))
        if cached is not None:
            return cached
        kind = key[0]
        ring = self.ring
        if kind == "x":
            out = self._apply_x(key[1], key[2], key[3], state)
        elif kind == "a":
            out = {}
            for st, sc in self.apply_a(key[1], key[2], state):
                v = self.map_scalar(sc)
                acc = out.get(st)
                v = v if acc is None else ring.add(acc, v)
                if not ring.is_zero(v):
                    out[st] = v
        elif kind == "omega":
            val = self._pairing_pow("omega", key[1], state.beta, key[2])
            out = {state: self.map_scalar(val)}
        elif kind == "omegap":
            val = self._pairing_pow("omegap", key[1], state.beta, key[2])
            out = {state: self.map_scalar(val)}
        elif kind == "omega_mode":
            out = self._apply_omega_mode(key[1], key[2], state)
        elif kind == "omegap_mode":
            out = self._apply_omegap_mode(key[1], key[2], state)
        elif kind == "lattice":
            beta = beta_add(state.beta, key[1])
            out = {FockState(state.osc, beta): ring.one}
        elif kind == "cocycle":
            out = {state: self.map_scalar(self.rs.cocycle(key[1], state.beta))}
        elif kind == "Dr":
            d = state_degree(self.rs, state)
            out = {state: self.map_scalar(Scalar.mono(1, -d * key[1], 0))}
        elif kind == "Ds":
            d = state_degree(self.rs, state)
            out = {state: self.map_scalar(Scalar.mono(1, 0, -d * key[1]))}
        elif kind == "gamma":
            half, primed = key[1], key[2]
            s = Scalar.mono(1, 0, Fraction(half, 2)) if primed else \
                Scalar.mono(1, Fraction(half, 2), 0)
            out = {state: self.map_scalar(s)}
        elif kind == "scalar":
            out = {state: self.map_scalar(key[1])}
        else:
            raise QAffineError("unknown operator key %r" % (key,))
        self._op_cache[(key, state)] = out
        return out

    def apply_key_lin(self, key, lin):
        ring = self.ring
        out = {}
        for st, c in lin.items():
            for st2, c2 in self.apply_key(key, st).items():
                v = ring.mul(c, c2)
                acc = out.get(st2)
                v = v if acc is None else ring.add(acc, v)
                if ring.is_zero(v):
                    out.pop(st2, None)
                else:
                    out[st2] = v
        return out

    def apply_word(self, keys, state):
        """Compose operator keys right to left on a basis state."""
        lin = {state: self.ring.one}
        for key in reversed(keys):
            lin = self.apply_key_lin(key, lin)
            if not lin:
                break
        return lin

    # -- LinComb helpers -------------------------------------------------------

    def lc_sub(self, a, b):
        ring = self.ring
        out = dict(a)
        for st, c in b.items():
            acc = out.get(st)
            v = ring.neg(c) if acc is None else ring.add(acc, ring.neg(c))
            if ring.is_zero(v):
                out.pop(st, None)
            else:
                out[st] = v
        return out

    def lc_add_scaled(self, a, b, factor):
        ring = self.ring
        out = dict(a)
        for st, c in b.items():
            v = ring.mul(c, factor)
            acc = out.get(st)
            v = v if acc is None else ring.add(acc, v)
            if ring.is_zero(v):
                out.pop(st, None)
            else:
                out[st] = v
        return out

    def lc_scale(self, a, factor):
        ring = self.ring
        out = {}
        for st, c in a.items():
            v = ring.mul(c, factor)
            if not ring.is_zero(v):
                out[st] = v
        return out

    def lc_is_zero(self, a):
        return not a

    def render_lincomb(self, lin):
        if not lin:
            return "0"
        bits = []
        for st in sorted(lin, key=lambda s: (s.beta, s.osc)):
            bits.append("(%s) %s" % (self.ring.render(lin[st]), st.render()))
        return " + ".join(bits)


# -- spec-level operation wrappers ---------------------------------------------


def act_annihilate(engine, i, l, v):
    """a_i(l), l > 0, on a LinComb (formal-derivative action)."""
    if l <= 0:
        raise QAffineError("act_annihilate needs l > 0")
    return engine.apply_key_lin(("a", i, l), v)


def act_create(engine, i, l, v):
    """a_i(-l), l > 0; raises TruncationOverflow outside the window."""
    if l <= 0:
        raise QAffineError("act_create needs l > 0")
    out = engine.apply_key_lin(("a", i, -l), v)
    for st in out:
        if not engine.trunc.contains(engine.rs, st):
            raise TruncationOverflow("a_%d(-%d) left the window at %s"
                                     % (i, l, st.render()))
    return out


def act_lattice(engine, alpha, v):
    """e^alpha; raises TruncationOverflow when beta leaves the box."""
    out = engine.apply_key_lin(("lattice", tuple(alpha)), v)
    for st in out:
        if any(abs(b) > engine.trunc.beta_box for b in st.beta):
            raise TruncationOverflow("e^%s left the lattice box" % (list(alpha),))
    return out


def act_diagonal(engine, kind, params, v):
    """Diagonal actions of 5.2/5.3; z_power and eps_exp return exponent data."""
    rs = engine.rs
    if kind == "z_power":
        i = params["i"]
        return {st: sum(rs.cartan[i][j] * st.beta[j - 1] for j in rs.finite_index_set)
                for st in v}
    if kind == "eps_exp":
        i = params["i"]
        return {st: rs.eps_pairing(i, st.beta) for st in v}
    key = {
        "omega_i": lambda: ("omega", params["i"], params.get("power", 1)),
        "omega_i_prime": lambda: ("omegap", params["i"], params.get("power", 1)),
        "cocycle_eps": lambda: ("cocycle", tuple(params["alpha"])),
        "D_r": lambda: ("Dr", params.get("power", 1)),
        "D_s": lambda: ("Ds", params.get("power", 1)),
    }.get(kind)
    if key is None:
        raise QAffineError("unknown diagonal kind %r" % (kind,))
    return engine.apply_key_lin(key(), v)
