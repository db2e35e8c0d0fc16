"""Affine root-system data for the simply-laced families A, D, E6.

Everything the representation needs is tabulated here: the affine
Cartan matrix, the two-parameter pairing <i,j> = <omega_i', omega_j>
(a Laurent monomial for every entry), epsilon-coordinates of the simple
roots, the highest root theta with its fixed bracketing word, the
lattice two-cocycle, and two derived tables:

* ``cocycle``   -- eps_0 on simple roots, extended bimultiplicatively.
  On the printed table the entry for i > j reads (-r_i s_i)^(a_ij/2);
  we realise it as (-1)^a_ij * (<j,i>/<i,j>)^(1/2), which reproduces the
  printed values on chains and also covers the D-type fork pair
  (a_ij = 0 with a nontrivial pairing), where commutation of the vertex
  operators forces the value <j,i>.
* ``nu``        -- the exponent of the diagonal parameter power carried
  by the vertex operators, pinned by (rs)^nu_ij = <j,i> s^a_ij
  eps_0(i,j)^(-2).  It is symmetric and integer-valued; for A and E6 it
  vanishes identically, for D it couples the two fork tips.

Matrix entries elided in print are reconstructed from the
nearest-neighbour pattern and every entry is re-checked against
<i,j><j,i> = (rs^-1)^a_ij at build time; a violation raises instead of
being patched over.
"""

from fractions import Fraction

from .errors import QAffineError, UnsupportedType
from .scalars import ONE, Scalar

_RS_INV = (4, -4)      # rs^-1, exponents in quarter units
_R_INV = (-4, 0)
_S = (0, 4)
_ONE = (0, 0)


class LieType:
    """Simply-laced family tag: A (rank >= 2), D (rank >= 4), E (rank 6)."""

    __slots__ = ("family", "rank")

    def __init__(self, family, rank):
        self.family = family
        self.rank = int(rank)
        if family == "A":
            if not 2 <= self.rank <= 12:
                raise UnsupportedType("type A supports finite rank 2..12")
        elif family == "D":
            if not 4 <= self.rank <= 12:
                raise UnsupportedType("type D supports rank 4..12")
        elif family == "E":
            if self.rank != 6:
                raise UnsupportedType("type E is supported for rank 6 only")
        else:
            raise UnsupportedType("unknown family %r" % (family,))

    def __repr__(self):
        return "%s%d" % (self.family, self.rank)

    def __eq__(self, other):
        return (isinstance(other, LieType)
                and (self.family, self.rank) == (other.family, other.rank))


def _pairing_matrix(t):
    """Exponent pairs (quarter units) of <i,j> over the affine index set."""
    n = t.rank
    size = n + 1
    exp = {}
    for i in range(size):
        for j in range(size):
            exp[(i, j)] = _ONE
        exp[(i, i)] = _RS_INV

    if t.family == "A":
        m = size  # affine cycle 0-1-...-n-0
        for i in range(size):
            exp[(i, (i + 1) % m)] = _R_INV
            exp[((i + 1) % m, i)] = _S
        return exp

    if t.family == "D":
        for i in range(1, n - 1):        # chain 1-2-...-(n-1) plus fork base
            exp[(i, i + 1)] = _R_INV
            exp[(i + 1, i)] = _S
        exp[(n - 2, n)] = _R_INV
        exp[(n, n - 2)] = _S
        exp[(n - 1, n)] = (-4, -4)       # fork tips: (rs)^-1 / rs
        exp[(n, n - 1)] = (4, 4)
        exp[(0, 1)] = (-4, -4)
        exp[(1, 0)] = (4, 4)
        exp[(0, 2)] = _R_INV
        exp[(2, 0)] = _S
        exp[(0, n)] = (8, 8)             # (rs)^2
        exp[(n, 0)] = (-8, -8)
        return exp

    # E6: the printed 7x7 matrix, rows indexed 0..6.
    rows = [
        [(4, -4), (-4, -4), (-8, -4), (-4, -4), (4, 4), (4, 4), (4, 4)],
        [(4, 4), (4, -4), (0, 0), (-4, 0), (0, 0), (0, 0), (0, 0)],
        [(4, 8), (0, 0), (4, -4), (0, 0), (-4, 0), (0, 0), (0, 0)],
        [(4, 4), (0, 4), (0, 0), (4, -4), (-4, 0), (0, 0), (0, 0)],
        [(-4, -4), (0, 0), (0, 4), (0, 4), (4, -4), (-4, 0), (0, 0)],
        [(-4, -4), (0, 0), (0, 0), (0, 0), (0, 4), (4, -4), (-4, 0)],
        [(-4, -4), (0, 0), (0, 0), (0, 0), (0, 0), (0, 4), (4, -4)],
    ]
    for i in range(7):
        for j in range(7):
            exp[(i, j)] = rows[i][j]
    return exp


def _cartan_matrix(t):
    n = t.rank
    size = n + 1
    a = [[0] * size for _ in range(size)]
    for i in range(size):
        a[i][i] = 2

    def link(i, j):
        a[i][j] = a[j][i] = -1

    if t.family == "A":
        for i in range(size):
            link(i, (i + 1) % size)
    elif t.family == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
        link(0, 2)
    else:
        for i, j in ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (0, 2)):
            link(i, j)
    return a


def _eps_coords(t):
    n = t.rank

    def unit(k, dim):
        v = [Fraction(0)] * dim
        v[k] = Fraction(1)
        return v

    coords = {}
    if t.family == "A":
        dim = n + 1
        for i in range(1, n + 1):
            v = unit(i - 1, dim)
            v[i] -= 1
            coords[i] = tuple(v)
    elif t.family == "D":
        for i in range(1, n):
            v = unit(i - 1, n)
            v[i] -= 1
            coords[i] = tuple(v)
        v = unit(n - 2, n)
        v[n - 1] += 1
        coords[n] = tuple(v)
    else:
        half = Fraction(1, 2)
        a1 = [half, -half, -half, -half, -half, -half, -half, half]
        coords[1] = tuple(a1)
        coords[2] = tuple(unit(0, 8)[k] + unit(1, 8)[k] for k in range(8))
        pairs = {3: (1, 0), 4: (2, 1), 5: (3, 2), 6: (4, 3)}
        for i, (p, m) in pairs.items():
            v = [Fraction(0)] * 8
            v[p] += 1
            v[m] -= 1
            coords[i] = tuple(v)
    return coords


def _theta_data(t):
    n = t.rank
    if t.family == "A":
        return [1] * n, tuple(range(1, n + 1)), n + 1
    if t.family == "D":
        coeffs = [1] + [2] * (n - 3) + [1, 1]
        word = tuple(range(1, n - 1)) + (n,) + tuple(range(n - 1, 1, -1))
        return coeffs, word, 2 * n - 2
    return [1, 2, 2, 3, 2, 1], (1, 3, 4, 5, 6, 2, 4, 3, 5, 4, 2), 12


class RootSystem:
    """Immutable affine root-system datum; build via build_root_system."""

    def __init__(self, lie_type):
        t = lie_type if isinstance(lie_type, LieType) else LieType(*lie_type)
        self.lie_type = t
        self.n = t.rank
        self.index_set = tuple(range(self.n + 1))
        self.finite_index_set = tuple(range(1, self.n + 1))
        self.cartan = _cartan_matrix(t)
        self.pairing_exp = _pairing_matrix(t)
        self.eps_coords = _eps_coords(t)
        self.theta_coeffs, self.theta_word, self.coxeter_h = _theta_data(t)
        self.level_c = 1
        if t.family == "A":
            self.iso_constant_a = ONE
        elif t.family == "D":
            self.iso_constant_a = Scalar.mono(1, self.n - 2, self.n - 2)
        else:
            self.iso_constant_a = Scalar.mono(1, 4, 4)
        self._gram = self._build_gram()
        self._cocycle = self._build_cocycle()
        self._nu = self._build_nu()
        self._validate()

    # -- static data helpers -------------------------------------------

    def a(self, i, j):
        return self.cartan[i][j]

    def pairing(self, i, j):
        er, es = self.pairing_exp[(i, j)]
        return Scalar.mono(1, Fraction(er, 4), Fraction(es, 4))

    def simple_root(self, i):
        beta = [0] * self.n
        beta[i - 1] = 1
        return tuple(beta)

    def zero_point(self):
        return (0,) * self.n

    def theta(self):
        return tuple(self.theta_coeffs)

    def _build_gram(self):
        dim = len(next(iter(self.eps_coords.values())))
        g = {}
        for i in self.finite_index_set:
            for j in self.finite_index_set:
                g[(i, j)] = sum(self.eps_coords[i][k] * self.eps_coords[j][k]
                                for k in range(dim))
        return g

    def bilinear_form(self, alpha, beta):
        """Euclidean (alpha, beta) for finite lattice points."""
        total = Fraction(0)
        for i in self.finite_index_set:
            ai = alpha[i - 1]
            if not ai:
                continue
            for j in self.finite_index_set:
                bj = beta[j - 1]
                if bj:
                    total += ai * bj * self._gram[(i, j)]
        if total.denominator != 1:
            return total
        return int(total)

    def eps_pairing(self, i, beta):
        """(eps_i, beta) with eps_i the i-th orthonormal coordinate."""
        dim = len(next(iter(self.eps_coords.values())))
        if not 0 <= i - 1 < dim:
            raise QAffineError("eps index out of range")
        total = Fraction(0)
        for j in self.finite_index_set:
            bj = beta[j - 1]
            if bj:
                total += bj * self.eps_coords[j][i - 1]
        return total

    # -- lattice pairings ------------------------------------------------

    def pairing_lattice(self, beta, i):
        """<beta, i> = prod_j <j,i>^(b_j); the omega_i eigenvalue."""
        er = es = 0
        for j in self.finite_index_set:
            b = beta[j - 1]
            if b:
                pr, ps = self.pairing_exp[(j, i)]
                er += b * pr
                es += b * ps
        return Scalar.mono(1, Fraction(er, 4), Fraction(es, 4))

    def pairing_lattice_rev(self, i, beta):
        """<i, beta> = prod_j <i,j>^(b_j)."""
        er = es = 0
        for j in self.finite_index_set:
            b = beta[j - 1]
            if b:
                pr, ps = self.pairing_exp[(i, j)]
                er += b * pr
                es += b * ps
        return Scalar.mono(1, Fraction(er, 4), Fraction(es, 4))

    # -- cocycle and vertex exponent --------------------------------------

    def _build_cocycle(self):
        table = {}
        for i in self.finite_index_set:
            for j in self.finite_index_set:
                if i == j:
                    table[(i, j)] = (1, 2, 2)
                elif i < j:
                    table[(i, j)] = (1, 0, 0)
                else:
                    aij = self.a(i, j)
                    pji = self.pairing_exp[(j, i)]
                    pij = self.pairing_exp[(i, j)]
                    dr, ds = pji[0] - pij[0], pji[1] - pij[1]
                    if dr % 2 or ds % 2:
                        raise QAffineError("cocycle square root off the grid")
                    sign = -1 if aij % 2 else 1
                    table[(i, j)] = (sign, dr // 2, ds // 2)
        return table

    def cocycle(self, alpha, beta):
        """eps_0(alpha, beta), extended bimultiplicatively to Q x Q."""
        sign = 1
        er = es = 0
        for i in self.finite_index_set:
            ai = alpha[i - 1]
            if not ai:
                continue
            for j in self.finite_index_set:
                bj = beta[j - 1]
                if not bj:
                    continue
                sg, cr, cs = self._cocycle[(i, j)]
                if sg < 0 and (ai * bj) % 2:
                    sign = -sign
                er += ai * bj * cr
                es += ai * bj * cs
        return Scalar.mono(sign, Fraction(er, 4), Fraction(es, 4))

    def _build_nu(self):
        nu = {}
        for i in self.finite_index_set:
            for j in self.finite_index_set:
                sg, cr, cs = self._cocycle[(i, j)]
                pji = self.pairing_exp[(j, i)]
                mr = pji[0] - 2 * cr
                ms = pji[1] + 4 * self.a(i, j) - 2 * cs
                if mr != ms or mr % 4:
                    raise QAffineError(
                        "vertex exponent for (%d,%d) is not an integer "
                        "(rs)-power" % (i, j))
                nu[(i, j)] = mr // 4
        for i in self.finite_index_set:
            for j in self.finite_index_set:
                if nu[(i, j)] != nu[(j, i)]:
                    raise QAffineError("vertex exponent table not symmetric")
        return nu

    def nu_beta(self, i, beta):
        """Exponent of the r- (or s-) power diagonal in X_i on sector beta."""
        return sum(self._nu[(i, j)] * beta[j - 1] for j in self.finite_index_set)

    # -- bracketing words ---------------------------------------------------

    def cascade_minus(self, word):
        """Nesting parameters (Def 3.6 order, q_1 outermost) for x^-(k) nests."""
        out = []
        for m in range(len(word) - 1, 0, -1):
            er = es = 0
            for l in range(m):
                pr, ps = self.pairing_exp[(word[m], word[l])]
                er += pr
                es += ps
            out.append(Scalar.mono(1, Fraction(er, 4), Fraction(es, 4)))
        return tuple(out)

    def cascade_plus(self, word):
        """Nesting parameters (Def 3.6 order, q_last outermost) for x^+(k)."""
        out = []
        for m in range(1, len(word)):
            er = es = 0
            for l in range(m):
                pr, ps = self.pairing_exp[(word[l], word[m])]
                er += pr
                es += ps
            out.append(Scalar.mono(1, Fraction(-er, 4), Fraction(-es, 4)))
        return tuple(out)

    def theta_bracket_parameters(self, sign):
        """Cascade parameters of the fixed theta word, Def 3.6 order.

        The long tuples printed in the paper list the innermost
        parameter first; for the minus nest that is the reverse of this
        order, for the plus nest it coincides with it.
        """
        if sign == "-":
            return self.cascade_minus(self.theta_word)
        if sign == "+":
            return self.cascade_plus(self.theta_word)
        raise QAffineError("sign must be '+' or '-'")

    # -- sanity -------------------------------------------------------------

    def _validate(self):
        size = self.n + 1
        for i in range(size):
            if self.pairing_exp[(i, i)] != _RS_INV:
                raise QAffineError("diagonal pairing must be rs^-1")
            for j in range(size):
                pr, ps = self.pairing_exp[(i, j)]
                qr, qs = self.pairing_exp[(j, i)]
                a = self.a(i, j)
                if (pr + qr, ps + qs) != (4 * a, -4 * a):
                    raise QAffineError(
                        "pairing invariant fails at (%d,%d)" % (i, j))
                # tau-compatibility: tau(<i,j>) == <j,i>^-1
                if (ps, pr) != (-qr, -qs):
                    raise QAffineError(
                        "tau compatibility fails at (%d,%d)" % (i, j))
        if len(self.theta_word) != self.coxeter_h - 1:
            raise QAffineError("theta word length != h - 1")
        acc = [0] * self.n
        for i in self.theta_word:
            acc[i - 1] += 1
        if acc != list(self.theta_coeffs):
            raise QAffineError("theta word does not sum to theta")
        th = self.theta()
        if self.bilinear_form(th, th) != 2:
            raise QAffineError("(theta, theta) != 2")
        for i in self.finite_index_set:
            for j in self.finite_index_set:
                if self._gram[(i, j)] != self.a(i, j):
                    raise QAffineError("eps coordinates disagree with Cartan")
            # row/column 0 must invert the theta pairing
            if not (self.pairing(i, 0) * self.pairing_lattice_rev(i, th)).is_one():
                raise QAffineError("<i,0> <i,theta> != 1 at i=%d" % i)
            if not (self.pairing(0, i) * self.pairing_lattice(th, i)).is_one():
                raise QAffineError("<0,i> <theta,i> != 1 at i=%d" % i)

    # -- serialization --------------------------------------------------------

    def to_json(self):
        size = self.n + 1
        return {
            "family": self.lie_type.family,
            "rank": self.n,
            "cartan": [list(row) for row in self.cartan],
            "pairing": [[self.pairing(i, j).render() for j in range(size)]
                        for i in range(size)],
            "eps_coords": {str(i): [str(x) for x in self.eps_coords[i]]
                           for i in self.finite_index_set},
            "theta_coeffs": list(self.theta_coeffs),
            "theta_word": list(self.theta_word),
            "coxeter_h": self.coxeter_h,
            "iso_constant_a": self.iso_constant_a.render(),
            "level_c": self.level_c,
            "cocycle_table": {
                "%d,%d" % key: self.cocycle(self.simple_root(key[0]),
                                            self.simple_root(key[1])).render()
                for key in sorted(self._cocycle)
            },
            "vertex_exponent": {"%d,%d" % k: v for k, v in sorted(self._nu.items())},
        }


def build_root_system(lie_type):
    """Construct and validate the root-system tables for one type."""
    return RootSystem(lie_type)


def beta_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def beta_neg(a):
    return tuple(-x for x in a)


def beta_scale(c, a):
    return tuple(c * x for x in a)


def word_root(rs, word):
    """Lattice point of a bracketing word (sum of its letters)."""
    beta = [0] * rs.n
    for i in word:
        beta[i - 1] += 1
    return tuple(beta)
