"""Free nilpotent groups in Malcev coordinates.

An element of the free c-step nilpotent group N_{r,c} is a product
a_1^{x_1} a_2^{x_2} ... a_k^{x_k} over the polycyclic generating
sequence a_1, ..., a_k of iterated group commutators shaped by the Hall
basis (a_1 = a, a_2 = b, a_3 = [a,b], ...), with integer exponents as
the coordinates.  Arithmetic runs inside the rational Malcev completion,
realized concretely in the degree-truncated free associative algebra:
group elements are exponential series, multiplication is the truncated
series product, powers and roots are exp(t * log), and normal-form
coordinates are peeled off degree by degree.  All coefficients are exact
rationals; coordinates of group elements are exact integers.

The same machinery run with polynomial coefficients yields the power
polynomials q_i with u^m = prod a_i^(m x_i + q_i(x_1..x_{i-1}, m)), and
the padding exponents f(n, c) with x^n y^f = (x z)^n.
"""

import json
from fractions import Fraction
from math import lcm

from .freelie import build_hall_basis
from .mvpoly import MPoly

_GROUP_CACHE = {}
_PADDING_CACHE = {}


# ---------------------------------------------------------------------------
# truncated free associative series with generic coefficients
# ---------------------------------------------------------------------------

def _ser_mul(a, b, c):
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            if len(wa) + len(wb) > c:
                continue
            w = wa + wb
            val = ca * cb
            cur = out.get(w)
            out[w] = val if cur is None else cur + val
    return {w: v for w, v in out.items() if v}

def _ser_add(a, b, scale=1):
    out = dict(a)
    for w, v in b.items():
        cur = out.get(w)
        nv = scale * v if cur is None else cur + scale * v
        if nv:
            out[w] = nv
        else:
            out.pop(w, None)
    return out

def _ser_scale(a, s):
    if not s:
        return {}
    return {w: s * v for w, v in a.items()}

def _ser_exp(ell, c):
    """exp of a series with zero constant term."""
    assert () not in ell
    out = {(): Fraction(1)}
    term = {(): Fraction(1)}
    fact = 1
    for j in range(1, c + 1):
        term = _ser_mul(term, ell, c)
        if not term:
            break
        fact *= j
        out = _ser_add(out, _ser_scale(term, Fraction(1, fact)))
    return out

def _ser_log(e, c):
    """log of a series with constant term 1."""
    n = dict(e)
    one = n.pop((), None)
    assert one == 1
    out = {}
    term = {(): Fraction(1)}
    for j in range(1, c + 1):
        term = _ser_mul(term, n, c)
        if not term:
            break
        out = _ser_add(out, _ser_scale(term, Fraction((-1) ** (j - 1), j)))
    return out

def _ser_inv(e, c):
    """Inverse of a series with constant term 1."""
    n = dict(e)
    one = n.pop((), None)
    assert one == 1
    out = {(): Fraction(1)}
    term = {(): Fraction(1)}
    for j in range(1, c + 1):
        term = _ser_mul(term, n, c)
        if not term:
            break
        out = _ser_add(out, term, scale=(-1) ** j)
    return out

def _ser_degree_part(e, d):
    return {w: v for w, v in e.items() if len(w) == d}


class FreeNilpotentGroup:
    """Ambient N_{r,c} with its Malcev coordinate system."""

    def __init__(self, r, c):
        if r < 1 or c < 1:
            raise ValueError("need r >= 1 and c >= 1")
        self.r = r
        self.c = c
        self.table = build_hall_basis(r, c)
        self.basis = []  # (degree, local) in peel order
        for d in range(1, c + 1):
            for local in range(self.table.dim(d)):
                self.basis.append((d, local))
        self.k = len(self.basis)
        self._lie_series = {}
        self._log_series = {}
        self._solvers = {}
        self.identity_coords = (0,) * self.k

    # -- basis series ------------------------------------------------------

    def lie_series(self, d, local):
        """The Hall word as a Lie element of the associative algebra (ints)."""
        key = (d, local)
        cached = self._lie_series.get(key)
        if cached is None:
            w = self.table.words(d)[local]
            if w.left is None:
                cached = {(w.tree,): 1}
            else:
                a = self.lie_series(w.left.degree, w.left.local)
                b = self.lie_series(w.right.degree, w.right.local)
                cached = _ser_add(_ser_mul(a, b, self.c),
                                  _ser_mul(b, a, self.c), scale=-1)
            self._lie_series[key] = cached
        return cached

    def log_basis(self, d, local):
        """log of the basis group element a_j (iterated group commutator)."""
        key = (d, local)
        cached = self._log_series.get(key)
        if cached is None:
            w = self.table.words(d)[local]
            if w.left is None:
                cached = {k: Fraction(v) for k, v in self.lie_series(d, local).items()}
            else:
                u = _ser_exp(self.log_basis(w.left.degree, w.left.local), self.c)
                v = _ser_exp(self.log_basis(w.right.degree, w.right.local), self.c)
                comm = _ser_mul(_ser_mul(_ser_inv(u, self.c), _ser_inv(v, self.c),
                                         self.c),
                                _ser_mul(u, v, self.c), self.c)
                cached = _ser_log(comm, self.c)
            self._log_series[key] = cached
        return cached

    # -- Lie coordinate extraction -----------------------------------------

    def _solver(self, d):
        """Pivot monomials and inverse matrix expressing degree-d Lie coords."""
        cached = self._solvers.get(d)
        if cached is not None:
            return cached
        h = self.table.dim(d)
        cols = [self.lie_series(d, local) for local in range(h)]
        monos = sorted({w for col in cols for w in col})
        rows = [[Fraction(col.get(w, 0)) for col in cols] for w in monos]
        pivots = []
        used = set()
        work = [row[:] for row in rows]
        for j in range(h):
            pick = None
            for i, row in enumerate(work):
                if i not in used and row[j]:
                    pick = i
                    break
            assert pick is not None, "hall expansions are independent"
            used.add(pick)
            pivots.append(pick)
            inv = 1 / work[pick][j]
            work[pick] = [x * inv for x in work[pick]]
            for i, row in enumerate(work):
                if i != pick and row[j]:
                    f = row[j]
                    work[i] = [x - f * y for x, y in zip(row, work[pick])]
        sub = [[rows[p][j] for j in range(h)] for p in pivots]
        inverse = _invert_fraction_matrix(sub)
        solver = ([monos[p] for p in pivots], inverse, cols, monos)
        self._solvers[d] = solver
        return solver

    def lie_coordinates(self, series, d):
        """Coordinates of the degree-d part of a Lie series in the Hall basis."""
        pivot_monos, inverse, cols, monos = self._solver(d)
        zero = Fraction(0)
        v = [series.get(w, zero) for w in pivot_monos]
        coords = [sum((row[i] * v[i] for i in range(len(v))), start=zero)
                  for row in inverse]
        # defensive: the degree-d part must be exactly the claimed combination
        recon = {}
        for x, col in zip(coords, cols):
            if x:
                recon = _ser_add(recon, _ser_scale(col, x))
        if recon != {w: val for w, val in _ser_degree_part(series, d).items() if val}:
            raise AssertionError("degree part is not a Lie element")
        return coords

    # -- coordinates <-> series ---------------------------------------------

    def series_from_coords(self, coords):
        out = {(): Fraction(1)}
        for (dl, x) in zip(self.basis, coords):
            if not x:
                continue
            log_a = self.log_basis(*dl)
            out = _ser_mul(out, _ser_exp(_ser_scale(log_a, _as_scalar(x)), self.c),
                           self.c)
        return out

    def peel(self, series):
        """Normal-form exponents of a group series, degree by degree."""
        w = series
        coords = []
        pos = 0
        for d in range(1, self.c + 1):
            part = _ser_degree_part(w, d)
            xs = self.lie_coordinates(part, d)
            for local, x in enumerate(xs):
                if x:
                    log_a = self.log_basis(d, local)
                    w = _ser_mul(_ser_exp(_ser_scale(log_a, -x), self.c), w, self.c)
            coords.extend(xs)
            pos += len(xs)
        if w != {(): Fraction(1)}:
            raise AssertionError("peel left a non-identity residue")
        return coords

    # -- group operations on raw coordinate tuples ---------------------------

    def multiply_coords(self, a, b):
        prod = _ser_mul(self.series_from_coords(a), self.series_from_coords(b),
                        self.c)
        return _as_int_tuple(self.peel(prod))

    def inverse_coords(self, a):
        inv = _ser_inv(self.series_from_coords(a), self.c)
        return _as_int_tuple(self.peel(inv))

    def power_coords(self, a, n):
        log = _ser_log(self.series_from_coords(a), self.c)
        powered = _ser_exp(_ser_scale(log, Fraction(n)), self.c)
        return _as_int_tuple(self.peel(powered))

    def root_coords(self, a, s):
        log = _ser_log(self.series_from_coords(a), self.c)
        rooted = _ser_exp(_ser_scale(log, Fraction(1, s)), self.c)
        coords = self.peel(rooted)
        if any(x.denominator != 1 for x in coords):
            return None
        return tuple(x.numerator for x in coords)

    # -- elements ------------------------------------------------------------

    def element(self, coords):
        return MalcevElement(self, tuple(int(x) for x in coords))

    @property
    def identity(self):
        return MalcevElement(self, self.identity_coords)

    def generator(self, i):
        if not 0 <= i < self.r:
            raise ValueError(f"generator index {i} outside 0..{self.r - 1}")
        coords = [0] * self.k
        coords[i] = 1
        return MalcevElement(self, tuple(coords))

    def generators(self):
        return [self.generator(i) for i in range(self.r)]

    def __repr__(self):
        return f"FreeNilpotentGroup(r={self.r}, c={self.c})"


def _as_scalar(x):
    if isinstance(x, (int,)):
        return Fraction(x)
    return x


def _as_int_tuple(fracs):
    out = []
    for x in fracs:
        if x.denominator != 1:
            raise AssertionError("group arithmetic left the integer lattice")
        out.append(x.numerator)
    return tuple(out)


def _invert_fraction_matrix(rows):
    n = len(rows)
    work = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0)
                                          for j in range(n)]
            for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(i for i in range(col, n) if work[i][col])
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


def free_nilpotent_group(r, c):
    """Shared immutable ambient for N_{r,c}."""
    key = (r, c)
    grp = _GROUP_CACHE.get(key)
    if grp is None:
        grp = FreeNilpotentGroup(r, c)
        _GROUP_CACHE[key] = grp
    return grp


class MalcevElement:
    """Group element as its integer Malcev coordinate vector."""

    __slots__ = ("ambient", "coords", "_series")

    def __init__(self, ambient, coords):
        if len(coords) != ambient.k:
            raise ValueError(f"need {ambient.k} coordinates, got {len(coords)}")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "coords", tuple(int(x) for x in coords))
        object.__setattr__(self, "_series", None)

    def __setattr__(self, name, value):
        raise AttributeError("MalcevElement is immutable")

    def _check_same(self, other):
        amb = self.ambient
        if not isinstance(other, MalcevElement) or other.ambient is not amb:
            if (isinstance(other, MalcevElement)
                    and (other.ambient.r, other.ambient.c) == (amb.r, amb.c)):
                return
            raise ValueError("elements live in different ambient groups")

    def series(self):
        if self._series is None:
            object.__setattr__(self, "_series",
                               self.ambient.series_from_coords(self.coords))
        return self._series

    def __mul__(self, other):
        self._check_same(other)
        return MalcevElement(self.ambient,
                             self.ambient.multiply_coords(self.coords, other.coords))

    def inverse(self):
        return MalcevElement(self.ambient, self.ambient.inverse_coords(self.coords))

    def __pow__(self, n):
        if n == 0:
            return self.ambient.identity
        return MalcevElement(self.ambient, self.ambient.power_coords(self.coords, n))

    @property
    def is_identity(self):
        return all(x == 0 for x in self.coords)

    def in_lower_central(self, d):
        """True when the element lies in gamma_d (coordinates of degree < d vanish)."""
        return all(x == 0 for (deg, _), x in zip(self.ambient.basis, self.coords)
                   if deg < d)

    def abelianized(self):
        """Images of the element in the free abelianization Z^r."""
        return self.coords[:self.ambient.r]

    def __eq__(self, other):
        return (isinstance(other, MalcevElement)
                and (self.ambient.r, self.ambient.c) ==
                    (other.ambient.r, other.ambient.c)
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.ambient.r, self.ambient.c, self.coords))

    def __repr__(self):
        return f"MalcevElement(r={self.ambient.r}, c={self.ambient.c}, {list(self.coords)})"

    def to_json(self):
        return json.dumps({"rank": self.ambient.r, "class": self.ambient.c,
                           "coords": list(self.coords)}, sort_keys=True)

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        amb = free_nilpotent_group(data["rank"], data["class"])
        return amb.element(data["coords"])


def multiply(u, v):
    """Product in normal form."""
    return u * v


def power(u, n):
    """Exact n-th power, matching repeated multiplication for all ints n."""
    return u ** n


def nth_root(u, s):
    """The v with v^s = u when one exists over the integers, else None.

    Roots are unique in the torsion-free Malcev completion, so the unique
    rational solution is computed and returned exactly when all of its
    coordinates are integers.
    """
    if s < 2:
        raise ValueError("need s >= 2")
    coords = u.ambient.root_coords(u.coords, s)
    if coords is None:
        return None
    return MalcevElement(u.ambient, coords)


# ---------------------------------------------------------------------------
# power polynomial table
# ---------------------------------------------------------------------------

class PowerPolynomialTable:
    """Exact polynomials q_i with u^m = prod a_i^(m x_i + q_i(x<i, m))."""

    def __init__(self, ambient, variables, polys):
        self.ambient = ambient
        self.variables = variables
        self.polys = tuple(polys)

    def q(self, i):
        """q_i for the 1-based coordinate index i."""
        return self.polys[i - 1]

    def power_coordinates(self, coords, m):
        """Evaluate the table: coordinates of (element with coords)^m."""
        amb = self.ambient
        assign = {f"x{j + 1}": coords[j] for j in range(amb.k)}
        assign["m"] = m
        out = []
        for j in range(amb.k):
            val = m * Fraction(coords[j]) + self.polys[j].evaluate(assign)
            if val.denominator != 1:
                raise AssertionError("power table produced a non-integer")
            out.append(val.numerator)
        return tuple(out)


def build_power_table(r, c):
    """Symbolic power polynomials for N_{r,c} (q_2 = 0; q_i(m=1) = 0)."""
    amb = free_nilpotent_group(r, c)
    names = tuple(f"x{j + 1}" for j in range(amb.k)) + ("m",)
    xs = [MPoly.variable(names, f"x{j + 1}") for j in range(amb.k)]
    mv = MPoly.variable(names, "m")
    one = MPoly.constant(names, 1)
    series = {(): one}
    for (dl, x) in zip(amb.basis, xs):
        log_a = amb.log_basis(*dl)
        series = _ser_mul(series, _ser_exp(_ser_scale(log_a, x), amb.c), amb.c)
    log = _ser_log_generic(series, amb.c, one)
    powered = _ser_exp_generic(_ser_scale(log, mv), amb.c, one)
    coords = _peel_generic(amb, powered, one)
    polys = []
    for j in range(amb.k):
        q = coords[j] - mv * xs[j]
        if q.substitute({"m": 1}) != MPoly.constant(names, 0):
            raise AssertionError("q_i(m=1) must vanish")
        for later in range(j, amb.k):
            if q.uses_variable(f"x{later + 1}"):
                raise AssertionError("q_i must only use earlier coordinates")
        polys.append(q)
    if amb.k >= 2 and polys[1]:
        raise AssertionError("q_2 must be identically zero")
    return PowerPolynomialTable(amb, names, polys)


def _ser_exp_generic(ell, c, one):
    out = {(): one}
    term = {(): one}
    fact = 1
    for j in range(1, c + 1):
        term = _ser_mul(term, ell, c)
        if not term:
            break
        fact *= j
        out = _ser_add(out, _ser_scale(term, Fraction(1, fact)))
    return out

def _ser_log_generic(e, c, one):
    n = dict(e)
    n.pop((), None)
    out = {}
    term = {(): one}
    for j in range(1, c + 1):
        term = _ser_mul(term, n, c)
        if not term:
            break
        out = _ser_add(out, _ser_scale(term, Fraction((-1) ** (j - 1), j)))
    return out

def _peel_generic(amb, series, one):
    w = series
    coords = []
    for d in range(1, amb.c + 1):
        part = _ser_degree_part(w, d)
        xs = amb.lie_coordinates(part, d)
        for local, x in enumerate(xs):
            if x:
                log_a = amb.log_basis(d, local)
                w = _ser_mul(_ser_exp_generic(_ser_scale(log_a, -x), amb.c, one),
                             w, amb.c)
        coords.extend(xs)
    assert w == {(): one}
    return coords


# ---------------------------------------------------------------------------
# padding identity: x^n y^f = (x z)^n
# ---------------------------------------------------------------------------

def padding_data(n, c):
    """The exponent f(n, c) and the coordinate polynomials of z in N_{2,c}.

    Solves a^n b^m = (a d)^m-free equation symbolically over Q[m]:
    d = a^{-1} (a^n b^m)^{1/n} has coordinates polynomial in m with no
    constant term; f(n, c) is the least common multiple of all their
    denominators, so substituting m = f(n, c) lands in the integers.
    """
    key = (n, c)
    cached = _PADDING_CACHE.get(key)
    if cached is not None:
        return cached
    if n < 2:
        raise ValueError("need n >= 2")
    amb = free_nilpotent_group(2, c)
    names = ("m",)
    mv = MPoly.variable(names, "m")
    one = MPoly.constant(names, 1)
    log_a = {w: v * one for w, v in amb.log_basis(1, 0).items()}
    log_b = {w: v * one for w, v in amb.log_basis(1, 1).items()}
    w = _ser_mul(_ser_exp_generic(_ser_scale(log_a, Fraction(n) * one), c, one),
                 _ser_exp_generic(_ser_scale(log_b, mv), c, one), c)
    root = _ser_exp_generic(_ser_scale(_ser_log_generic(w, c, one),
                                       Fraction(1, n) * one), c, one)
    z_series = _ser_mul(_ser_exp_generic(_ser_scale(log_a, -one), c, one),
                        root, c)
    coords = _peel_generic(amb, z_series, one)
    if coords[0]:
        raise AssertionError("z must have no component on the first generator")
    for q in coords:
        if q.constant_term():
            raise AssertionError("z coordinates must vanish at m = 0")
    f = 1
    for q in coords:
        f = lcm(f, q.denominator_lcm())
    cached = (f, tuple(coords))
    _PADDING_CACHE[key] = cached
    return cached


def padding_exponent(n, c):
    """f(n, c): the power of y that x^n absorbs into a single n-th power."""
    return padding_data(n, c)[0]


def _commutator_image(tree, x, y):
    if isinstance(tree, int):
        return x if tree == 0 else y
    u = _commutator_image(tree[0], x, y)
    v = _commutator_image(tree[1], x, y)
    return u.inverse() * v.inverse() * u * v


def power_padding(n, x, y):
    """(f, z) with x^n * y^f = (x * z)^n exactly and z in <y, gamma_2>.

    z is the image of the universal solution d in N_{2,c} under the
    homomorphism sending the two generators to x and y.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    x._check_same(y)
    amb = x.ambient
    f, coord_polys = padding_data(n, amb.c)
    amb2 = free_nilpotent_group(2, amb.c)
    z = amb.identity
    for (dl, q) in zip(amb2.basis, coord_polys):
        if not q:
            continue
        val = q.evaluate({"m": f})
        if val.denominator != 1:
            raise AssertionError("padding exponents must be integral at m = f")
        if val == 0:
            continue
        word = amb2.table.words(dl[0])[dl[1]]
        z = z * (_commutator_image(word.tree, x, y) ** val.numerator)
    if (x ** n) * (y ** f) != (x * z) ** n:
        raise AssertionError("padding identity failed to verify")
    return f, z


def free_rank_certificate(elements):
    """True when the abelianized images span a free abelian group of full rank.

    The listed elements then generate a free c-step nilpotent subgroup of
    the same rank.
    """
    elements = list(elements)
    if not elements:
        return True
    amb = elements[0].ambient
    n = len(elements)
    if n > amb.r:
        raise ValueError(f"at most r = {amb.r} elements allowed, got {n}")
    from .intlinalg import IntMatrix, smith_normal_form
    rows = [list(e.abelianized()) for e in elements]
    return smith_normal_form(IntMatrix(rows)).rank == n
