"""Exact integer matrices and univariate integer polynomials.

Everything in here is arbitrary-precision and exact: determinants are
fraction-free (Bareiss), characteristic polynomials division-free
(Berkowitz), and Smith normal forms carry their unimodular transforms so
results can be re-verified.  No floating point is used anywhere.

All objects are immutable after construction, so values can be shared
freely between threads; every operation is a pure function.
"""

import json
from fractions import Fraction


class IntMatrix:
    """Immutable matrix of arbitrary-precision integers, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_of_entries):
        rows = tuple(tuple(int(x) for x in row) for row in rows_of_entries)
        ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def identity(n):
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(rows, cols):
        return IntMatrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def block_diag(blocks):
        blocks = list(blocks)
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        i = j = 0
        for b in blocks:
            for r in range(b.rows):
                out[i + r][j:j + b.cols] = b.entries[r]
            i += b.rows
            j += b.cols
        return IntMatrix(out)

    # -- basic queries -----------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        return (isinstance(other, IntMatrix)
                and self.entries == other.entries
                and self.cols == other.cols)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]!r})"

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        return IntMatrix([[a + b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return IntMatrix([[a - b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return IntMatrix([[-a for a in row] for row in self.entries])

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix([[scalar * a for a in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ "
                             f"{other.rows}x{other.cols}")
        bt = list(zip(*other.entries)) if other.entries else []
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in bt]
                          for row in self.entries])

    def __pow__(self, k):
        if not self.is_square or k < 0:
            raise ValueError("matrix power needs a square base and k >= 0")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def transpose(self):
        return IntMatrix(list(zip(*self.entries)) if self.entries else [])

    def trace(self):
        self._require_square()
        return sum(self.entries[i][i] for i in range(self.rows))

    def det(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        self._require_square()
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            pivot = m[k][k]
            for i in range(k + 1, n):
                mik = m[i][k]
                if mik == 0 and pivot == prev:
                    continue
                row_i = m[i]
                row_k = m[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
                row_i[k] = 0
            prev = pivot
        return sign * m[n - 1][n - 1]

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def _require_square(self):
        if not self.is_square:
            raise ValueError(f"matrix is {self.rows}x{self.cols}, need square")

    # -- text format -------------------------------------------------

    def to_text(self):
        """Render as 'rows cols' header plus whitespace-separated rows."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(x) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text):
        tokens = text.split()
        if len(tokens) < 2:
            raise ValueError("matrix text needs a 'rows cols' header")
        r, c = int(tokens[0]), int(tokens[1])
        body = tokens[2:]
        if len(body) != r * c:
            raise ValueError(f"expected {r * c} entries, got {len(body)}")
        return IntMatrix([[int(body[i * c + j]) for j in range(c)] for i in range(r)])


class IntPoly:
    """Immutable univariate polynomial with integer coefficients.

    Coefficients are stored ascending; the zero polynomial keeps an empty
    coefficient tuple and reports degree None (it never enters degree
    arithmetic as -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @staticmethod
    def zero():
        return IntPoly(())

    @staticmethod
    def one():
        return IntPoly((1,))

    @staticmethod
    def x_power(k):
        return IntPoly((0,) * k + (1,))

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, k):
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self):
        from math import gcd
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self):
        g = self.content()
        if g == 0:
            return self
        sign = 1 if self.leading > 0 else -1
        return IntPoly([c // (sign * g) for c in self.coeffs])

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                term = f"{mag}x" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append((" - " if c < 0 else " + ") + term)
        return "".join(parts)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def to_json(self):
        return json.dumps({"coeffs": list(self.coeffs)}, sort_keys=True)

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        return IntPoly(data["coeffs"])


# ---------------------------------------------------------------------------
# characteristic polynomial
# ---------------------------------------------------------------------------

def charpoly(m):
    """Monic characteristic polynomial det(xI - M), division-free.

    Uses the Berkowitz recursion: the coefficient vector of a trailing
    principal submatrix is pushed through a Toeplitz convolution per added
    row/column, so only integer additions and multiplications occur.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    m._require_square()
    n = m.rows
    if n == 0:
        return IntPoly.one()
    a = m.entries
    # descending coefficients of the trailing 1x1 block
    v = [1, -a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        size = n - k
        # first column of the Toeplitz transform: 1, -a_kk, -R C, -R B C, ...
        col = [1, -a[k][k]]
        r_row = a[k][k + 1:]
        w = [a[i][k] for i in range(k + 1, n)]
        b_rows = [a[i][k + 1:] for i in range(k + 1, n)]
        for _ in range(size - 1):
            col.append(-sum(x * y for x, y in zip(r_row, w)))
            w = [sum(x * y for x, y in zip(row, w)) for row in b_rows]
        out = [0] * (size + 1)
        for i in range(size + 1):
            acc = 0
            for j in range(len(v)):
                d = i - j
                if 0 <= d < len(col):
                    acc += col[d] * v[j]
            out[i] = acc
        v = out
    return IntPoly(list(reversed(v)))


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _xgcd(a, b):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return g, x, y


class SmithDecomposition:
    """U*M*V = D with U, V unimodular and D = diag(d1 | d2 | ... >= 0)."""

    __slots__ = ("matrix", "u", "d", "v", "u_inv", "v_inv", "diagonal", "rank")

    def __init__(self, matrix, u, d, v, u_inv, v_inv):
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "u_inv", u_inv)
        object.__setattr__(self, "v_inv", v_inv)
        diag = tuple(d[i, i] for i in range(min(d.rows, d.cols)))
        object.__setattr__(self, "diagonal", diag)
        object.__setattr__(self, "rank", sum(1 for x in diag if x != 0))

    def __setattr__(self, name, value):
        raise AttributeError("SmithDecomposition is immutable")

    def cokernel_order(self):
        """Order of coker(M) as a count, or None when infinite."""
        if self.rank < self.d.cols:
            return None
        prod = 1
        for x in self.diagonal:
            if x == 0:
                return None
            prod *= x
        return prod


def smith_normal_form(m):
    """Smith normal form with all four transforms tracked and re-verified."""
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    ui = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    vi = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for row in ui:
            row[i], row[j] = row[j], row[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vi[i], vi[j] = vi[j], vi[i]

    def row_addmul(i, j, q):
        # row_i += q * row_j ; inverse transform: col_j of Ui -= q * col_i
        ai, aj = a[i], a[j]
        for t in range(ncols):
            ai[t] += q * aj[t]
        uiw, ujw = u[i], u[j]
        for t in range(nrows):
            uiw[t] += q * ujw[t]
        for row in ui:
            row[j] -= q * row[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for row in ui:
            row[i] = -row[i]

    def col_addmul(i, j, q):
        # col_i += q * col_j ; inverse transform: row_j of Vi -= q * row_i
        for row in a:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]
        vii, vij = vi[i], vi[j]
        for t in range(ncols):
            vij[t] -= q * vii[t]

    def row_combine(i, j, x, y, s, t):
        # (row_i, row_j) <- (x ri + y rj, s ri + t rj), with xt - ys = 1.
        # Inverse acts on columns of Ui as (ci, cj) <- (t ci - s cj, -y ci + x cj).
        for mat in (a, u):
            ri, rj = mat[i], mat[j]
            for k in range(len(ri)):
                ri[k], rj[k] = x * ri[k] + y * rj[k], s * ri[k] + t * rj[k]
        for row in ui:
            ci, cj = row[i], row[j]
            row[i] = t * ci - s * cj
            row[j] = -y * ci + x * cj

    def col_combine(i, j, x, y, s, t):
        # (col_i, col_j) <- (x ci + y cj, s ci + t cj), with xt - ys = 1.
        for mat in (a, v):
            for row in mat:
                ci, cj = row[i], row[j]
                row[i] = x * ci + y * cj
                row[j] = s * ci + t * cj
        ri, rj = vi[i], vi[j]
        for k in range(ncols):
            ri[k], rj[k] = t * ri[k] - s * rj[k], -y * ri[k] + x * rj[k]

    def clear_position(t):
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                b = a[i][t]
                if b == 0:
                    continue
                p = a[t][t]
                if b % p == 0:
                    row_addmul(i, t, -(b // p))
                else:
                    g, x, y = _xgcd(p, b)
                    row_combine(t, i, x, y, -(b // g), p // g)
                    dirty = True
            for j in range(t + 1, ncols):
                b = a[t][j]
                if b == 0:
                    continue
                p = a[t][t]
                if b % p == 0:
                    col_addmul(j, t, -(b // p))
                    dirty = True  # column ops can refill the column below
                else:
                    g, x, y = _xgcd(p, b)
                    col_combine(t, j, x, y, -(b // g), p // g)
                    dirty = True
            if not any(a[i][t] for i in range(t + 1, nrows)) and \
               not any(a[t][j] for j in range(t + 1, ncols)):
                return
            if not dirty:  # pragma: no cover - elimination always progresses
                raise AssertionError("Smith elimination stalled")

    limit = min(nrows, ncols)
    t = 0
    while t < limit:
        pivot = None
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                x = row[j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])
        clear_position(t)
        t += 1

    rank = t
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            p, q = a[i][i], a[i + 1][i + 1]
            if q % p != 0:
                col_addmul(i, i + 1, 1)
                clear_position(i)
                changed = True
    for i in range(rank):
        if a[i][i] < 0:
            row_negate(i)

    um = IntMatrix(u)
    vm = IntMatrix(v)
    dm = IntMatrix(a)
    uim = IntMatrix(ui)
    vim = IntMatrix(vi)
    if (um @ m) @ vm != dm:
        raise AssertionError("Smith reconstruction U*M*V != D")
    return SmithDecomposition(m, um, dm, vm, uim, vim)


# ---------------------------------------------------------------------------
# polynomial gcd / resultant / division helpers
# ---------------------------------------------------------------------------

def poly_divmod_exact(num, den):
    """Quotient and remainder over Q, returned as IntPoly when integral.

    Raises ValueError when the division leaves rational coefficients.
    """
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in num.coeffs]
    dc = [Fraction(c) for c in den.coeffs]
    dn = len(dc) - 1
    quo = [Fraction(0)] * max(len(rem) - dn, 0)
    while len(rem) - 1 >= dn and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dn:
            break
        shift = len(rem) - 1 - dn
        factor = rem[-1] / dc[-1]
        quo[shift] = factor
        for i, c in enumerate(dc):
            rem[shift + i] -= factor * c
        rem.pop()
    def to_int_poly(fracs):
        out = []
        for f in fracs:
            if f.denominator != 1:
                raise ValueError("division is not exact over the integers")
            out.append(f.numerator)
        return IntPoly(out)
    return to_int_poly(quo), to_int_poly(rem)


def poly_gcd(p, q):
    """Primitive gcd of two integer polynomials (positive leading coeff)."""
    from math import gcd as igcd
    if p.is_zero:
        return q.primitive_part() if not q.is_zero else IntPoly.zero()
    if q.is_zero:
        return p.primitive_part()
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        # pseudo-remainder keeps everything integral
        delta = a.degree - b.degree
        r = (b.leading ** (delta + 1)) * a
        _, rem = poly_divmod_exact(r, b)
        a, b = b, rem.primitive_part()
    cont = igcd(p.content(), q.content())
    return cont * a


def squarefree_part(p):
    """Radical of p: product of its distinct irreducible factors, primitive."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    g = poly_gcd(p, p.derivative())
    if g.is_zero or g.degree == 0:
        return p.primitive_part()
    num = (g.leading ** (p.degree - g.degree + 1)) * p
    quo, rem = poly_divmod_exact(num, g)
    if not rem.is_zero:
        raise AssertionError("gcd did not divide its polynomial")
    return quo.primitive_part()


def poly_divides(d, p):
    """True when d divides p exactly up to rational scaling."""
    if d.is_zero:
        return p.is_zero
    if p.is_zero:
        return True
    if d.degree > p.degree:
        return False
    scale = d.leading ** (p.degree - d.degree + 1)
    _, rem = poly_divmod_exact(scale * p, d)
    return rem.is_zero


def sylvester_matrix(f, g):
    """Sylvester matrix of two nonzero polynomials, size deg f + deg g."""
    if f.is_zero or g.is_zero:
        raise ValueError("Sylvester matrix needs nonzero polynomials")
    n, m = f.degree, g.degree
    size = n + m
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([0] * i + fc + [0] * (size - i - len(fc)))
    for i in range(n):
        rows.append([0] * i + gc + [0] * (size - i - len(gc)))
    return IntMatrix(rows)


def resultant(f, g):
    """Exact resultant Res(f, g), fraction-free via the Sylvester determinant."""
    if f.is_zero or g.is_zero:
        return 0
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    return sylvester_matrix(f, g).det()


# ---------------------------------------------------------------------------
# root-product spectra
# ---------------------------------------------------------------------------

def _power_sums(p, count):
    """Power sums s_1..s_count of the roots of p.

    Integers throughout for monic p; exact rationals otherwise.
    """
    n = p.degree
    lead = p.leading
    if lead == 1:
        e = [1] + [(-1) ** i * p.coeffs[n - i] for i in range(1, n + 1)]
        s = [0] * (count + 1)
    else:
        e = [Fraction(1)] + [Fraction((-1) ** i * p.coeffs[n - i], lead)
                             for i in range(1, n + 1)]
        s = [Fraction(0)] * (count + 1)
    for k in range(1, count + 1):
        acc = 0
        for i in range(1, min(k, n) + 1):
            term = e[i] if i % 2 == 1 else -e[i]
            acc = acc + term * (k if i == k else s[k - i])
        s[k] = acc
    return s


def _monic_from_power_sums(s, n):
    """Monic polynomial (ascending coefficients) with power sums s_1..s_n.

    Newton's identities need one division by k per step; when the power
    sums are integers coming from a monic integer polynomial the division
    is exact and everything stays in plain integers.
    """
    integral = all(isinstance(x, int) for x in s[1:n + 1])
    e = [1 if integral else Fraction(1)] + [0] * n
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            term = s[i] * e[k - i]
            acc = acc + term if i % 2 == 1 else acc - term
        if integral:
            q, r = divmod(acc, k)
            if r:
                raise AssertionError("Newton recursion left the integers")
            e[k] = q
        else:
            e[k] = acc / k
    return [((-1) ** (n - j)) * e[n - j] for j in range(n + 1)]


def _valuation(p):
    v = 0
    while v < len(p.coeffs) and p.coeffs[v] == 0:
        v += 1
    return v


def product_spectrum(p, q):
    """Polynomial whose root multiset is {a*b : a root of p, b root of q}.

    This is the composed product classically written as the resultant
    Res_y(p(y), y^m q(x/y)); it is evaluated here through power sums
    (s_k of the product polynomial factor as s_k(p) * s_k(q)), which gives
    the identical integer polynomial without coefficient blowup.  The
    result is normalized to lc(p)^deg(q) * lc(q)^deg(p) * prod (x - a*b).
    """
    if p.is_zero or q.is_zero:
        raise ValueError("product spectrum of the zero polynomial")
    n, m = p.degree, q.degree
    u, v = _valuation(p), _valuation(q)
    zero_mult = u * m + v * n - u * v
    ph = IntPoly(p.coeffs[u:])
    qh = IntPoly(q.coeffs[v:])
    nh, mh = ph.degree, qh.degree
    big = nh * mh
    if big == 0:
        core = [Fraction(1)]
    else:
        sp = _power_sums(ph, big)
        sq = _power_sums(qh, big)
        s = [Fraction(0)] * (big + 1)
        for k in range(1, big + 1):
            s[k] = sp[k] * sq[k]
        core = _monic_from_power_sums(s, big)
    scale = Fraction(p.leading ** m * q.leading ** n)
    out = []
    for c in core:
        val = scale * c
        if val.denominator != 1:
            raise AssertionError("composed product produced a non-integer")
        out.append(val.numerator)
    return IntPoly(out).shift(zero_mult)


def kfold_product_spectrum(p, i):
    """Roots are all products over ordered i-tuples of roots of p.

    Equal to iterating the pairwise composed product; for monic p the
    power sums of the result are the pointwise i-th powers of the power
    sums of p, which avoids the intermediate coefficient blowup.
    """
    if i < 1:
        raise ValueError("need i >= 1")
    if i == 1:
        return p
    if p.is_zero:
        raise ValueError("product spectrum of the zero polynomial")
    if not p.is_monic:
        result = p
        for _ in range(i - 1):
            result = product_spectrum(result, p)
        return result
    u = _valuation(p)
    ph = IntPoly(p.coeffs[u:])
    nh = ph.degree
    big = nh ** i
    zero_mult = p.degree ** i - big
    if big == 0:
        core = [1]
    else:
        sp = _power_sums(ph, big)
        s = [0] * (big + 1)
        for k in range(1, big + 1):
            s[k] = sp[k] ** i
        core = _monic_from_power_sums(s, big)
    return IntPoly(core).shift(zero_mult)


def _mod_monic(f_coeffs, g):
    """Remainder of the polynomial with the given ascending coeffs modulo monic g."""
    rem = list(f_coeffs)
    dn = g.degree
    gc = g.coeffs
    for k in range(len(rem) - 1, dn - 1, -1):
        c = rem[k]
        if c:
            rem[k] = 0
            for j in range(dn):
                rem[k - dn + j] -= c * gc[j]
    return IntPoly(rem[:dn])


def spectrum_value_at_one(p, q):
    """product_spectrum(p, q)(1) = prod (1 - a*b), without the full polynomial.

    Requires monic inputs.  Zero roots contribute unit factors; the rest
    is the norm of the reversed polynomial, evaluated as a resultant
    against a small modular remainder.
    """
    if not (p.is_monic and q.is_monic):
        return product_spectrum(p, q)(1)
    ph = IntPoly(p.coeffs[_valuation(p):])
    qh = IntPoly(q.coeffs[_valuation(q):])
    if ph.degree == 0 or qh.degree == 0:
        return 1
    reversed_q = tuple(reversed(qh.coeffs))
    r = _mod_monic(reversed_q, ph)
    if r.is_zero:
        return 0
    if r.degree == 0:
        return r.coeffs[0] ** ph.degree
    return resultant(ph, r)


def kfold_value_at_one(p, i):
    """kfold_product_spectrum(p, i)(1), via a balanced split of the i tuples.

    Ordered i-tuples factor as (a-tuple, b-tuple) pairs for a + b = i, so
    the value is the pairwise composed-product value of the two smaller
    spectra.
    """
    if i < 1:
        raise ValueError("need i >= 1")
    if i == 1:
        return p(1)
    if not p.is_monic:
        return kfold_product_spectrum(p, i)(1)
    a = i // 2
    b = i - a
    qa = kfold_product_spectrum(p, a)
    qb = qa if a == b else kfold_product_spectrum(p, b)
    return spectrum_value_at_one(qa, qb)


# ---------------------------------------------------------------------------
# coefficient symmetry tests
# ---------------------------------------------------------------------------

class ReciprocalSymmetry:
    """Outcome of the paired-eigenvalue coefficient test.

    ``plus_form`` records p(x) = x^2g p(1/x) (root pairing a <-> 1/a);
    ``minus_sign`` records the sign e with p(x) = e x^2g p(-1/x)
    (root pairing a <-> -1/a), or None.  ``label`` collapses this to
    holds_plus / holds_minus / fails, preferring the minus form.
    """

    __slots__ = ("plus_form", "minus_sign")

    def __init__(self, plus_form, minus_sign):
        object.__setattr__(self, "plus_form", plus_form)
        object.__setattr__(self, "minus_sign", minus_sign)

    def __setattr__(self, name, value):
        raise AttributeError("ReciprocalSymmetry is immutable")

    @property
    def label(self):
        if self.minus_sign is not None:
            return "holds_minus"
        if self.plus_form:
            return "holds_plus"
        return "fails"

    @property
    def fails(self):
        return self.label == "fails"

    def __repr__(self):
        return f"ReciprocalSymmetry(label={self.label!r}, minus_sign={self.minus_sign!r})"


def reciprocal_symmetry_check(p, g):
    """Classify p against the reciprocal symmetries of degree 2g.

    holds_plus:  p(x) = x^2g p(1/x)    (coefficientwise a_j = a_{2g-j})
    holds_minus: p(x) = +-x^2g p(-1/x) (coefficientwise a_j = +-(-1)^j a_{2g-j})
    """
    if p.degree != 2 * g:
        raise ValueError(f"polynomial degree {p.degree} != 2g = {2 * g}")
    d = 2 * g
    a = list(p.coeffs)
    plus_form = all(a[j] == a[d - j] for j in range(d + 1))
    minus_sign = None
    for sign in (1, -1):
        if all(a[j] == sign * ((-1) ** j) * a[d - j] for j in range(d + 1)):
            minus_sign = sign
            break
    return ReciprocalSymmetry(plus_form, minus_sign)


def dominance_root_test(p):
    """Coefficient-dominance test for a single dominant real root.

    For monic p = x^g + a_{g-1} x^{g-1} + ... + a_0 the test is
        |a_{g-1}| > 1 + |a_{g-2}| + ... + |a_1| + |a_0|,
    which by Rouche's theorem forces exactly one (real, simple) root of
    modulus > 1 with every other root strictly inside the unit disk.
    Degenerate inputs (degree < 2, non-monic) report False.
    """
    if p.is_zero or p.degree is None or p.degree < 2 or not p.is_monic:
        return False
    g = p.degree
    lhs = abs(p.coeffs[g - 1])
    rhs = 1 + sum(abs(p.coeffs[i]) for i in range(g - 1))
    return lhs > rhs
