"""Independent brute-force checks for the twisted-conjugacy machinery.

Twisted conjugacy for x, y under an endomorphism phi identifies
x ~ z * x * phi(z)^-1.  On a finitely generated abelian group the class
count is the cokernel order of I - M, so the Smith normal form gives it
directly.  For nilpotent desk-scale checks we reduce the Malcev
coordinates of a free nilpotent group modulo a prime power p^e with
p exceeding the class: every denominator in the collection polynomials
is then invertible, the reduced coordinate maps define an honest finite
group of order m^k, and twisted classes can be counted by orbit
enumeration and compared against the exact linear-algebra predictions.
"""

from math import gcd, lcm

from .errors import ResourceLimitError
from .intlinalg import (IntMatrix, charpoly, kfold_product_spectrum,
                        poly_divides, smith_normal_form, squarefree_part)
from .freelie import induced_tower
from .mvpoly import MPoly
from .nilpotent import (_ser_exp_generic, _ser_mul, _ser_scale,
                        free_nilpotent_group)

DEFAULT_MAX_ORDER = 10 ** 6

_MAP_CACHE = {}


def abelian_reidemeister_count(m):
    """Twisted class count |coker(I - M)| on Z^n, or None when infinite.

    Equals |det(I - M)| when that determinant is nonzero; computed as the
    product of the Smith invariant factors of I - M.
    """
    if not m.is_square:
        raise ValueError("endomorphism matrix must be square")
    delta = IntMatrix.identity(m.rows) - m
    return smith_normal_form(delta).cokernel_order()


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_power_base(m):
    for p in range(2, m + 1):
        if _is_prime(p) and m % p == 0:
            q = m
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return None


class _CoordinateMaps:
    """Multiplication and inversion of N_{r,c} as integer polynomial maps.

    Each output coordinate is a polynomial in the inputs with rational
    coefficients whose denominators only involve primes <= c; they are
    stored cleared to integer polynomials plus one denominator each.
    """

    def __init__(self, r, c):
        amb = free_nilpotent_group(r, c)
        k = amb.k
        names = tuple(f"u{j}" for j in range(k)) + tuple(f"v{j}" for j in range(k))
        one = MPoly.constant(names, 1)
        us = [MPoly.variable(names, f"u{j}") for j in range(k)]
        vs = [MPoly.variable(names, f"v{j}") for j in range(k)]

        def generic_series(scalars):
            out = {(): one}
            for (dl, x) in zip(amb.basis, scalars):
                log_a = amb.log_basis(*dl)
                out = _ser_mul(out, _ser_exp_generic(_ser_scale(log_a, x), amb.c,
                                                     one), amb.c)
            return out

        series_u = generic_series(us)
        series_v = generic_series(vs)
        self.ambient = amb
        self.names = names
        self.mult = self._peel_to_cleared(amb, _ser_mul(series_u, series_v, amb.c),
                                          one)
        self.inv = self._peel_to_cleared(amb, _series_inverse_generic(series_u,
                                                                      amb.c, one),
                                         one)

    @staticmethod
    def _peel_to_cleared(amb, series, one):
        from .nilpotent import _peel_generic
        cleared = []
        for poly in _peel_generic(amb, series, one):
            den = poly.denominator_lcm()
            terms = {}
            for exps, coeff in poly.terms.items():
                val = coeff * den
                assert val.denominator == 1
                terms[exps] = val.numerator
            cleared.append((den, terms))
        return cleared

    def denominators(self):
        out = 1
        for den, _ in self.mult:
            out = lcm(out, den)
        for den, _ in self.inv:
            out = lcm(out, den)
        return out


def _series_inverse_generic(series, c, one):
    n = dict(series)
    n.pop((), None)
    out = {(): one}
    term = {(): one}
    for j in range(1, c + 1):
        term = _ser_mul(term, n, c)
        if not term:
            break
        for w, v in term.items():
            cur = out.get(w)
            val = v if j % 2 == 1 else -v
            out[w] = -val if cur is None else cur - val
    # out = 1 - N + N^2 - ... built with sign bookkeeping above
    return out


def _coordinate_maps(r, c):
    key = (r, c)
    maps = _MAP_CACHE.get(key)
    if maps is None:
        maps = _CoordinateMaps(r, c)
        _MAP_CACHE[key] = maps
    return maps


def _eval_cleared(cleared, values, m):
    """Evaluate one cleared coordinate polynomial modulo m."""
    den, terms = cleared
    acc = 0
    for exps, coeff in terms.items():
        val = coeff
        for x, e in zip(values, exps):
            if e:
                val *= x ** e
        acc += val
    if den == 1:
        return acc % m
    return (acc * pow(den, -1, m)) % m


class FiniteTwistedSetup:
    """Twisted-conjugacy instance on N_{r,c} reduced modulo a prime power.

    The modulus must be p^e with p > c so the reduced coordinate maps are
    well defined; the endomorphism is given by the images of the r
    generators as coordinate tuples.
    """

    def __init__(self, r, c, modulus, images=None, max_order=DEFAULT_MAX_ORDER):
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        if r < 0 or c < 1:
            raise ValueError("need r >= 0 and c >= 1")
        p = _prime_power_base(modulus)
        if p is None:
            raise ValueError(f"modulus {modulus} is not a prime power")
        if p <= c:
            raise ValueError(
                f"modulus base {p} must exceed the class {c} for the "
                f"reduction to close")
        self.r = r
        self.c = c
        self.modulus = modulus
        self.max_order = max_order
        if r == 0:
            self.k = 0
            self.images = ()
            return
        self._maps = _coordinate_maps(r, c)
        if gcd(self._maps.denominators(), modulus) != 1:
            raise ValueError("collection denominators are not invertible")
        self.k = self._maps.ambient.k
        if images is None:
            images = [self._maps.ambient.generator(i).coords for i in range(r)]
        images = [tuple(x % modulus for x in img) for img in images]
        if len(images) != r or any(len(img) != self.k for img in images):
            raise ValueError(f"need {r} generator images of length {self.k}")
        self.images = tuple(images)
        self._phi_basis = None

    @staticmethod
    def identity_twist(r, c, modulus, max_order=DEFAULT_MAX_ORDER):
        return FiniteTwistedSetup(r, c, modulus, max_order=max_order)

    @staticmethod
    def from_abelian_matrix(matrix, modulus, max_order=DEFAULT_MAX_ORDER):
        """Abelian specialization: class 1, endomorphism given by the matrix."""
        if not matrix.is_square:
            raise ValueError("endomorphism matrix must be square")
        images = [tuple(matrix[i, j] for i in range(matrix.rows))
                  for j in range(matrix.cols)]
        return FiniteTwistedSetup(matrix.rows, 1, modulus, images,
                                  max_order=max_order)

    # -- reduced group operations -------------------------------------------

    def group_order(self):
        return self.modulus ** self.k

    def multiply(self, a, b):
        values = tuple(a) + tuple(b)
        return tuple(_eval_cleared(cl, values, self.modulus)
                     for cl in self._maps.mult)

    def inverse(self, a):
        values = tuple(a) + (0,) * self.k
        return tuple(_eval_cleared(cl, values, self.modulus)
                     for cl in self._maps.inv)

    def _phi_on_basis(self):
        """Images of every Malcev basis element under the endomorphism."""
        if self._phi_basis is None:
            amb = self._maps.ambient
            out = []
            for (d, local) in amb.basis:
                word = amb.table.words(d)[local]
                out.append(self._word_image(word.tree))
            self._phi_basis = out
        return self._phi_basis

    def _word_image(self, tree):
        if isinstance(tree, int):
            return self.images[tree]
        u = self._word_image(tree[0])
        v = self._word_image(tree[1])
        ui = self.inverse(u)
        vi = self.inverse(v)
        return self.multiply(self.multiply(ui, vi), self.multiply(u, v))

    def apply_endomorphism(self, coords):
        """phi(x) for an arbitrary element, via its normal-form word."""
        acc = (0,) * self.k
        basis_images = self._phi_on_basis()
        for j, e in enumerate(coords):
            e = e % self.modulus
            img = basis_images[j]
            for _ in range(e):
                acc = self.multiply(acc, img)
        return acc


def brute_force_twisted_classes(setup):
    """Exact orbit count of x ~ z x phi(z)^-1 by generator-move union-find.

    The relation is the orbit partition of a group action, so moves by
    the r generators already connect every orbit.
    """
    if setup.r == 0:
        return 1
    order = setup.group_order()
    if order > setup.max_order:
        raise ResourceLimitError(
            f"group order {order} exceeds the bound {setup.max_order}")
    m = setup.modulus
    k = setup.k
    parent = list(range(order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    def encode(coords):
        acc = 0
        for x in reversed(coords):
            acc = acc * m + x
        return acc

    def decode(idx):
        out = []
        for _ in range(k):
            idx, rem = divmod(idx, m)
            out.append(rem)
        return tuple(out)

    movers = []
    for i in range(setup.r):
        z = tuple(setup._maps.ambient.generator(i).coords)
        phi_z_inv = setup.inverse(setup.images[i])
        movers.append((z, phi_z_inv))

    for idx in range(order):
        x = decode(idx)
        for z, phi_z_inv in movers:
            moved = setup.multiply(setup.multiply(z, x), phi_z_inv)
            union(idx, encode(moved))
    return sum(1 for idx in range(order) if find(idx) == idx)


def spectrum_crosscheck(s, table, i):
    """Degree-i tower spectrum divides the i-fold product spectrum.

    Checks that the squarefree part of charpoly(M_i) divides the
    squarefree part of the i-fold composed product of charpoly(S): every
    eigenvalue upstairs must be an i-fold product of base eigenvalues.
    """
    tower = induced_tower(table, s)
    upstairs = squarefree_part(charpoly(tower.matrix(i)))
    downstairs = squarefree_part(kfold_product_spectrum(charpoly(s), i))
    return poly_divides(upstairs, downstairs)
