import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rinfty.intlinalg import (IntMatrix, IntPoly, charpoly,
                              dominance_root_test, kfold_product_spectrum,
                              kfold_value_at_one, poly_divides, poly_gcd,
                              product_spectrum, reciprocal_symmetry_check,
                              resultant, smith_normal_form,
                              spectrum_value_at_one, squarefree_part,
                              sylvester_matrix)


def square_matrices(max_n=5, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=n, max_size=n)).map(IntMatrix)


S2 = IntMatrix.block_diag([IntMatrix([[1, 2], [1, 1]])] * 2)


class TestIntMatrix:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2], [3]])

    def test_matmul_shapes(self):
        with pytest.raises(ValueError):
            IntMatrix.zeros(2, 3) @ IntMatrix.zeros(2, 3)

    def test_det_examples(self):
        assert IntMatrix([[0, 1], [1, 1]]).det() == -1
        assert IntMatrix.identity(5).det() == 1
        assert IntMatrix.zeros(3, 3).det() == 0

    def test_det_multiplicative(self):
        rng = random.Random(1)
        for _ in range(25):
            n = rng.randint(1, 5)
            a = IntMatrix([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
            b = IntMatrix([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
            assert (a @ b).det() == a.det() * b.det()

    def test_text_roundtrip(self):
        m = IntMatrix([[1, -2, 30], [0, 5, -6]])
        assert IntMatrix.from_text(m.to_text()) == m
        assert m.to_text().splitlines()[0] == "2 3"

    def test_text_rejects_bad_counts(self):
        with pytest.raises(ValueError):
            IntMatrix.from_text("2 2\n1 2 3")


class TestCharpoly:
    def test_rotation_block(self):
        assert charpoly(IntMatrix([[0, 1], [-1, 0]])) == IntPoly([1, 0, 1])

    def test_orientable_witness(self):
        # expand((x^2 - 2x - 1)^2); the only eigenvalues are 1 +- sqrt(2)
        assert charpoly(S2) == IntPoly([-1, -2, 1]) * IntPoly([-1, -2, 1])
        assert charpoly(S2)(1) == 4

    def test_identity(self):
        for n in (1, 2, 5):
            assert charpoly(IntMatrix.identity(n)) == IntPoly([-1, 1]) ** n

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            charpoly(IntMatrix.zeros(2, 3))

    @settings(max_examples=40, deadline=None)
    @given(square_matrices())
    def test_matches_determinant_oracle(self, m):
        p = charpoly(m)
        assert p.is_monic and p.degree == m.rows
        for t in (-2, -1, 0, 1, 2, 3):
            assert p(t) == (t * IntMatrix.identity(m.rows) - m).det()

    def test_conjugation_invariance(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randint(2, 5)
            m = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
            u = IntMatrix.identity(n)
            for _ in range(6):
                i, j = rng.randrange(n), rng.randrange(n)
                if i == j:
                    continue
                q = rng.choice([-2, -1, 1, 2])
                rows = [list(r) for r in u.entries]
                rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
                u = IntMatrix(rows)
            uinv_scaled = _adjugate(u)  # u unimodular: adjugate = +-inverse
            sign = u.det()
            conj = (u @ m) @ (sign * uinv_scaled)
            assert charpoly(conj) == charpoly(m)

    def test_unimodular_constant_term(self):
        rng = random.Random(4)
        found = 0
        while found < 10:
            n = rng.randint(2, 4)
            m = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
            if m.det() in (1, -1):
                assert charpoly(m)(0) in (1, -1)
                found += 1


def _adjugate(m):
    n = m.rows
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = IntMatrix([[m[r, c] for c in range(n) if c != i]
                               for r in range(n) if r != j])
            row.append((-1) ** (i + j) * minor.det())
        rows.append(row)
    return IntMatrix(rows)


class TestSmithNormalForm:
    def test_coprime_diagonal(self):
        assert smith_normal_form(IntMatrix([[2, 0], [0, 3]])).diagonal == (1, 6)

    def test_fibonacci_cokernel(self):
        s = smith_normal_form(IntMatrix([[1, -1], [-1, 0]]))
        assert s.diagonal == (1, 1)
        assert s.cokernel_order() == 1

    def test_zero(self):
        assert smith_normal_form(IntMatrix.zeros(2, 2)).diagonal == (0, 0)

    def test_empty_columns(self):
        s = smith_normal_form(IntMatrix([[], [], []]))
        assert s.diagonal == ()
        assert s.rank == 0

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 8).flatmap(
        lambda r: st.integers(1, 8).flatmap(
            lambda c: st.lists(st.lists(st.integers(-50, 50),
                                        min_size=c, max_size=c),
                               min_size=r, max_size=r))).map(IntMatrix))
    def test_reconstruction_and_chain(self, m):
        s = smith_normal_form(m)
        assert (s.u @ m) @ s.v == s.d
        assert s.u.det() in (1, -1)
        assert s.v.det() in (1, -1)
        assert s.u @ s.u_inv == IntMatrix.identity(m.rows)
        assert s.v @ s.v_inv == IntMatrix.identity(m.cols)
        diag = s.diagonal
        assert all(x >= 0 for x in diag)
        for a, b in zip(diag, diag[1:]):
            assert (b == 0) if a == 0 else (b % a == 0)


class TestProductSpectrum:
    def test_paired_witness_roots(self):
        # roots of x^2-2x-1 are 1+-sqrt(2); pair products are
        # {(1+sqrt2)^2, -1, -1, (1-sqrt2)^2}, giving (x+1)^2 (x^2-6x+1)
        p = IntPoly([-1, -2, 1])
        expected = IntPoly([1, 2, 1]) * IntPoly([1, -6, 1])
        assert product_spectrum(p, p) == expected

    def test_multiplication_by_root_one(self):
        q = IntPoly([4, -1, 0, 2])
        assert product_spectrum(IntPoly([-1, 1]), q) == q

    def test_annihilation_by_zero_root(self):
        assert product_spectrum(IntPoly([0, 1]), IntPoly([-5, 1])) == IntPoly([0, 1])

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            product_spectrum(IntPoly.zero(), IntPoly([1, 1]))

    def test_commutative_and_degree(self):
        rng = random.Random(5)
        for _ in range(20):
            p = _random_poly(rng)
            q = _random_poly(rng)
            pq = product_spectrum(p, q)
            assert pq == product_spectrum(q, p)
            assert pq.degree == p.degree * q.degree

    def test_against_interpolated_resultant(self):
        rng = random.Random(6)
        for _ in range(15):
            p = _random_poly(rng)
            q = _random_poly(rng)
            assert product_spectrum(p, q) == _composed_by_resultant(p, q)


def _random_poly(rng, max_deg=3):
    d = rng.randint(1, max_deg)
    return IntPoly([rng.randint(-4, 4) for _ in range(d)] + [rng.choice([1, -1, 2])])


def _composed_by_resultant(p, q):
    """Independent route: interpolate Res_y(p(y), y^m q(x/y)) pointwise."""
    u = 0
    while p.coeffs[u] == 0:
        u += 1
    v = 0
    while q.coeffs[v] == 0:
        v += 1
    ph, qh = IntPoly(p.coeffs[u:]), IntPoly(q.coeffs[v:])
    nh, mh = ph.degree, qh.degree
    big = nh * mh
    pts, vals = [], []
    t = 0
    while len(pts) < big + 1:
        qt = IntPoly(list(reversed([qh.coeffs[j] * t ** j for j in range(mh + 1)])))
        pts.append(t)
        vals.append(Fraction(resultant(ph, qt)))
        t = -t if t > 0 else -t + 1
    size = big + 1
    a = [[Fraction(pts[i] ** j) for j in range(size)] for i in range(size)]
    b = vals[:]
    for col in range(size):
        piv = next(r for r in range(col, size) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] *= inv
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] -= f * b[col]
    n, m = p.degree, q.degree
    zero_mult = u * m + v * n - u * v
    scale = Fraction(p.leading ** m * q.leading ** n,
                     ph.leading ** mh * qh.leading ** nh)
    coeffs = [scale * c for c in b]
    assert all(c.denominator == 1 for c in coeffs)
    return IntPoly([c.numerator for c in coeffs]).shift(zero_mult)


class TestKfold:
    def test_identity_fold(self):
        p = IntPoly([-1, -2, 1])
        assert kfold_product_spectrum(p, 1) == p

    def test_golden_ratio_squares(self):
        # roots of x^2-x-1 multiply pairwise to {phi^2, -1, -1, phi'^2}
        got = kfold_product_spectrum(IntPoly([-1, -1, 1]), 2)
        assert got == IntPoly([1, -3, 1]) * IntPoly([1, 1]) ** 2

    def test_zero_fold_rejected(self):
        with pytest.raises(ValueError):
            kfold_product_spectrum(IntPoly([1, 1]), 0)

    def test_direct_equals_iterated(self):
        rng = random.Random(7)
        for _ in range(15):
            d = rng.randint(1, 3)
            p = IntPoly([rng.randint(-3, 3) for _ in range(d)] + [1])
            i = rng.randint(2, 4)
            iterated = p
            for _ in range(i - 1):
                iterated = product_spectrum(iterated, p)
            assert kfold_product_spectrum(p, i) == iterated

    def test_unimodular_product_hits_one_at_2g(self):
        # det -1 quadratic: the square of the full root product is 1
        p = IntPoly([-1, 9, 1])
        assert kfold_product_spectrum(p, 4)(1) == 0
        assert all(kfold_product_spectrum(p, i)(1) != 0 for i in (1, 2, 3))

    def test_value_at_one_shortcut(self):
        rng = random.Random(8)
        for _ in range(20):
            d = rng.randint(1, 4)
            p = IntPoly([rng.randint(-3, 3) for _ in range(d)] + [1])
            for i in (1, 2, 3, 4, 5):
                assert kfold_value_at_one(p, i) == kfold_product_spectrum(p, i)(1)

    def test_spectrum_value_at_one_pairwise(self):
        rng = random.Random(9)
        for _ in range(20):
            d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
            p = IntPoly([rng.randint(-3, 3) for _ in range(d1)] + [1])
            q = IntPoly([rng.randint(-3, 3) for _ in range(d2)] + [1])
            assert spectrum_value_at_one(p, q) == product_spectrum(p, q)(1)


class TestReciprocalSymmetry:
    def test_witness_polynomial_minus_form(self):
        res = reciprocal_symmetry_check(charpoly(S2), 2)
        assert res.label == "holds_minus"
        assert res.minus_sign == 1

    def test_rotation_quadratic(self):
        assert reciprocal_symmetry_check(IntPoly([1, 0, 1]), 1).label != "fails"

    def test_generic_failure(self):
        assert reciprocal_symmetry_check(IntPoly([2, 1, 1]), 1).label == "fails"

    def test_symplectic_identity_plus_form(self):
        res = reciprocal_symmetry_check(charpoly(IntMatrix.identity(4)), 2)
        assert res.label == "holds_plus"
        assert res.plus_form

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            reciprocal_symmetry_check(IntPoly([1, 0, 1]), 2)


class TestDominance:
    def test_large_twist_passes(self):
        # charpoly of the genus-2 witness construction at m = 10
        assert dominance_root_test(IntPoly([-1, 10, 1])) is True

    def test_witness_quadratic_fails(self):
        assert dominance_root_test(IntPoly([-1, -2, 1])) is False

    def test_degenerate_linear(self):
        assert dominance_root_test(IntPoly([-1, 1])) is False

    def test_non_monic(self):
        assert dominance_root_test(IntPoly([-1, 10, 2])) is False


class TestPolyHelpers:
    def test_gcd_and_squarefree(self):
        p = IntPoly([1, 1]) ** 2 * IntPoly([-3, 1])
        q = IntPoly([1, 1]) * IntPoly([5, 1])
        g = poly_gcd(p, q)
        assert g == IntPoly([1, 1]) or g == -1 * IntPoly([1, 1])
        sf = squarefree_part(p)
        assert sf == IntPoly([1, 1]) * IntPoly([-3, 1])

    def test_divides(self):
        assert poly_divides(IntPoly([1, 1]), IntPoly([1, 2, 1]))
        assert not poly_divides(IntPoly([-1, 1]), IntPoly([1, 2, 1]))

    def test_resultant_vs_sylvester_root_products(self):
        # Res(f, g) = lc(f)^deg(g) * prod g(alpha): check on split examples
        f = IntPoly([-2, 1]) * IntPoly([3, 1])       # roots 2, -3
        g = IntPoly([-1, 1]) * IntPoly([-5, 1])      # roots 1, 5
        expected = g(2) * g(-3)
        assert resultant(f, g) == expected
        assert sylvester_matrix(f, g).det() == expected

    def test_poly_json_roundtrip(self):
        p = IntPoly([3, 0, -2])
        assert IntPoly.from_json(p.to_json()) == p

    def test_zero_poly_degree_is_none(self):
        assert IntPoly.zero().degree is None
        assert IntPoly.zero().is_zero
