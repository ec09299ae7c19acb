import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rinfty.mvpoly import MPoly
from rinfty.nilpotent import (MalcevElement, build_power_table,
                              free_nilpotent_group, free_rank_certificate,
                              multiply, nth_root, padding_data,
                              padding_exponent, power, power_padding)


def coords_strategy(group, bound=3):
    return st.lists(st.integers(-bound, bound), min_size=group.k,
                    max_size=group.k).map(lambda c: group.element(c))


G22 = free_nilpotent_group(2, 2)
G23 = free_nilpotent_group(2, 3)
G33 = free_nilpotent_group(3, 3)


class TestGroupLaws:
    @settings(max_examples=30, deadline=None)
    @given(coords_strategy(G23), coords_strategy(G23), coords_strategy(G23))
    def test_associativity(self, u, v, w):
        assert (u * v) * w == u * (v * w)

    @settings(max_examples=30, deadline=None)
    @given(coords_strategy(G33, 2))
    def test_inverse_identity(self, u):
        assert u * u.inverse() == G33.identity
        assert u.inverse() * u == G33.identity
        assert u * G33.identity == u

    @settings(max_examples=25, deadline=None)
    @given(coords_strategy(G23, 2), st.integers(-6, 6), st.integers(-6, 6))
    def test_power_additivity(self, u, m, n):
        assert power(u, m + n) == power(u, m) * power(u, n)

    def test_power_matches_repeated_multiplication(self):
        rng = random.Random(1)
        for _ in range(10):
            u = G23.element([rng.randint(-2, 2) for _ in range(G23.k)])
            acc = G23.identity
            for n in range(5):
                assert power(u, n) == acc
                acc = acc * u

    def test_deeper_ambient_laws(self):
        rng = random.Random(2)
        g = free_nilpotent_group(3, 4)
        for _ in range(3):
            u = g.element([rng.randint(-1, 1) for _ in range(g.k)])
            v = g.element([rng.randint(-1, 1) for _ in range(g.k)])
            w = g.element([rng.randint(-1, 1) for _ in range(g.k)])
            assert (u * v) * w == u * (v * w)
            assert (u * v).inverse() == v.inverse() * u.inverse()


class TestNormalForm:
    def test_collection_single_step(self):
        # basis order a, b, [b,a]: collecting b*a moves the commutator right
        a, b = G22.generators()
        assert (b * a).coords == (1, 1, 1)
        assert a * b * (b.inverse() * a.inverse() * b * a) == b * a

    def test_class_two_square_identity(self):
        a, b = G22.generators()
        ab = a * b
        comm = b.inverse() * a.inverse() * b * a
        assert ab * ab == (a * a) * (b * b) * comm
        assert power(ab, 2).coords == (2, 2, 1)
        assert power(ab, 2) == multiply(ab, ab)

    def test_identity_is_zero_vector(self):
        assert G22.identity.coords == (0, 0, 0)
        assert G22.identity.is_identity

    def test_lower_central_membership(self):
        a, b = G23.generators()
        comm = b.inverse() * a.inverse() * b * a
        assert comm.in_lower_central(2)
        assert not comm.in_lower_central(3)
        deep = comm.inverse() * a.inverse() * comm * a
        assert deep.in_lower_central(3)

    def test_ambient_mismatch_rejected(self):
        with pytest.raises(ValueError):
            G22.generator(0) * G23.generator(0)

    def test_json_roundtrip(self):
        el = G23.element([1, -2, 0, 3, 0])
        assert MalcevElement.from_json(el.to_json()) == el


class TestPowerTable:
    def test_q2_vanishes(self):
        table = build_power_table(2, 2)
        assert not table.q(2)

    def test_heisenberg_q3_is_binomial(self):
        table = build_power_table(2, 2)
        names = table.variables
        x1 = MPoly.variable(names, "x1")
        x2 = MPoly.variable(names, "x2")
        m = MPoly.variable(names, "m")
        assert table.q(3) == (m * m - m) / 2 * x1 * x2

    def test_power_of_one_is_trivial(self):
        for r, c in [(2, 2), (2, 3)]:
            table = build_power_table(r, c)
            for j in range(1, table.ambient.k + 1):
                sub = table.q(j).substitute({"m": 1})
                assert not sub

    def test_table_matches_group_power(self):
        rng = random.Random(5)
        for r, c in [(2, 2), (2, 3), (3, 2)]:
            table = build_power_table(r, c)
            group = table.ambient
            for _ in range(6):
                u = group.element([rng.randint(-2, 2) for _ in range(group.k)])
                m = rng.randint(-4, 4)
                assert table.power_coordinates(u.coords, m) == power(u, m).coords


class TestRoots:
    def test_quarter_turn_roundtrip(self):
        rng = random.Random(6)
        for group in (G22, G23, G33):
            for _ in range(6):
                w = group.element([rng.randint(-2, 2) for _ in range(group.k)])
                s = rng.choice([2, 3])
                u = power(w, s)
                assert nth_root(u, s) == w

    def test_root_of_fourth_powers(self):
        a, b = G22.generators()
        u = power(a, 4) * power(b, 4)
        root = nth_root(u, 2)
        assert root is not None
        assert power(root, 2) == u
        assert root.coords == (2, 2, -2)

    def test_no_root_returns_none(self):
        a, _ = G22.generators()
        assert nth_root(a, 2) is None

    def test_s_to_the_c_powers_have_roots(self):
        rng = random.Random(7)
        for s in (2, 3):
            for c in (2, 3):
                group = free_nilpotent_group(2, c)
                for _ in range(5):
                    u = group.identity
                    for _ in range(3):
                        w = group.element([rng.randint(-2, 2)
                                           for _ in range(group.k)])
                        u = u * power(w, s ** c)
                    v = nth_root(u, s)
                    assert v is not None
                    assert power(v, s) == u

    def test_genus_level_square_root(self):
        for g in (2, 3):
            for c in (2, 3):
                group = free_nilpotent_group(g, c)
                u = group.identity
                for i in range(g):
                    u = u * power(group.generator(i), 2 ** c)
                d = nth_root(u, 2)
                assert d is not None
                assert power(d, 2) == u

    def test_small_s_rejected(self):
        with pytest.raises(ValueError):
            nth_root(G22.identity, 1)


class TestPadding:
    def test_class_two_values(self):
        assert padding_exponent(2, 2) == 4
        a, b = G22.generators()
        f, z = power_padding(2, a, b)
        assert f == 4
        assert z.coords == (0, 2, -1)
        assert power(a, 2) * power(b, 4) == power(a * z, 2)

    def test_identity_padding(self):
        a, _ = G22.generators()
        f, z = power_padding(2, a, G22.identity)
        assert z == G22.identity

    def test_padding_polynomials_have_no_constant_term(self):
        _, polys = padding_data(2, 3)
        for q in polys:
            assert q.constant_term() == 0

    def test_random_roundtrips(self):
        rng = random.Random(8)
        for _ in range(12):
            x = G23.element([rng.randint(-2, 2) for _ in range(G23.k)])
            y = G23.element([rng.randint(-2, 2) for _ in range(G23.k)])
            n = rng.choice([2, 3])
            f, z = power_padding(n, x, y)
            assert power(x, n) * power(y, f) == power(x * z, n)

    def test_z_lies_in_y_and_commutators(self):
        # degree-1 coordinates of z must be a multiple of y's alone when
        # y is a generator
        rng = random.Random(9)
        x_full = G23.element([1, 2, 0, -1, 1])
        y = G23.generator(1)
        f, z = power_padding(2, x_full, y)
        assert z.abelianized()[0] == 0

    def test_depends_only_on_n_and_class(self):
        assert padding_exponent(2, 3) == padding_data(2, 3)[0]
        f23 = padding_exponent(2, 3)
        g24 = free_nilpotent_group(2, 3)
        x = g24.generator(0)
        y = g24.generator(1)
        f, _ = power_padding(2, x, y)
        assert f == f23


class TestFreeRankCertificate:
    def test_scaled_generators(self):
        for g, c in [(2, 2), (3, 3)]:
            group = free_nilpotent_group(g, c)
            gens = [power(group.generator(i), 2 ** (c - 1)) for i in range(g)]
            assert free_rank_certificate(gens)

    def test_dependent_pair_fails(self):
        a, _ = G22.generators()
        assert not free_rank_certificate([a, power(a, 2)])

    def test_commutator_perturbation_passes(self):
        a, b = G22.generators()
        comm = a.inverse() * b.inverse() * a * b
        assert free_rank_certificate([a * comm, b])

    def test_too_many_elements(self):
        a, b = G22.generators()
        with pytest.raises(ValueError):
            free_rank_certificate([a, b, a * b])
