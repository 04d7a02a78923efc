"""Tests for the intersection-theoretic tables and lattice arithmetic."""

import pytest

from ellcy import geometry
from ellcy.geometry import (CurveClass, Gamma19Class, LatticeGram, NLIndex,
                            E8_GRAM, K3_POLARIZATION)


class TestPairing:
    def test_determinant(self):
        assert geometry._det(geometry.pairing_matrix()) == -1

    def test_table_entries(self):
        assert geometry.pair(1, CurveClass(c=1)) == -1
        assert geometry.pair(3, CurveClass(e=1)) == 0
        assert geometry.pair(1, CurveClass(f=1)) == -2
        assert geometry.pair(2, CurveClass(f=1)) == 1

    def test_bad_index(self):
        with pytest.raises(ValueError):
            geometry.pair(4, CurveClass(c=1))


class TestClassToDegrees:
    def test_fiber_family(self):
        for n in range(6):
            beta = CurveClass(e=n, f=1)
            assert geometry.class_to_degrees(beta) == (n - 2, 1)

    def test_multifiber_family(self):
        for m in range(1, 4):
            for n in range(6):
                beta = CurveClass(e=n, f=m)
                assert geometry.class_to_degrees(beta) == (n - 2 * m, m)

    def test_zero_class(self):
        assert geometry.class_to_degrees(CurveClass()) == (0, 0)


class TestTripleIntersections:
    def test_table(self):
        expected = {
            (1, 1, 1): 8, (1, 1, 2): -1, (1, 1, 3): -2,
            (1, 2, 2): -1, (1, 2, 3): 1, (1, 3, 3): 0,
            (2, 2, 2): 0, (2, 2, 3): 0, (2, 3, 3): 0, (3, 3, 3): 0,
        }
        for (i, j, k), v in expected.items():
            assert geometry.triple_intersection(i, j, k) == v

    def test_symmetric(self):
        import itertools
        for i, j, k in itertools.product((1, 2, 3), repeat=3):
            base = geometry.triple_intersection(i, j, k)
            for perm in itertools.permutations((i, j, k)):
                assert geometry.triple_intersection(*perm) == base

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            geometry.triple_intersection(0, 1, 1)


class TestPushforward:
    def test_fibre_class(self):
        fibre = Gamma19Class(3, (-1,) * 9)
        assert geometry.pushforward(fibre) == CurveClass(e=1)

    def test_section_class(self):
        c0 = Gamma19Class(0, (1, 0, 0, 0, 0, 0, 0, 0, 0))
        assert geometry.pushforward(c0) == CurveClass(c=1)

    def test_exceptional_curves(self):
        for i in range(1, 9):
            b = [0] * 9
            b[i] = 1
            assert geometry.pushforward(Gamma19Class(0, tuple(b))) == \
                CurveClass(c=1, e=1)

    def test_line_class(self):
        h = Gamma19Class(1, (0,) * 9)
        assert geometry.pushforward(h) == CurveClass(c=3, e=3)

    def test_orthogonal_complement_killed(self):
        # spanning set: b0 = 0 and 3a + sum b_i = 0
        samples = [Gamma19Class(1, (0, -3, 0, 0, 0, 0, 0, 0, 0)),
                   Gamma19Class(2, (0, -1, -1, -1, -1, -1, -1, 0, 0))]
        for i in range(1, 8):
            b = [0] * 9
            b[i], b[i + 1] = 1, -1
            samples.append(Gamma19Class(0, tuple(b)))
        for gamma in samples:
            assert geometry.pushforward(gamma).is_zero()

    def test_fiber_coordinate_always_zero(self):
        gamma = Gamma19Class(5, (2, -3, 1, 0, 4, 0, 0, 1, -2))
        assert geometry.pushforward(gamma).f == 0


class TestE8:
    def test_unimodular(self):
        assert E8_GRAM.det() == 1

    def test_even_negative_definite_on_samples(self):
        vectors = [(1, 0, 0, 0, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0, 0, 0),
                   (2, 3, 1, 0, -1, 2, 0, 1), (0, 0, 0, 0, 0, 0, 0, 1)]
        for v in vectors:
            n = E8_GRAM.norm(v)
            assert n < 0
            assert n % 2 == 0

    def test_effectivity(self):
        zero = (0,) * 8
        root = (1, 0, 0, 0, 0, 0, 0, 0)
        assert geometry.is_effective(0, zero)
        assert not geometry.is_effective(0, root)
        assert geometry.is_effective(1, root)

    def test_effectivity_monotone_in_n(self):
        lam = (2, 1, -1, 0, 0, 1, 0, 1)
        states = [geometry.is_effective(n, lam) for n in range(0, 30)]
        assert states == sorted(states)  # False before True

    def test_effectivity_reflection_invariant(self):
        # reflect in a simple root: s_i(v) = v + (Gv)_i e_i
        lam = [2, 1, -1, 0, 0, 1, 0, 1]
        for i in range(8):
            gv = sum(E8_GRAM.gram[i][j] * lam[j] for j in range(8))
            reflected = list(lam)
            reflected[i] += gv
            assert E8_GRAM.norm(reflected) == E8_GRAM.norm(lam)
            for n in range(0, 10):
                assert geometry.is_effective(n, reflected) == \
                    geometry.is_effective(n, lam)


class TestNLDiscriminant:
    def test_fiber_formula(self):
        for h in range(5):
            for n in range(-2, 6):
                idx = NLIndex(h, (n - 2, 1))
                assert geometry.nl_discriminant(K3_POLARIZATION, idx) == \
                    2 * n - 2 * h

    def test_multifiber_formula(self):
        for h in range(4):
            for m in range(1, 4):
                for n in range(-2, 6):
                    idx = NLIndex(h, (n - 2 * m, m))
                    assert geometry.nl_discriminant(K3_POLARIZATION, idx) == \
                        2 - 2 * h + 2 * n * m - 2 * m * m

    def test_origin(self):
        assert geometry.nl_discriminant(K3_POLARIZATION,
                                        NLIndex(0, (0, 0))) == 2

    def test_symmetric_under_basis_permutation(self):
        g = LatticeGram(2, ((-2, 1), (1, 0)))
        swapped = LatticeGram(2, ((0, 1), (1, -2)))
        for h in range(3):
            for d1 in range(-3, 3):
                for d2 in range(-3, 3):
                    assert geometry.nl_discriminant(g, NLIndex(h, (d1, d2))) \
                        == geometry.nl_discriminant(swapped,
                                                    NLIndex(h, (d2, d1)))

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            geometry.nl_discriminant(K3_POLARIZATION, NLIndex(0, (1, 2, 3)))


class TestEulerCharacteristic:
    def test_degree_eight(self):
        data = geometry.euler_characteristic(8)
        assert data.deg_K_delta == 1056
        assert data.cusps == 192
        assert data.e_delta == -672
        assert data.e_X == -480

    def test_degree_one(self):
        data = geometry.euler_characteristic(1)
        assert (data.deg_K_delta, data.cusps, data.e_delta, data.e_X) == \
            (132, 24, -84, -60)

    def test_linear_in_l_squared(self):
        base = geometry.euler_characteristic(1)
        for k in range(2, 12):
            data = geometry.euler_characteristic(k)
            assert data.deg_K_delta == k * base.deg_K_delta
            assert data.cusps == k * base.cusps
            assert data.e_delta == k * base.e_delta
            assert data.e_X == k * base.e_X

    def test_definitional_identity(self):
        for k in (1, 3, 8, 17):
            data = geometry.euler_characteristic(k)
            assert data.e_X == data.e_delta + data.cusps

    def test_invalid(self):
        with pytest.raises(ValueError):
            geometry.euler_characteristic(0)


class TestBlowupAndWeierstrass:
    def test_blowup_degrees(self):
        assert geometry.blowup_degree(0) == 9
        assert geometry.blowup_degree(1) == 8
        assert geometry.blowup_degree(8) == 1

    def test_blowup_out_of_range(self):
        with pytest.raises(ValueError):
            geometry.blowup_degree(9)

    def test_weierstrass_degrees(self):
        degs = geometry.weierstrass_degrees()
        assert degs.g2_deg == 12
        assert degs.g3_deg == 18
        assert degs.delta_deg == 36


class TestHodge:
    def test_consistency(self):
        assert geometry.hodge_consistency()

    def test_betti_numbers(self):
        assert geometry.betti(2) == 3
        assert geometry.betti(3) == 488
        assert [geometry.betti(k) for k in range(7)] == \
            [1, 0, 3, 488, 3, 0, 1]


class TestLatticeGram:
    def test_symmetry_enforced(self):
        with pytest.raises(ValueError):
            LatticeGram(2, ((0, 1), (2, 0)))

    def test_shape_enforced(self):
        with pytest.raises(ValueError):
            LatticeGram(3, ((1, 0), (0, 1)))

    def test_gamma11_discriminant(self):
        # Gram of the sublattice spanned by C0 and 3H - sum C_i in the
        # diagonal form diag(1, -1, ..., -1)
        c0 = [0, 1, 0, 0, 0, 0, 0, 0, 0, 0]
        fibre = [3] + [-1] * 9
        diag = [1] + [-1] * 9

        def dot(u, v):
            return sum(d * a * b for d, a, b in zip(diag, u, v))

        gram = LatticeGram(2, ((dot(c0, c0), dot(c0, fibre)),
                               (dot(fibre, c0), dot(fibre, fibre))))
        assert gram.gram == ((-1, 1), (1, 0))
        assert abs(gram.det()) == 1
