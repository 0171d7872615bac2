"""Tests for the norm engine: multiplication matrices, determinants,
the multiplicativity/power/component laws and the divisor-level norm."""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from prymkit.norms import (
    AlgebraElement,
    ParentMismatch,
    PointDivisor,
    SpectralPoly,
    mul_matrix,
    norm_component_law,
    norm_consistency_check,
    norm_divisor,
    norm_element,
    norm_multiplicativity_check,
    norm_power_law,
    norm_resultant_oracle,
    poly_matrix_det,
    quasi_free_det,
    spectral_mul,
    spectral_pow,
)
from prymkit.polynomials import Poly
from prymkit.verify import random_element, random_spectral

X = Poly.x()


def naive_det(m):
    """Cofactor-free Leibniz determinant; independent oracle for tiny sizes."""
    n = len(m)
    total = Poly.zero()
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Poly.one()
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + (term if sign == 1 else -term)
    return total


class TestMulMatrix:
    def test_identity_element(self):
        s = SpectralPoly(3, 1, (Poly.zero(), X, Poly.one()))
        m = mul_matrix(s, s.one())
        for i in range(3):
            for j in range(3):
                assert m[i][j] == (Poly.one() if i == j else Poly.zero())

    def test_t_on_square_root_cover(self):
        s = SpectralPoly(2, 1, (Poly.zero(), -X))   # t^2 - x
        m = mul_matrix(s, s.t())
        assert m == [[Poly.zero(), X], [Poly.one(), Poly.zero()]]

    def test_companion_shape(self):
        a3 = Poly((1, 0, 0, 2))
        s = SpectralPoly(3, 1, (Poly.zero(), Poly.zero(), a3))  # t^3 + a_3
        m = mul_matrix(s, s.t())
        assert m[0] == [Poly.zero(), Poly.zero(), -a3]
        assert m[1] == [Poly.one(), Poly.zero(), Poly.zero()]
        assert m[2] == [Poly.zero(), Poly.one(), Poly.zero()]

    def test_parent_mismatch(self):
        s1 = SpectralPoly(2, 1, (Poly.zero(), -X))
        s2 = SpectralPoly(2, 1, (Poly.zero(), X))
        with pytest.raises(ParentMismatch):
            mul_matrix(s1, s2.t())


class TestDeterminant:
    def test_bareiss_matches_naive(self):
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(1, 3)
            m = [[Poly([rng.randint(-3, 3) for _ in range(2)])
                  for _ in range(n)] for _ in range(n)]
            assert poly_matrix_det(m) == naive_det(m)

    def test_companion_determinant_pinned(self):
        # det of multiplication by t on R[t]/(t^n + a_n) is (-1)^n * a_n,
        # frozen against the Leibniz oracle for n = 2, 3, 4
        for n in (2, 3, 4):
            a_n = Poly([1, 2])
            coeffs = tuple(Poly.zero() for _ in range(n - 1)) + (a_n,)
            s = SpectralPoly(n, 2, coeffs)
            m = mul_matrix(s, s.t())
            expected = a_n if n % 2 == 0 else -a_n
            assert naive_det(m) == expected
            assert norm_element(s, s.t()) == expected


class TestNormLaws:
    def test_scalar_element(self):
        s = SpectralPoly(3, 1, (Poly.zero(), X, Poly.one()))
        lam = Fraction(5, 2)
        u = s.one().scale(lam)
        assert norm_element(s, u) == Poly.constant(lam ** 3)

    def test_pullback_of_base_function(self):
        s = SpectralPoly(3, 1, (Poly.zero(), X, Poly.one()))
        r = Poly((1, -2, 0, 1))
        u = AlgebraElement(s, (r, Poly.zero(), Poly.zero()))
        assert norm_element(s, u) == r ** 3

    def test_multiplicativity_random(self):
        rng = random.Random(3)
        for _ in range(25):
            s = random_spectral(rng)
            u, v = random_element(rng, s), random_element(rng, s)
            assert norm_multiplicativity_check(s, u, v)

    def test_power_law_linear(self):
        p = SpectralPoly(1, 1, (-X,))       # t - x
        sq = spectral_pow(p, 2)
        assert norm_element(sq, sq.t()) == X * X
        assert norm_power_law(p, 2, sq.t())

    def test_power_law_random(self):
        rng = random.Random(17)
        for _ in range(15):
            p = random_spectral(rng, max_n=2)
            m = rng.randint(1, 3)
            u = random_element(rng, spectral_pow(p, m))
            assert norm_power_law(p, m, u)

    def test_component_law_split_points(self):
        b = SpectralPoly(1, 0, (Poly.constant(-1),))   # t - 1
        c = SpectralPoly(1, 0, (Poly.one(),))          # t + 1
        prod_poly = spectral_mul(b, c)
        assert norm_element(prod_poly, prod_poly.t()) == Poly.constant(-1)
        assert norm_component_law(b, c, prod_poly.t())

    def test_component_law_mixed_degrees(self):
        rng = random.Random(23)
        b = SpectralPoly(1, 1, (-X,))                    # t - x
        c = SpectralPoly(2, 1, (Poly.zero(), -X))        # t^2 - x
        prod_poly = spectral_mul(b, c)
        for _ in range(10):
            u = random_element(rng, prod_poly)
            assert norm_component_law(b, c, u)

    def test_component_law_rejects_common_factor(self):
        b = SpectralPoly(1, 1, (-X,))
        u = spectral_mul(b, b)
        with pytest.raises(ValueError):
            norm_component_law(b, b, u.t())

    def test_resultant_oracle(self):
        rng = random.Random(29)
        for _ in range(25):
            s = random_spectral(rng)
            u = random_element(rng, s)
            assert norm_element(s, u) == norm_resultant_oracle(s, u)


class TestQuasiFree:
    def test_reduced_level(self):
        p = SpectralPoly(1, 2, (-(X * X),))
        full = spectral_pow(p, 3)
        u = full.element((Poly.one(), Poly.one(), Poly.zero()))  # 1 + t
        assert quasi_free_det(p, 3, 1, u) == X * X + 1

    def test_intermediate_level_squares(self):
        p = SpectralPoly(1, 2, (-(X * X),))
        full = spectral_pow(p, 3)
        u = full.element((Poly.one(), Poly.one(), Poly.zero()))
        assert quasi_free_det(p, 3, 2, u) == (X * X + 1) ** 2

    def test_top_level_is_full_norm(self):
        rng = random.Random(41)
        p = random_spectral(rng, max_n=2)
        full = spectral_pow(p, 2)
        u = random_element(rng, full)
        assert quasi_free_det(p, 2, 2, u) == norm_element(full, u)

    def test_index_range(self):
        p = SpectralPoly(1, 1, (-X,))
        full = spectral_pow(p, 2)
        with pytest.raises(ValueError):
            quasi_free_det(p, 2, 3, full.t())


class TestDivisors:
    def cover(self):
        return SpectralPoly(2, 1, (Poly.zero(), -X))   # t^2 - x

    def test_point_must_lie_on_cover(self):
        with pytest.raises(ValueError):
            PointDivisor.build(self.cover(), [((1, 2), 1)])

    def test_pushforward_merges_fibers(self):
        s = self.cover()
        d = PointDivisor.build(s, [((1, 1), 1), ((1, -1), 1)])
        assert norm_divisor(s, d) == [(Fraction(1), 2)]

    def test_pushforward_drops_zero_weight(self):
        s = self.cover()
        d = PointDivisor.build(s, [((1, 1), 1), ((1, -1), -1)])
        assert norm_divisor(s, d) == []

    def test_consistency_unramified(self):
        s = self.cover()
        u = s.element((Poly.constant(-1), Poly.one()))  # t - 1, vanishes at (1,1)
        d = PointDivisor.build(s, [((1, 1), 1)])
        assert norm_element(s, u) == Poly((1, -1))      # 1 - x
        assert norm_consistency_check(s, u, d)

    def test_consistency_detects_wrong_divisor(self):
        s = self.cover()
        u = s.element((Poly.constant(-1), Poly.one()))
        d = PointDivisor.build(s, [((1, 1), 2)])        # wrong multiplicity
        assert not norm_consistency_check(s, u, d)

    def test_ramified_sample_rejected(self):
        s = self.cover()
        u = s.t()
        d = PointDivisor.build(s, [((0, 0), 1)])
        # the fiber over x = 0 is ramified (discriminant -4x vanishes)
        with pytest.raises(ValueError):
            norm_consistency_check(s, u, d)

    def test_trivial_element(self):
        s = self.cover()
        d = PointDivisor.build(s, [])
        assert norm_consistency_check(s, s.one(), d)
