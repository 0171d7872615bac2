"""Tests for the exact polynomial / rational-function arithmetic layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prymkit.polynomials import (
    Poly,
    RatFunc,
    TPoly,
    resultant,
    tpoly_over_ratfunc,
    tpoly_to_poly_coeffs,
    yun_squarefree,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)
polys = st.lists(rationals, min_size=0, max_size=5).map(Poly)


class TestPoly:
    def test_degree_and_normalization(self):
        assert Poly((1, 2, 0, 0)).degree == 1
        assert Poly.zero().degree == -1
        assert Poly((0,)).is_zero()

    @settings(max_examples=80, deadline=None)
    @given(polys, polys)
    def test_divmod_identity(self, a, b):
        if b.is_zero():
            with pytest.raises(ZeroDivisionError):
                a.divmod(b)
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree or r.is_zero()

    @settings(max_examples=80, deadline=None)
    @given(polys, polys)
    def test_gcd_divides_both(self, a, b):
        g = a.gcd(b)
        if g.is_zero():
            assert a.is_zero() and b.is_zero()
            return
        assert (a % g).is_zero()
        assert (b % g).is_zero()
        assert g.lc == 1

    def test_exact_division_raises_on_remainder(self):
        with pytest.raises(ValueError):
            Poly((1, 1)) / Poly((0, 1))

    def test_evaluation_and_roots(self):
        p = Poly((-1, 0, 1))   # x^2 - 1
        assert p(1) == 0 and p(2) == 3
        assert p.root_multiplicity(1) == 1
        assert (p * p).root_multiplicity(-1) == 2
        assert p.root_multiplicity(3) == 0

    def test_squarefree_predicate(self):
        assert Poly((-1, 0, 1)).is_squarefree()
        assert not (Poly((0, 1)) * Poly((0, 1))).is_squarefree()


class TestRatFunc:
    def test_normalization(self):
        r = RatFunc(Poly((0, 2)), Poly((0, 0, 4)))   # 2x / 4x^2 = 1/(2x)
        assert r.num == Poly.constant(Fraction(1, 2))
        assert r.den == Poly((0, 1))

    @settings(max_examples=50, deadline=None)
    @given(polys, polys)
    def test_field_inverse(self, a, b):
        if a.is_zero() or b.is_zero():
            return
        r = RatFunc(a, b)
        assert r * r.inverse() == RatFunc.one()


class TestResultant:
    def test_linear_pair(self):
        # Res(t - p, t - q) = q - p evaluated via the shared-root criterion
        x = RatFunc(Poly.x())
        a = TPoly((-x, RatFunc.one()), RatFunc.zero())
        b = TPoly((x, RatFunc.one()), RatFunc.zero())
        r = resultant(a, b)
        assert r.as_poly() == Poly((0, 2))    # (x) - (-x)

    def test_vanishes_iff_common_root(self):
        x = RatFunc(Poly.x())
        a = TPoly((-x, RatFunc.one()), RatFunc.zero())
        assert resultant(a, a).is_zero()

    def test_quadratic_discriminant_shape(self):
        # Res_t(t^2 - x, 2t) = -4x
        x = RatFunc(Poly.x())
        two = RatFunc(Poly.constant(2))
        a = TPoly((-x, RatFunc.zero(), RatFunc.one()), RatFunc.zero())
        b = TPoly((RatFunc.zero(), two), RatFunc.zero())
        assert resultant(a, b).as_poly() == Poly((0, -4))


class TestYun:
    def test_profile(self):
        x = Poly.x()
        lin = TPoly((-x, Poly.one()), Poly.zero())          # t - x
        sq = tpoly_over_ratfunc(lin * lin)
        blocks = yun_squarefree(sq)
        assert len(blocks) == 1
        q, m = blocks[0]
        assert m == 2
        assert tpoly_to_poly_coeffs(q) == lin

    def test_reconstruction(self):
        x = Poly.x()
        a = TPoly((-x, Poly.one()), Poly.zero())
        b = TPoly((Poly.one(), Poly.one()), Poly.zero())
        p = tpoly_over_ratfunc(a * a * a * b)
        blocks = yun_squarefree(p)
        acc = TPoly((RatFunc.one(),), RatFunc.zero())
        for q, m in blocks:
            acc = acc * q ** m
        assert acc == p
