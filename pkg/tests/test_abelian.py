"""Tests for the integer-matrix and finite-abelian-group engine."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prymkit.abelian import (
    AmbientMismatch,
    FinAbGroup,
    IntMatrix,
    TorsionAmbient,
    dual_group,
    dual_of_inclusion,
    hermite_normal_form,
    intersect,
    left_kernel,
    preimage_mul,
    smith_normal_form,
    structure,
    subgroup_from_generators,
)


def _snf_diag(d):
    return [d.get(i, i) for i in range(min(d.rows, d.cols))]


class TestSmithNormalForm:
    def test_identity(self):
        a = IntMatrix.identity(2)
        u, d, v = smith_normal_form(a)
        assert d == IntMatrix.identity(2)

    def test_rank_one_projector(self):
        a = IntMatrix.from_rows([[1, 0], [0, 0]])
        _u, d, _v = smith_normal_form(a)
        assert _snf_diag(d) == [1, 0]

    def test_two_by_two_invariant_factors(self):
        a = IntMatrix.from_rows([[2, 4], [6, 8]])
        u, d, v = smith_normal_form(a)
        assert _snf_diag(d) == [2, 4]
        assert (u @ a) @ v == d
        assert u.is_unimodular() and v.is_unimodular()

    def test_zero_matrix(self):
        a = IntMatrix.zero(2, 3)
        _u, d, _v = smith_normal_form(a)
        assert _snf_diag(d) == [0, 0]

    @settings(max_examples=120, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10 ** 6))
    def test_random_soundness(self, rows, cols, seed):
        rng = random.Random(seed)
        a = IntMatrix(rows, cols,
                      tuple(rng.randint(-50, 50) for _ in range(rows * cols)))
        u, d, v = smith_normal_form(a)
        assert (u @ a) @ v == d
        assert u.is_unimodular() and v.is_unimodular()
        diag = _snf_diag(d)
        assert all(e >= 0 for e in diag)
        nz = [e for e in diag if e != 0]
        assert all(b % a_ == 0 for a_, b in zip(nz, nz[1:]))
        # off-diagonal must vanish
        for i in range(d.rows):
            for j in range(d.cols):
                if i != j:
                    assert d.get(i, j) == 0

    def test_left_kernel_annihilates(self):
        a = IntMatrix.from_rows([[2, 4], [1, 2], [3, 6]])
        for w in left_kernel(a):
            prod = [sum(w[i] * a.get(i, j) for i in range(a.rows))
                    for j in range(a.cols)]
            assert all(e == 0 for e in prod)
        assert len(left_kernel(a)) == 2


class TestHermiteNormalForm:
    def test_reduction_above_pivot(self):
        basis = hermite_normal_form([[1, 4], [0, 9]])
        assert basis == [[1, 4], [0, 9]]
        basis = hermite_normal_form([[2, 7], [0, 3]])
        assert basis == [[2, 1], [0, 3]]

    def test_row_order_irrelevant(self):
        b1 = hermite_normal_form([[3, 1], [1, 2]])
        b2 = hermite_normal_form([[1, 2], [3, 1]])
        assert b1 == b2


class TestSubgroups:
    def test_canonical_duplicates(self):
        amb = TorsionAmbient(1, 4)
        h1 = subgroup_from_generators(amb, IntMatrix.from_rows([[2, 0]]))
        h2 = subgroup_from_generators(amb, IntMatrix.from_rows([[2, 0], [2, 0]]))
        assert h1 == h2
        assert h1.order == 2

    def test_full_group_from_coprime_generators(self):
        # requires genus-1 rank 2; realize Z/6 inside (Z/6)^2 on one axis
        amb = TorsionAmbient(1, 6)
        h = subgroup_from_generators(amb, IntMatrix.from_rows([[2, 0], [3, 0]]))
        assert h.order == 6
        assert structure(h).invariant_factors == (6,)

    def test_intersection_with_full_ambient(self):
        amb = TorsionAmbient(1, 4)
        h = subgroup_from_generators(amb, IntMatrix.from_rows([[2, 1]]))
        assert intersect(h, amb.full_subgroup()) == h

    def test_intersection_brute_force(self):
        amb = TorsionAmbient(1, 12)
        h1 = subgroup_from_generators(amb, IntMatrix.from_rows([[2, 0], [0, 3]]))
        h2 = subgroup_from_generators(amb, IntMatrix.from_rows([[3, 0], [0, 2]]))
        got = intersect(h1, h2)
        assert got.elements() == h1.elements() & h2.elements()

    def test_intersection_ambient_mismatch(self):
        h1 = TorsionAmbient(1, 4).full_subgroup()
        h2 = TorsionAmbient(1, 8).full_subgroup()
        with pytest.raises(AmbientMismatch):
            intersect(h1, h2)

    def test_membership(self):
        amb = TorsionAmbient(1, 8)
        h = subgroup_from_generators(amb, IntMatrix.from_rows([[2, 4]]))
        assert h.contains((2, 4))
        assert h.contains((6, 4))   # 3 * (2,4) = (6, 12) = (6, 4)
        assert not h.contains((1, 0))

    def test_embed_scales_generators(self):
        small = TorsionAmbient(1, 2)
        h = subgroup_from_generators(small, IntMatrix.from_rows([[1, 0]]))
        big = h.embed(TorsionAmbient(1, 6))
        assert big.order == 2
        assert big.contains((3, 0))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_canonicality_random(self, seed):
        rng = random.Random(seed)
        M = rng.choice([2, 3, 4, 6, 8])
        amb = TorsionAmbient(1, M)
        rows = [[rng.randrange(M), rng.randrange(M)]
                for _ in range(rng.randint(1, 3))]
        h = subgroup_from_generators(amb, IntMatrix.from_rows(rows))
        elems = sorted(h.elements())
        # regenerate from the full element set: same subgroup, same matrix
        h2 = subgroup_from_generators(
            amb, IntMatrix.from_rows([list(e) for e in elems]))
        assert h2 == h


class TestPreimage:
    def test_identity_multiplier(self):
        amb = TorsionAmbient(1, 4)
        h = subgroup_from_generators(amb, IntMatrix.from_rows([[2, 0]]))
        assert preimage_mul(1, h) == h

    def test_two_torsion_preimage_of_zero(self):
        amb = TorsionAmbient(1, 4)
        pre = preimage_mul(2, amb.trivial_subgroup())
        assert pre.elements() == {(0, 0), (2, 0), (0, 2), (2, 2)}

    def test_cyclic_example(self):
        amb = TorsionAmbient(1, 8)
        h = subgroup_from_generators(amb, IntMatrix.from_rows([[4, 0]]))
        pre = preimage_mul(2, h)
        expected = {v for v in
                    {(a, b) for a in range(8) for b in range(8)}
                    if ((2 * v[0]) % 8, (2 * v[1]) % 8) in h.elements()}
        assert pre.elements() == expected

    def test_modulus_too_small_is_an_error(self):
        amb = TorsionAmbient(1, 4)
        h = amb.full_subgroup()   # exponent 4; preimage under [2] needs M >= 8
        with pytest.raises(ValueError):
            preimage_mul(2, h)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_adjunction_exhaustive(self, seed):
        rng = random.Random(seed)
        M = rng.choice([4, 6, 8, 9, 12])
        amb = TorsionAmbient(1, M)
        rows = [[rng.randrange(M), rng.randrange(M)]]
        h = subgroup_from_generators(amb, IntMatrix.from_rows(rows))
        legal = [m for m in range(1, M + 1)
                 if M % (m * structure(h).exponent) == 0]
        m = rng.choice(legal)
        pre = preimage_mul(m, h)
        helems = h.elements()
        for a in range(M):
            for b in range(M):
                inh = ((m * a) % M, (m * b) % M) in helems
                assert pre.contains((a, b)) == inh


class TestStructureAndDuals:
    def test_trivial(self):
        amb = TorsionAmbient(1, 4)
        assert structure(amb.trivial_subgroup()).invariant_factors == ()
        assert structure(amb.trivial_subgroup()).order == 1

    def test_full_group(self):
        amb = TorsionAmbient(2, 3)
        assert structure(amb.full_subgroup()).invariant_factors == (3, 3, 3, 3)

    def test_cyclic_of_order_six(self):
        amb = TorsionAmbient(1, 12)
        h = subgroup_from_generators(amb, IntMatrix.from_rows([[6, 0], [0, 4]]))
        # orders 2 and 3 on independent axes combine to a cyclic group
        assert structure(h).invariant_factors == (6,)
        assert len(h.elements()) == 6

    def test_dual_group_identity(self):
        assert dual_group(FinAbGroup(())).invariant_factors == ()
        assert dual_group(FinAbGroup((2, 2))).invariant_factors == (2, 2)
        assert dual_group(FinAbGroup((2, 6))).invariant_factors == (2, 6)

    def test_invariant_factor_validation(self):
        with pytest.raises(ValueError):
            FinAbGroup((1, 2))
        with pytest.raises(ValueError):
            FinAbGroup((4, 2))


class TestDualOfInclusion:
    def test_trivial_subgroup(self):
        amb = TorsionAmbient(1, 2)
        hom = dual_of_inclusion(amb.trivial_subgroup(), 2)
        assert hom.kernel().order == 4
        assert hom.image().order == 1

    def test_full_two_torsion_bijection(self):
        amb = TorsionAmbient(1, 2)
        hom = dual_of_inclusion(amb.full_subgroup(), 2)
        assert hom.kernel().order == 1
        assert hom.image().order == 4

    def test_half_subgroup(self):
        amb = TorsionAmbient(1, 2)
        h = subgroup_from_generators(amb, IntMatrix.from_rows([[1, 0]]))
        hom = dual_of_inclusion(h, 2)
        assert hom.kernel().order == 2
        # pairing <x, (1,0)> = x_0 / 2; kernel is spanned by (0,1)
        assert hom.kernel().contains((0, 1))
        assert not hom.kernel().contains((1, 0))

    def test_not_in_n_torsion_rejected(self):
        amb = TorsionAmbient(1, 4)
        with pytest.raises(ValueError):
            dual_of_inclusion(amb.full_subgroup(), 2)

    def test_kernel_order_all_subgroups_small(self):
        for n in (2, 3, 4):
            amb = TorsionAmbient(1, n)
            seen = set()
            vecs = [(a, b) for a in range(n) for b in range(n)]
            for v1 in vecs:
                for v2 in vecs:
                    h = subgroup_from_generators(
                        amb, IntMatrix.from_rows([list(v1), list(v2)]))
                    if h.generators in seen:
                        continue
                    seen.add(h.generators)
                    hom = dual_of_inclusion(h, n)
                    assert hom.kernel().order * h.order == n ** 2
                    assert hom.image().order == h.order
