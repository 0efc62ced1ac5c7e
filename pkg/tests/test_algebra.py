"""Core multivector arithmetic: products, involutions, projections."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotoreig.algebra import (
    CL30,
    CL31,
    Multivector,
    Signature,
    canonical_order,
    dagger,
    geometric_product,
    grade_project,
    inner_product,
    outer_product,
    pseudoscalar,
    reverse,
    spatial_inversion,
    versor_inverse,
)


def e(sig, *indices):
    out = Multivector.scalar(sig, 1.0)
    for i in indices:
        out = out * Multivector.basis_vector(sig, i)
    return out


coeff = st.floats(-10.0, 10.0, allow_nan=False, allow_infinity=False)


def mv_strategy(sig):
    return st.lists(coeff, min_size=sig.dim, max_size=sig.dim).map(
        lambda c: Multivector(sig, np.array(c))
    )


class TestSignature:
    def test_basic_counts(self):
        assert CL30 == Signature(3, 0)
        assert CL31.n == 4 and CL31.dim == 16

    def test_metric_signs(self):
        assert [CL31.metric_sign(i) for i in range(4)] == [1, 1, 1, -1]

    def test_rejects_empty_and_oversized(self):
        with pytest.raises(ValueError):
            Signature(0, 0)
        with pytest.raises(ValueError):
            Signature(7, 2)


class TestGeometricProduct:
    def test_euclidean_square(self):
        assert (e(CL30, 1) * e(CL30, 1)).approx_eq(Multivector.scalar(CL30, 1.0))

    def test_timelike_square(self):
        assert (e(CL31, 4) * e(CL31, 4)).approx_eq(Multivector.scalar(CL31, -1.0))

    def test_bilinear_expansion(self):
        a = e(CL30, 1) + e(CL30, 2)
        b = e(CL30, 1) - e(CL30, 2)
        assert (a * b).approx_eq(-2.0 * e(CL30, 1, 2))

    def test_anticommutation(self):
        for sig in (CL30, CL31):
            for i in range(1, sig.n + 1):
                for j in range(1, sig.n + 1):
                    anti = e(sig, i) * e(sig, j) + e(sig, j) * e(sig, i)
                    expected = 2.0 * sig.metric_sign(i - 1) if i == j else 0.0
                    assert anti.approx_eq(Multivector.scalar(sig, expected))

    def test_signature_mismatch(self):
        with pytest.raises(ValueError):
            geometric_product(e(CL30, 1), e(CL31, 1))

    @settings(max_examples=60, deadline=None)
    @given(mv_strategy(CL31), mv_strategy(CL31), mv_strategy(CL31))
    def test_associativity(self, a, b, c):
        lhs = (a * b) * c
        rhs = a * (b * c)
        assert np.max(np.abs((lhs - rhs).coeffs)) <= 1e-9 * max(
            1.0, a.norm() * b.norm() * c.norm()
        )


class TestOuterInner:
    def test_outer_basis(self):
        assert outer_product(e(CL30, 1), e(CL30, 2)).approx_eq(e(CL30, 1, 2))

    def test_outer_self_vanishes(self):
        assert (e(CL30, 1) ^ e(CL30, 1)).norm() == 0.0

    def test_outer_bilinear(self):
        lhs = (e(CL30, 1) + e(CL30, 2)) ^ (e(CL30, 2) + e(CL30, 3))
        rhs = e(CL30, 1, 2) + e(CL30, 1, 3) + e(CL30, 2, 3)
        assert lhs.approx_eq(rhs)

    def test_inner_vectors(self):
        assert inner_product(e(CL30, 1), e(CL30, 1)).approx_eq(
            Multivector.scalar(CL30, 1.0)
        )

    def test_inner_vector_bivector(self):
        assert (e(CL30, 1) | e(CL30, 1, 2)).approx_eq(e(CL30, 2))

    def test_inner_k_with_e12(self):
        # (kx e1 + ky e2) . e12 = kx e2 - ky e1
        kx, ky = 0.7, -1.3
        k = kx * e(CL30, 1) + ky * e(CL30, 2)
        assert (k | e(CL30, 1, 2)).approx_eq(kx * e(CL30, 2) - ky * e(CL30, 1))

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(coeff, min_size=3, max_size=3),
        st.lists(coeff, min_size=3, max_size=3),
    )
    def test_vector_product_split(self, ac, bc):
        a = Multivector.vector(CL30, ac)
        b = Multivector.vector(CL30, bc)
        assert (a * b).approx_eq((a | b) + (a ^ b), tol=1e-9)


class TestInvolutions:
    def test_reverse_bivector(self):
        m = Multivector.scalar(CL30, 1.0) + e(CL30, 1, 2)
        assert (~m).approx_eq(Multivector.scalar(CL30, 1.0) - e(CL30, 1, 2))

    def test_reverse_trivector(self):
        assert reverse(e(CL30, 1, 2, 3)).approx_eq(-1.0 * e(CL30, 1, 2, 3))

    def test_reverse_grade4(self):
        assert reverse(e(CL31, 1, 2, 3, 4)).approx_eq(e(CL31, 1, 2, 3, 4))

    @settings(max_examples=60, deadline=None)
    @given(mv_strategy(CL31), mv_strategy(CL31))
    def test_reverse_antiautomorphism(self, a, b):
        lhs = reverse(a * b)
        rhs = reverse(b) * reverse(a)
        assert np.max(np.abs((lhs - rhs).coeffs)) <= 1e-9 * max(
            1.0, a.norm() * b.norm()
        )

    def test_spatial_inversion_generators(self):
        assert spatial_inversion(e(CL31, 1)).approx_eq(-1.0 * e(CL31, 1))
        assert spatial_inversion(e(CL31, 4)).approx_eq(e(CL31, 4))
        assert spatial_inversion(e(CL31, 3, 4)).approx_eq(-1.0 * e(CL31, 3, 4))

    def test_spatial_inversion_needs_cl31(self):
        with pytest.raises(ValueError):
            spatial_inversion(e(CL30, 1))

    @settings(max_examples=40, deadline=None)
    @given(mv_strategy(CL31), mv_strategy(CL31))
    def test_spatial_inversion_multiplicative(self, a, b):
        lhs = spatial_inversion(a * b)
        rhs = spatial_inversion(a) * spatial_inversion(b)
        assert np.max(np.abs((lhs - rhs).coeffs)) <= 1e-9 * max(
            1.0, a.norm() * b.norm()
        )

    def test_dagger_module_square(self):
        a0, b3 = 0.8, -1.7
        psi = Multivector.scalar(CL31, a0) + b3 * e(CL31, 3, 4)
        assert (dagger(psi) * psi).scalar_part() == pytest.approx(a0**2 + b3**2)

    @settings(max_examples=40, deadline=None)
    @given(mv_strategy(CL31))
    def test_dagger_involution(self, m):
        assert dagger(dagger(m)).approx_eq(m, tol=1e-10)


class TestGradesAndPseudoscalar:
    def test_grade_project_examples(self):
        m = Multivector.scalar(CL30, 1.0) + e(CL30, 1) + e(CL30, 1, 2)
        assert grade_project(m, 1).approx_eq(e(CL30, 1))
        assert m.grade(0).scalar_part() == 1.0

    def test_grade_out_of_range(self):
        with pytest.raises(ValueError):
            grade_project(e(CL30, 1), 4)

    def test_grade_decomposition_sums(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            m = Multivector(CL31, rng.standard_normal(16))
            total = Multivector.zero(CL31)
            for k in range(5):
                total = total + m.grade(k)
            assert total.approx_eq(m, tol=0.0)

    def test_pseudoscalar_squares(self):
        for sig in (CL30, CL31):
            i = pseudoscalar(sig)
            assert (i * i).approx_eq(Multivector.scalar(sig, -1.0))


class TestVersorInverse:
    def test_vector(self):
        assert versor_inverse(e(CL30, 1)).approx_eq(e(CL30, 1))

    def test_unit_rotor(self):
        r = (Multivector.scalar(CL30, 1.0) + e(CL30, 1, 2)) / math.sqrt(2.0)
        assert versor_inverse(r).approx_eq(
            (Multivector.scalar(CL30, 1.0) - e(CL30, 1, 2)) / math.sqrt(2.0)
        )

    def test_scaled_bivector(self):
        v = 2.0 * e(CL30, 1, 2)
        inv = versor_inverse(v)
        assert inv.approx_eq(-0.5 * e(CL30, 1, 2))
        assert (v * inv).approx_eq(Multivector.scalar(CL30, 1.0))

    def test_null_input_rejected(self):
        with pytest.raises(ValueError):
            versor_inverse(Multivector.zero(CL30))


class TestSerialization:
    def test_text_form(self):
        m = Multivector.scalar(CL30, 1.0) - 0.5 * e(CL30, 1, 2)
        assert str(m) == "1 - 0.5e12"
        assert str(2.0 * e(CL31, 1, 3, 4)) == "2e134"
        assert str(Multivector.zero(CL30)) == "0"

    def test_json_round_trip(self):
        rng = np.random.default_rng(11)
        for sig in (CL30, CL31):
            m = Multivector(sig, rng.standard_normal(sig.dim))
            d = m.to_json_dict()
            assert d["signature"] == [sig.p, sig.q]
            assert len(d["coeffs"]) == sig.dim
            assert Multivector.from_json_dict(d).approx_eq(m, tol=0.0)

    def test_canonical_order_sorted_by_grade_then_mask(self):
        order = canonical_order(CL31)
        keys = [(bin(m).count("1"), m) for m in order]
        assert keys == sorted(keys)
