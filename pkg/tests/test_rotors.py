"""Rotor construction, application, and composition."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotoreig.algebra import CL30, CL31, Multivector, pseudoscalar
from rotoreig.rotors import (
    Rotor,
    compose,
    is_rotor,
    rotate,
    rotor_exp,
    rotor_from_reflections,
    rotor_from_vectors,
)

E1 = Multivector.basis_vector(CL30, 1)
E2 = Multivector.basis_vector(CL30, 2)
E3 = Multivector.basis_vector(CL30, 3)
E12 = E1 * E2
E23 = E2 * E3
ONE = Multivector.scalar(CL30, 1.0)

angle = st.floats(-math.pi, math.pi, allow_nan=False)


def random_unit_vector(rng):
    v = rng.standard_normal(3)
    return Multivector.vector(CL30, v / np.linalg.norm(v))


class TestConstruction:
    def test_reflections_identity(self):
        assert rotor_from_reflections(E1, E1).value.approx_eq(ONE)

    def test_reflections_orthogonal(self):
        assert rotor_from_reflections(E1, E2).value.approx_eq(E12)

    def test_reflections_half_angle(self):
        n = (E1 + E2) / math.sqrt(2.0)
        r = rotor_from_reflections(E1, n)
        assert r.value.approx_eq((ONE + E12) / math.sqrt(2.0))
        assert (r.value * ~r.value).approx_eq(ONE)

    def test_reflections_reject_non_unit(self):
        with pytest.raises(ValueError):
            rotor_from_reflections(2.0 * E1, E2)

    def test_exp_zero_angle(self):
        assert rotor_exp(E12, 0.0).value.approx_eq(ONE)

    def test_exp_pi(self):
        assert rotor_exp(E12, math.pi).value.approx_eq(E12)

    def test_exp_quarter_turn_e23(self):
        assert rotor_exp(E23, math.pi / 2).value.approx_eq(
            (ONE + E23) / math.sqrt(2.0)
        )

    def test_exp_rejects_non_unit_bivector(self):
        with pytest.raises(ValueError):
            rotor_exp(E1, 1.0)
        with pytest.raises(ValueError):
            rotor_exp(2.0 * E12, 1.0)

    @settings(max_examples=40, deadline=None)
    @given(angle, angle)
    def test_exp_additivity(self, t, u):
        lhs = rotor_exp(E12, t).value * rotor_exp(E12, u).value
        assert lhs.approx_eq(rotor_exp(E12, t + u).value, tol=1e-10)


class TestRotorFromVectors:
    def test_identity(self):
        assert rotor_from_vectors(E3, E3).value.approx_eq(ONE)

    def test_e3_to_khat(self):
        for phi in (0.0, 0.3, 2.0, -1.1):
            khat = math.cos(phi) * E1 + math.sin(phi) * E2
            r = rotor_from_vectors(E3, khat)
            assert r.value.approx_eq((ONE + khat * E3) / math.sqrt(2.0))
            assert rotate(r, E3).approx_eq(khat)

    def test_e23_plane_half_angle(self):
        omega, gamma = 1.5, 0.7
        root = math.hypot(omega, gamma)
        ahat = (omega * E3 - gamma * E2) / root
        r = rotor_from_vectors(E3, ahat)
        theta = math.acos(omega / root)
        # rotation confined to the e23 plane
        assert r.value.approx_eq(rotor_exp(E23, -theta).value) or r.value.approx_eq(
            rotor_exp(E23, theta).value
        )
        assert rotate(r, E3).approx_eq(ahat)

    def test_takes_a_to_b_randomized(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            a, b = random_unit_vector(rng), random_unit_vector(rng)
            r = rotor_from_vectors(a, b)
            assert rotate(r, a).approx_eq(b, tol=1e-10)

    def test_matches_exp_form(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            a, b = random_unit_vector(rng), random_unit_vector(rng)
            plane = b ^ a
            if plane.norm() < 1e-6:
                continue
            bhat = plane / math.sqrt((plane * ~plane).scalar_part())
            theta = math.acos(np.clip((a | b).scalar_part(), -1.0, 1.0))
            assert rotor_from_vectors(a, b).value.approx_eq(
                rotor_exp(bhat, theta).value, tol=1e-10
            )

    def test_antiparallel_rejected(self):
        with pytest.raises(ValueError):
            rotor_from_vectors(E3, -1.0 * E3)

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError):
            rotor_from_vectors(E3, 0.5 * E1)


class TestRotate:
    def test_identity_rotor(self):
        m = Multivector(CL30, np.arange(8.0))
        assert rotate(Rotor(ONE), m).approx_eq(m)

    def test_e1_to_e2(self):
        assert rotate(rotor_from_vectors(E1, E2), E1).approx_eq(E2)

    def test_pseudoscalar_invariant(self):
        rng = np.random.default_rng(5)
        i3 = pseudoscalar(CL30)
        for _ in range(20):
            r = rotor_from_vectors(random_unit_vector(rng), random_unit_vector(rng))
            assert rotate(r, i3).approx_eq(i3, tol=1e-12)

    def test_structure_preservation(self):
        # linearity, product preservation, grade preservation, norm
        rng = np.random.default_rng(6)
        for _ in range(50):
            r = rotor_from_vectors(random_unit_vector(rng), random_unit_vector(rng))
            m = Multivector(CL30, rng.standard_normal(8))
            n = Multivector(CL30, rng.standard_normal(8))
            c = rng.standard_normal()
            assert rotate(r, c * m + n).approx_eq(
                c * rotate(r, m) + rotate(r, n), tol=1e-10
            )
            assert rotate(r, m * n).approx_eq(
                rotate(r, m) * rotate(r, n), tol=1e-10
            )
            assert rotate(r, m ^ n).approx_eq(
                rotate(r, m) ^ rotate(r, n), tol=1e-10
            )
            v = Multivector.vector(CL30, rng.standard_normal(3))
            image = rotate(r, v)
            assert image.grades_present(1e-12) <= {1}
            assert (image * image).scalar_part() == pytest.approx(
                (v * v).scalar_part()
            )


class TestCompose:
    def test_left_identity(self):
        r = rotor_exp(E12, 0.8)
        assert compose(Rotor(ONE), r).approx_eq(r.value)

    def test_same_plane_additivity(self):
        lhs = compose(rotor_exp(E12, 0.4), rotor_exp(E12, 1.1))
        assert lhs.approx_eq(rotor_exp(E12, 1.5).value)

    def test_composite_action(self):
        r1 = rotor_exp(E12, math.pi / 2)
        r2 = rotor_exp(E23, math.pi / 2)
        comp = Rotor(compose(r2, r1))
        rng = np.random.default_rng(8)
        for _ in range(20):
            v = Multivector.vector(CL30, rng.standard_normal(3))
            assert rotate(comp, v).approx_eq(rotate(r2, rotate(r1, v)), tol=1e-12)


class TestIsRotor:
    def test_examples(self):
        assert is_rotor((ONE + E12) / math.sqrt(2.0))
        assert not is_rotor(E1)
        assert not is_rotor(2.0 * (ONE + E12) / math.sqrt(2.0))

    def test_cl31_unit_even(self):
        one31 = Multivector.scalar(CL31, 1.0)
        e23_31 = Multivector.basis_vector(CL31, 2) * Multivector.basis_vector(CL31, 3)
        assert is_rotor((one31 + e23_31) / math.sqrt(2.0))

    def test_rotor_wrapper_validates(self):
        with pytest.raises(ValueError):
            Rotor(E1)
        with pytest.raises(ValueError):
            Rotor(2.0 * ONE)
