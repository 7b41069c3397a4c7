from __future__ import annotations

import logging
import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from src.domain.errors import SpinDomainError
from src.domain.spin import (
    MINUS,
    PLUS,
    SPIN_HALF,
    BlochPoint,
    EulerAngles,
    MagneticQuantumNumber,
    Spin,
    SpinState,
    basis_state,
    bloch_of_state,
    brute_force_transition,
    checked_transition_probability,
    coherent_state,
    coherent_transition_closed_form,
    normalize_angle,
    ray_equal,
    rotation_matrix,
    spin_half_state,
    transition_matrix,
    transition_probability,
    wigner_matrix,
    wigner_matrix_from_generators,
)
from tests.conftest import random_state

alphas = st.floats(min_value=0.0, max_value=2.0 * math.pi, allow_nan=False)
betas = st.floats(min_value=0.0, max_value=math.pi, allow_nan=False)
twice_spins = st.integers(min_value=1, max_value=8)


class TestQuantumNumbers:
    @pytest.mark.parametrize(
        ("text", "twice_m"),
        [("1/2", 1), ("-3/2", -3), ("0", 0), ("2", 4), ("0.5", 1), (" -1 ", -2)],
    )
    def test_parse(self, text, twice_m):
        assert MagneticQuantumNumber.parse(text).twice_m == twice_m

    @pytest.mark.parametrize("text", ["0.3", "abc", "1/3", ""])
    def test_parse_rejects_non_half_integers(self, text):
        with pytest.raises(SpinDomainError) as info:
            MagneticQuantumNumber.parse(text)
        assert info.value.code == "INVALID_MAGNETIC_NUMBER"

    @pytest.mark.parametrize("twice_s", [0, -2, True])
    def test_invalid_spin(self, twice_s):
        with pytest.raises(SpinDomainError) as info:
            Spin(twice_s=twice_s)
        assert info.value.code == "INVALID_SPIN"

    def test_magnetic_numbers_descend_from_plus_s(self):
        numbers = Spin(twice_s=3).magnetic_numbers()
        assert [str(m) for m in numbers] == ["3/2", "1/2", "-1/2", "-3/2"]

    @pytest.mark.parametrize(("twice_s", "twice_m"), [(2, 1), (2, 4), (3, -5), (1, 0)])
    def test_check_rejects_out_of_range_or_wrong_parity(self, twice_s, twice_m):
        with pytest.raises(SpinDomainError) as info:
            Spin(twice_s=twice_s).check(MagneticQuantumNumber(twice_m))
        assert info.value.code == "INVALID_MAGNETIC_NUMBER"

    def test_plus_and_minus_counts(self):
        spin = Spin(twice_s=4)
        m = MagneticQuantumNumber(2)
        assert (spin.plus_count(m), spin.minus_count(m), spin.position_of(m)) == (3, 1, 1)


class TestAngles:
    @pytest.mark.parametrize(
        ("value", "expected"),
        [(-math.pi / 2, 3 * math.pi / 2), (2 * math.pi, 0.0), (5 * math.pi, math.pi)],
    )
    def test_normalize_angle(self, value, expected):
        assert normalize_angle(value) == pytest.approx(expected)

    @pytest.mark.parametrize("value", [math.inf, math.nan])
    def test_non_finite_angle(self, value):
        with pytest.raises(SpinDomainError) as info:
            normalize_angle(value)
        assert info.value.code == "INVALID_ANGLE"

    def test_beta_outside_range(self):
        with pytest.raises(SpinDomainError) as info:
            EulerAngles(0.0, 4.0)
        assert info.value.code == "INVALID_ANGLE"

    def test_antipode_and_cartesian(self):
        point = BlochPoint(0.4, 1.0)
        np.testing.assert_allclose(point.antipode().cartesian(), -point.cartesian(), atol=1e-15)
        assert point.angular_distance(point.antipode()) == pytest.approx(math.pi)

    def test_from_cartesian_round_trip(self):
        point = BlochPoint(5.5, 2.2)
        back = BlochPoint.from_cartesian(point.cartesian() * 3.0)
        assert (back.alpha, back.beta) == pytest.approx((point.alpha, point.beta))

    def test_from_cartesian_zero_vector(self):
        with pytest.raises(SpinDomainError) as info:
            BlochPoint.from_cartesian([0.0, 0.0, 0.0])
        assert info.value.code == "ZERO_VECTOR"


class TestSpinState:
    def test_rejects_wrong_dimension(self):
        with pytest.raises(SpinDomainError) as info:
            SpinState(Spin(twice_s=2), np.array([1.0, 0.0]))
        assert info.value.code == "DIMENSION_MISMATCH"

    def test_rejects_unnormalized(self):
        with pytest.raises(SpinDomainError) as info:
            SpinState(SPIN_HALF, np.array([1.0, 1.0]))
        assert info.value.code == "NOT_NORMALIZED"

    def test_normalized_rejects_zero(self):
        with pytest.raises(SpinDomainError) as info:
            SpinState.normalized(SPIN_HALF, [0.0, 0.0])
        assert info.value.code == "ZERO_VECTOR"

    @pytest.mark.parametrize("bad", [math.nan, math.inf, complex(0.0, -math.inf)])
    def test_rejects_non_finite_amplitudes(self, bad):
        with pytest.raises(SpinDomainError) as info:
            SpinState.normalized(Spin(twice_s=2), [bad, 1.0, 0.0])
        assert info.value.code == "NON_FINITE"
        with pytest.raises(SpinDomainError) as info:
            SpinState(Spin(twice_s=2), np.array([bad, 1.0, 0.0]))
        assert info.value.code == "NON_FINITE"

    def test_ray_equal_ignores_global_phase(self, rng):
        state = random_state(Spin(twice_s=3), rng)
        shifted = SpinState(state.spin, state.amplitudes * np.exp(0.77j))
        assert ray_equal(state, shifted)
        assert not ray_equal(state, basis_state(state.spin, MagneticQuantumNumber(3)))


class TestSpinHalf:
    def test_plus_at_identity(self):
        np.testing.assert_allclose(coherent_state(SPIN_HALF, PLUS).amplitudes, [1.0, 0.0])

    @settings(max_examples=60, deadline=None)
    @seed(11)
    @given(alpha=alphas, beta=betas)
    def test_coherent_state_formula(self, alpha, beta):
        angles = EulerAngles(alpha, beta)
        expected = [
            np.exp(-0.5j * angles.alpha) * math.cos(angles.beta / 2),
            np.exp(0.5j * angles.alpha) * math.sin(angles.beta / 2),
        ]
        np.testing.assert_allclose(coherent_state(SPIN_HALF, PLUS, angles).amplitudes, expected, atol=1e-14)

    def test_transition_probabilities_over_grid(self):
        for beta in np.linspace(0.0, math.pi, 1000):
            angles = EulerAngles(0.3, beta)
            up = coherent_state(SPIN_HALF, PLUS)
            assert transition_probability(up, coherent_state(SPIN_HALF, PLUS, angles)) == pytest.approx(
                (1 + math.cos(beta)) / 2, abs=1e-12
            )
            assert transition_probability(up, coherent_state(SPIN_HALF, MINUS, angles)) == pytest.approx(
                (1 - math.cos(beta)) / 2, abs=1e-12
            )

    def test_spin_half_rotation_entries(self):
        alpha, beta = 1.1, 0.6
        expected = np.array(
            [
                [np.exp(-0.5j * alpha) * math.cos(beta / 2), -np.exp(-0.5j * alpha) * math.sin(beta / 2)],
                [np.exp(0.5j * alpha) * math.sin(beta / 2), np.exp(0.5j * alpha) * math.cos(beta / 2)],
            ]
        )
        np.testing.assert_allclose(wigner_matrix(SPIN_HALF, EulerAngles(alpha, beta)), expected, atol=1e-14)

    @pytest.mark.parametrize(
        ("vector", "beta"),
        [([1.0, 0.0], 0.0), ([0.0, 1.0], math.pi)],
    )
    def test_bloch_of_basis_states(self, vector, beta):
        assert bloch_of_state(np.array(vector, dtype=complex)).beta == pytest.approx(beta)

    @settings(max_examples=50, deadline=None)
    @seed(12)
    @given(alpha=alphas, beta=st.floats(min_value=0.01, max_value=math.pi - 0.01))
    def test_bloch_of_state_inverts_spin_half_state(self, alpha, beta):
        point = BlochPoint(alpha, beta)
        assert bloch_of_state(spin_half_state(point)).angular_distance(point) < 1e-7

    def test_bloch_of_state_needs_two_components(self):
        with pytest.raises(SpinDomainError) as info:
            bloch_of_state(np.ones(3, dtype=complex))
        assert info.value.code == "DIMENSION_MISMATCH"


class TestRotation:
    def test_unitary_for_random_angles(self, rng):
        for twice_s in range(1, 9):
            spin = Spin(twice_s=twice_s)
            for _ in range(100):
                a, b, g = rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)
                d = wigner_matrix(spin, EulerAngles(a, b, g))
                np.testing.assert_allclose(d.conj().T @ d, np.eye(spin.dimension), atol=1e-12)

    @settings(max_examples=40, deadline=None)
    @seed(13)
    @given(twice_s=twice_spins, alpha=alphas, beta=betas, gamma=alphas)
    def test_matches_exponentiated_generators(self, twice_s, alpha, beta, gamma):
        spin = Spin(twice_s=twice_s)
        angles = EulerAngles(alpha, beta, gamma)
        np.testing.assert_allclose(
            wigner_matrix(spin, angles), wigner_matrix_from_generators(spin, angles), atol=1e-10
        )

    def test_identity_at_zero(self):
        spin = Spin(twice_s=5)
        np.testing.assert_allclose(wigner_matrix(spin, EulerAngles.identity()), np.eye(6), atol=1e-15)

    def test_rotation_matrix_takes_north_to_direction(self):
        angles = EulerAngles(0.9, 2.0)
        np.testing.assert_allclose(
            rotation_matrix(angles) @ BlochPoint.north().cartesian(),
            angles.direction().cartesian(),
            atol=1e-14,
        )


class TestTransitionProbability:
    def test_closed_form_matches_overlap(self, rng):
        for twice_s in range(1, 9):
            spin = Spin(twice_s=twice_s)
            for _ in range(20):
                angles = EulerAngles(rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi))
                for m in spin.magnetic_numbers():
                    for m_prime in spin.magnetic_numbers():
                        closed = coherent_transition_closed_form(spin, m, m_prime, angles.beta)
                        brute = brute_force_transition(spin, m, m_prime, angles)
                        assert closed == pytest.approx(brute, abs=1e-10)

    @pytest.mark.parametrize("twice_s", range(1, 9))
    def test_rows_sum_to_one(self, twice_s):
        table = transition_matrix(Spin(twice_s=twice_s), 1.234)
        np.testing.assert_allclose(table.sum(axis=1), 1.0, atol=1e-12)

    def test_identity_at_beta_zero(self):
        np.testing.assert_allclose(transition_matrix(Spin(twice_s=4), 0.0), np.eye(5), atol=1e-15)

    def test_does_not_depend_on_alpha(self):
        spin = Spin(twice_s=3)
        m, m_prime = MagneticQuantumNumber(1), MagneticQuantumNumber(-3)
        first = brute_force_transition(spin, m, m_prime, EulerAngles(0.2, 0.9))
        second = brute_force_transition(spin, m, m_prime, EulerAngles(4.1, 0.9))
        assert first == pytest.approx(second, abs=1e-13)

    def test_checked_probability_is_silent_when_forms_agree(self, caplog):
        spin = Spin(twice_s=3)
        with caplog.at_level(logging.WARNING):
            value = checked_transition_probability(
                spin, MagneticQuantumNumber(1), MagneticQuantumNumber(-1), EulerAngles(0.0, 0.9)
            )
        assert 0.0 <= value <= 1.0
        assert not caplog.records

    def test_dimension_mismatch(self):
        with pytest.raises(SpinDomainError) as info:
            transition_probability(basis_state(SPIN_HALF, PLUS), basis_state(Spin(twice_s=2), MagneticQuantumNumber(0)))
        assert info.value.code == "DIMENSION_MISMATCH"
