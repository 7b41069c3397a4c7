from __future__ import annotations

import math

import numpy as np
import pytest

from src.domain.errors import CapacityError, SpinDomainError
from src.domain.embedding import (
    Outcome,
    SymmetricTensorState,
    coherent_embedding,
    dicke_embedding,
    distinguishable_orderings,
    embed_state,
    index_labels,
    labels_index,
    minus_counts,
    normalization_constant,
    ordering_sum,
    ordering_sum_by_enumeration,
    product_state,
    symmetrize,
)
from src.domain.spin import BlochPoint, MagneticQuantumNumber, Spin, basis_state
from tests.conftest import random_state


def random_points(rng: np.random.Generator, count: int) -> list[BlochPoint]:
    return [BlochPoint(rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi)) for _ in range(count)]


def ray_overlap(a: SymmetricTensorState, b: SymmetricTensorState) -> float:
    return abs(complex(np.vdot(a.amplitudes, b.amplitudes))) ** 2


class TestTensorLayout:
    def test_slot_zero_is_most_significant(self):
        assert index_labels(0b011, 3) == "+--"
        assert labels_index("+--") == 0b011

    def test_minus_counts(self):
        assert minus_counts(2).tolist() == [0, 1, 1, 2]

    def test_outcome_bits(self):
        assert Outcome.from_bit(1) is Outcome.MINUS
        assert Outcome.PLUS.bit == 0

    def test_tensor_state_rejects_wrong_dimension(self):
        with pytest.raises(SpinDomainError) as info:
            SymmetricTensorState(Spin(twice_s=2), np.array([1.0, 0.0, 0.0]))
        assert info.value.code == "DIMENSION_MISMATCH"

    def test_amplitude_by_labels(self):
        state = product_state([BlochPoint.north(), BlochPoint.south()])
        assert abs(state.amplitude("+-")) == pytest.approx(1.0)
        with pytest.raises(SpinDomainError):
            state.amplitude("+")


class TestSymmetrize:
    def test_spin_one_zero_example(self):
        state = symmetrize([BlochPoint.north(), BlochPoint.south()])
        np.testing.assert_allclose(
            state.amplitudes, [0.0, 1 / math.sqrt(2), 1 / math.sqrt(2), 0.0], atol=1e-12
        )
        assert state.is_permutation_invariant()

    def test_identical_points_give_product_state(self):
        point = BlochPoint(0.5, 1.2)
        symmetric = symmetrize([point] * 4)
        assert ray_overlap(symmetric, product_state([point] * 4)) == pytest.approx(1.0, abs=1e-12)

    def test_product_state_of_distinct_points_is_not_symmetric(self):
        state = product_state([BlochPoint.north(), BlochPoint.south()])
        assert not state.is_permutation_invariant()

    @pytest.mark.parametrize("count", [2, 3, 4, 5])
    def test_closed_form_matches_enumeration(self, count, rng):
        points = random_points(rng, count)
        np.testing.assert_allclose(ordering_sum(points), ordering_sum_by_enumeration(points), atol=1e-12)

    def test_closed_form_with_repeated_points(self, rng):
        a, b = random_points(rng, 2)
        points = [a, b, a, a, b]
        np.testing.assert_allclose(ordering_sum(points), ordering_sum_by_enumeration(points), atol=1e-12)
        assert len(distinguishable_orderings(points)) == math.comb(5, 2)

    def test_symmetrized_states_are_invariant(self, rng):
        for count in range(1, 7):
            assert symmetrize(random_points(rng, count)).is_permutation_invariant()

    @pytest.mark.parametrize("twice_s", range(1, 9))
    def test_normalization_constant(self, twice_s):
        spin = Spin(twice_s=twice_s)
        for m in spin.magnetic_numbers():
            assert normalization_constant(spin, m) ** 2 == pytest.approx(math.comb(twice_s, spin.plus_count(m)))

    def test_generic_capacity(self, rng):
        with pytest.raises(CapacityError) as info:
            symmetrize(random_points(rng, 9))
        assert info.value.code == "CAPACITY"

    def test_coherent_multisets_have_a_larger_cap(self):
        embedded = coherent_embedding(Spin(twice_s=10), MagneticQuantumNumber(4))
        assert embedded.slot_count == 10

    def test_point_count_must_match_spin(self):
        with pytest.raises(SpinDomainError) as info:
            symmetrize([BlochPoint.north()], Spin(twice_s=2))
        assert info.value.code == "POINT_COUNT"


class TestEmbeddings:
    def test_coherent_embedding_is_normalized_dicke_vector(self):
        spin = Spin(twice_s=4)
        m = MagneticQuantumNumber(2)
        embedded = coherent_embedding(spin, m)
        support = minus_counts(4) == spin.minus_count(m)
        np.testing.assert_allclose(
            np.abs(embedded.amplitudes[support]), 1 / normalization_constant(spin, m), atol=1e-12
        )
        np.testing.assert_allclose(embedded.amplitudes[~support], 0.0, atol=1e-12)

    def test_embedding_agrees_with_dicke_image(self, rng):
        for twice_s in range(1, 7):
            state = random_state(Spin(twice_s=twice_s), rng)
            assert ray_overlap(embed_state(state), dicke_embedding(state)) == pytest.approx(1.0, abs=1e-9)

    def test_dicke_image_of_basis_state(self):
        spin = Spin(twice_s=3)
        m = MagneticQuantumNumber(-1)
        assert ray_overlap(
            dicke_embedding(basis_state(spin, m)), coherent_embedding(spin, m)
        ) == pytest.approx(1.0, abs=1e-12)
