from __future__ import annotations

import math

import numpy as np
import pytest

from src.domain.cascade import (
    CascadeState,
    CascadeStatistics,
    CascadeTree,
    biorthogonal_split,
    born_distribution,
    check_order,
    collapse,
    distribution_distance,
    exact_cascade_distribution,
    exact_outcome_law,
    histogram_of,
    next_slot_density,
    outcome_probabilities,
    proper_states,
    run_cascade,
    simulate_cascades,
)
from src.domain.embedding import Outcome, coherent_embedding, embed_state
from src.domain.errors import CapacityError, SpinDomainError
from src.domain.spin import BlochPoint, MagneticQuantumNumber, Spin, basis_state
from tests.conftest import random_state

SPIN_ONE = Spin(twice_s=2)
ZERO = MagneticQuantumNumber(0)


class TestCascadeState:
    def test_order_must_be_a_permutation(self):
        with pytest.raises(SpinDomainError) as info:
            check_order(3, [0, 0, 1])
        assert info.value.code == "SLOT_OUT_OF_RANGE"

    def test_biorthogonal_split_of_spin_one_zero(self):
        split = biorthogonal_split(coherent_embedding(SPIN_ONE, ZERO), 0)
        assert split.a_plus == pytest.approx(1 / math.sqrt(2))
        assert split.a_minus == pytest.approx(1 / math.sqrt(2))
        assert abs(split.phi_plus[1]) == pytest.approx(1.0)
        assert abs(split.phi_minus[0]) == pytest.approx(1.0)

    def test_measuring_plus_forces_minus_on_the_partner(self):
        state = CascadeState.start(coherent_embedding(SPIN_ONE, ZERO), 0.0, 0.0)
        assert outcome_probabilities(state) == pytest.approx((0.5, 0.5))
        after = collapse(state, Outcome.PLUS)
        assert outcome_probabilities(after) == pytest.approx((0.0, 1.0), abs=1e-15)
        assert after.prefix == "+"
        assert after.pending == (1,)

    def test_impossible_outcome(self):
        state = CascadeState.start(coherent_embedding(SPIN_ONE, MagneticQuantumNumber(2)), 0.0, 0.0)
        with pytest.raises(SpinDomainError) as info:
            collapse(state, Outcome.MINUS)
        assert info.value.code == "IMPOSSIBLE_OUTCOME"

    def test_complete_cascade_has_no_next_slot(self):
        state = CascadeState.start(coherent_embedding(Spin(twice_s=1), MagneticQuantumNumber(1)), 0.0, 0.0)
        done = collapse(state, Outcome.PLUS)
        assert done.is_complete
        for call in (lambda: collapse(done, Outcome.PLUS), lambda: next_slot_density(done)):
            with pytest.raises(SpinDomainError) as info:
                call()
            assert info.value.code == "EMPTY_CASCADE"

    @pytest.mark.parametrize("twice_s", [2, 3, 4])
    def test_separated_maximal_state_keeps_proper_states(self, twice_s):
        spin = Spin(twice_s=twice_s)
        point = BlochPoint(0.3, 1.0)
        initial = coherent_embedding(spin, MagneticQuantumNumber(twice_s), point)
        before = proper_states(initial)
        state = CascadeState.start(initial, 1.2, 0.5)
        while not state.is_complete:
            p_plus, _ = outcome_probabilities(state)
            state = collapse(state, Outcome.PLUS if p_plus >= 0.5 else Outcome.MINUS)
            remaining = proper_states(state)
            for slot, density in zip(sorted(state.pending), remaining):
                assert density.distance(before[slot]) < 1e-12


class TestExactDistribution:
    @pytest.mark.parametrize("twice_s", range(1, 9))
    def test_coherent_embeddings_follow_born_rule(self, twice_s):
        spin = Spin(twice_s=twice_s)
        for m in spin.magnetic_numbers():
            exact = exact_cascade_distribution(coherent_embedding(spin, m), 0.9, 1.3)
            born = born_distribution(basis_state(spin, m), 0.9, 1.3)
            assert distribution_distance(exact, born) < 1e-9

    def test_random_states_follow_born_rule(self, rng):
        for twice_s in range(1, 9):
            spin = Spin(twice_s=twice_s)
            for _ in range(50 if twice_s <= 5 else 8):
                state = random_state(spin, rng)
                alpha, beta = rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi)
                exact = exact_cascade_distribution(embed_state(state), alpha, beta)
                assert distribution_distance(exact, born_distribution(state, alpha, beta)) < 1e-9

    def test_measurement_order_does_not_matter(self, rng):
        state = embed_state(random_state(Spin(twice_s=4), rng))
        forward = exact_cascade_distribution(state, 0.4, 2.0)
        for order in ([3, 2, 1, 0], [2, 0, 3, 1]):
            assert distribution_distance(forward, exact_cascade_distribution(state, 0.4, 2.0, order)) < 1e-10

    def test_outcome_law_sums_to_one(self):
        law = exact_outcome_law(coherent_embedding(Spin(twice_s=3), MagneticQuantumNumber(1)), 0.0, 0.8)
        assert sum(law.values()) == pytest.approx(1.0, abs=1e-12)
        assert len(law) == 8

    def test_keys_descend_in_m_prime(self):
        exact = exact_cascade_distribution(coherent_embedding(SPIN_ONE, ZERO), 0.0, 1.0)
        assert [str(m) for m in exact] == ["1", "0", "-1"]

    def test_capacity(self):
        with pytest.raises(CapacityError):
            exact_cascade_distribution(coherent_embedding(Spin(twice_s=3), MagneticQuantumNumber(1)), 0.0, 0.0, cap=2)


class TestMonteCarlo:
    @pytest.mark.parametrize("seed", [42, 1, 2, 3, 4, 5, 6, 7, 8, 9])
    def test_histogram_tracks_exact_law(self, seed):
        stats = simulate_cascades(coherent_embedding(SPIN_ONE, ZERO), 0.0, math.pi / 3, 100_000, seed)
        assert sum(stats.histogram.values()) == 100_000
        assert stats.within_band(3.0), stats.max_sigma_deviation

    def test_spin_one_zero_law(self):
        stats = simulate_cascades(coherent_embedding(SPIN_ONE, ZERO), 0.0, math.pi / 3, 10, 0)
        # |d^1_{0,M'}(pi/3)|^2 = (sin^2/2, cos^2, sin^2/2)
        s2, c2 = math.sin(math.pi / 3) ** 2, math.cos(math.pi / 3) ** 2
        assert list(stats.exact.values()) == pytest.approx([s2 / 2, c2, s2 / 2])

    def test_same_seed_same_histogram(self):
        initial = coherent_embedding(Spin(twice_s=3), MagneticQuantumNumber(-1))
        first = simulate_cascades(initial, 1.0, 2.0, 3_000, 123)
        second = simulate_cascades(initial, 1.0, 2.0, 3_000, 123)
        assert first.histogram == second.histogram

    def test_run_cascade_is_reproducible(self):
        initial = coherent_embedding(Spin(twice_s=4), MagneticQuantumNumber(0))
        first = [run_cascade(initial, 0.5, 1.0, np.random.default_rng(5)).labels for _ in range(3)]
        second = [run_cascade(initial, 0.5, 1.0, np.random.default_rng(5)).labels for _ in range(3)]
        assert first == second

    def test_trials_must_be_positive(self):
        with pytest.raises(SpinDomainError) as info:
            simulate_cascades(coherent_embedding(SPIN_ONE, ZERO), 0.0, 0.0, 0, 1)
        assert info.value.code == "INVALID_TRIALS"

    def test_tree_reuses_collapsed_nodes(self):
        tree = CascadeTree(coherent_embedding(SPIN_ONE, ZERO), 0.0, 1.0)
        tree.walk(np.array([0.25, 0.9]))
        tree.walk(np.array([0.25, 0.9]))
        assert tree.expanded == 2

    def test_impossible_outcome_seen_is_infinite_sigma(self):
        spin = Spin(twice_s=1)
        plus, minus = spin.magnetic_numbers()
        stats = CascadeStatistics(
            spin=spin,
            alpha=0.0,
            beta=0.0,
            trials=2,
            seed=0,
            histogram=histogram_of(spin, ["+", "-"]),
            exact={plus: 1.0, minus: 0.0},
        )
        assert stats.max_sigma_deviation == math.inf
        assert not stats.within_band()
