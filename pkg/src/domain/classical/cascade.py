from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from src.domain.cascade import (
    EXACT_CASCADE_CAP,
    CascadeResult,
    CascadeState,
    CascadeStatistics,
    CascadeTree,
    aggregate_by_m_prime,
    check_cascade_capacity,
    check_trials,
    collapse,
    decompose_density,
    exact_cascade_distribution,
    histogram_of,
    next_slot_density,
)
from src.domain.embedding import Outcome, SymmetricTensorState
from src.domain.spin import BlochPoint, MagneticQuantumNumber
from .aerts import ClassicalSpinHalf, HiddenVariable, aerts_decide, aerts_plus_probability, aerts_sample

logger = logging.getLogger(__name__)

# classical branch weights below this are rounding residue of an empty quantum branch
BRANCH_FLOOR = 1e-15


def entity_candidates(state: CascadeState) -> list[ClassicalSpinHalf]:
    """Pure spin-1/2 states whose uniform mixture is the next slot's proper state."""
    pure = decompose_density(next_slot_density(state), len(state.pending))
    return [ClassicalSpinHalf.from_spinor(vector) for vector in pure]


def classical_cascade(
    initial: SymmetricTensorState,
    alpha: float,
    beta: float,
    rng: np.random.Generator,
    order: Sequence[int] | None = None,
) -> CascadeResult:
    """One run where every binary outcome comes from an Aerts draw on a selected pure state."""
    state = CascadeState.start(initial, alpha, beta, order)
    direction = BlochPoint(state.alpha, state.beta)
    while not state.is_complete:
        candidates = entity_candidates(state)
        chosen = candidates[int(rng.integers(len(candidates)))]
        label = aerts_sample(chosen, direction, rng)
        state = collapse(state, label)
    return CascadeResult(spin=initial.spin, outcomes=state.outcomes)


def classical_plus_probability(state: CascadeState) -> float:
    """Average of the analytic Aerts law over the decomposition of the next proper state."""
    direction = BlochPoint(state.alpha, state.beta)
    candidates = entity_candidates(state)
    return sum(aerts_plus_probability(c, direction) for c in candidates) / len(candidates)


def classical_cascade_distribution(
    initial: SymmetricTensorState,
    alpha: float,
    beta: float,
    order: Sequence[int] | None = None,
    cap: int = EXACT_CASCADE_CAP,
) -> dict[MagneticQuantumNumber, float]:
    """Exact law of the classical cascade, summed over the finite choice tree."""
    check_cascade_capacity(initial.spin, cap)
    law: dict[str, float] = {}
    stack = [(CascadeState.start(initial, alpha, beta, order), 1.0)]
    while stack:
        state, weight = stack.pop()
        if state.is_complete:
            law[state.prefix] = law.get(state.prefix, 0.0) + weight
            continue
        p_plus = classical_plus_probability(state)
        for label, probability in ((Outcome.PLUS, p_plus), (Outcome.MINUS, 1.0 - p_plus)):
            if probability > BRANCH_FLOOR:
                stack.append((collapse(state, label), weight * probability))
    return aggregate_by_m_prime(initial.spin, law)


class ClassicalCascadeTree(CascadeTree):
    """Outcome tree that also caches the pure-state decomposition of every node."""

    def __init__(
        self,
        initial: SymmetricTensorState,
        alpha: float,
        beta: float,
        order: Sequence[int] | None = None,
    ) -> None:
        super().__init__(initial, alpha, beta, order)
        self._candidates: dict[str, list[ClassicalSpinHalf]] = {}
        self._direction = BlochPoint(self.root.alpha, self.root.beta)

    def candidates(self, prefix: str) -> list[ClassicalSpinHalf]:
        cached = self._candidates.get(prefix)
        if cached is None:
            cached = entity_candidates(self.node(prefix))
            self._candidates[prefix] = cached
        return cached

    def walk_classical(self, selections: np.ndarray, lambdas: np.ndarray) -> str:
        """selections[i] in [0, 1) picks the pure state, lambdas[i] feeds the hidden variable."""
        prefix = ""
        for u_select, u_lambda in zip(selections, lambdas):
            candidates = self.candidates(prefix)
            chosen = candidates[min(int(u_select * len(candidates)), len(candidates) - 1)]
            label = aerts_decide(chosen, self._direction, HiddenVariable.from_uniform(float(u_lambda)))
            prefix += str(label)
        return prefix


def simulate_classical_cascades(
    initial: SymmetricTensorState,
    alpha: float,
    beta: float,
    trials: int,
    seed: int,
    order: Sequence[int] | None = None,
    cap: int = EXACT_CASCADE_CAP,
) -> CascadeStatistics:
    """Seeded Monte Carlo of the classical cascade; two uniform draws per measured slot."""
    check_trials(trials)
    check_cascade_capacity(initial.spin, cap)
    rng = np.random.default_rng(seed)
    draws = rng.random((trials, initial.slot_count, 2))
    tree = ClassicalCascadeTree(initial, alpha, beta, order)
    outcomes = [tree.walk_classical(row[:, 0], row[:, 1]) for row in draws]
    lambda_draws = trials * initial.slot_count
    logger.debug("Simulated %d classical cascades with %d lambda draws", trials, lambda_draws)
    return CascadeStatistics(
        spin=initial.spin,
        alpha=tree.root.alpha,
        beta=tree.root.beta,
        trials=trials,
        seed=seed,
        histogram=histogram_of(initial.spin, outcomes),
        exact=exact_cascade_distribution(initial, alpha, beta, order, cap),
        mode="classical",
        lambda_draws=lambda_draws,
    )
