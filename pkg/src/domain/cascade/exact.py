from __future__ import annotations

import logging
from collections import defaultdict
from typing import Sequence

import numpy as np

from src.domain.embedding import Outcome, SymmetricTensorState
from src.domain.errors import CapacityError
from src.domain.spin import (
    EulerAngles,
    MagneticQuantumNumber,
    Spin,
    SpinState,
    coherent_state,
    transition_probability,
)
from .collapse import collapse, outcome_probabilities
from .state import CascadeState, m_prime_of

logger = logging.getLogger(__name__)

EXACT_CASCADE_CAP = 12


def check_cascade_capacity(spin: Spin, cap: int = EXACT_CASCADE_CAP) -> None:
    if spin.twice_s > cap:
        raise CapacityError(
            code="CAPACITY",
            message=f"Přesný výpočet kaskády je omezen na 2S <= {cap}",
            context={"twice_s": spin.twice_s, "cap": cap},
        )


def exact_outcome_law(
    initial: SymmetricTensorState,
    alpha: float,
    beta: float,
    order: Sequence[int] | None = None,
    cap: int = EXACT_CASCADE_CAP,
) -> dict[str, float]:
    """Probability of every reachable outcome string via chained conditionals."""
    check_cascade_capacity(initial.spin, cap)
    law: dict[str, float] = {}
    stack = [(CascadeState.start(initial, alpha, beta, order), 1.0)]
    while stack:
        state, weight = stack.pop()
        if state.is_complete:
            law[state.prefix] = law.get(state.prefix, 0.0) + weight
            continue
        for label, probability in zip((Outcome.PLUS, Outcome.MINUS), outcome_probabilities(state)):
            # zero-weight branches are never reached and are not renormalized
            if probability > 0.0:
                stack.append((collapse(state, label), weight * probability))
    logger.debug("Exact cascade law has %d reachable outcome strings", len(law))
    return law


def aggregate_by_m_prime(spin: Spin, law: dict[str, float]) -> dict[MagneticQuantumNumber, float]:
    totals: dict[MagneticQuantumNumber, float] = defaultdict(float)
    for labels, probability in law.items():
        totals[m_prime_of(labels)] += probability
    return {m: float(totals.get(m, 0.0)) for m in spin.magnetic_numbers()}


def exact_cascade_distribution(
    initial: SymmetricTensorState,
    alpha: float,
    beta: float,
    order: Sequence[int] | None = None,
    cap: int = EXACT_CASCADE_CAP,
) -> dict[MagneticQuantumNumber, float]:
    """Outcome law of the cascade aggregated by M', keys in descending M' order."""
    return aggregate_by_m_prime(initial.spin, exact_outcome_law(initial, alpha, beta, order, cap))


def born_distribution(
    state: SpinState,
    alpha: float,
    beta: float,
) -> dict[MagneticQuantumNumber, float]:
    """|<psi_M'^{alpha,beta} | psi>|^2 for every M' of the spin-S state."""
    angles = EulerAngles(alpha, beta)
    return {
        m: transition_probability(coherent_state(state.spin, m, angles), state)
        for m in state.spin.magnetic_numbers()
    }


def distribution_distance(
    left: dict[MagneticQuantumNumber, float],
    right: dict[MagneticQuantumNumber, float],
) -> float:
    keys = set(left) | set(right)
    return float(np.max([abs(left.get(k, 0.0) - right.get(k, 0.0)) for k in keys]))
