from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.domain.embedding import Outcome, SymmetricTensorState
from src.domain.errors import SpinDomainError
from src.domain.spin import MagneticQuantumNumber, Spin
from .collapse import collapse, outcome_probabilities
from .exact import EXACT_CASCADE_CAP, check_cascade_capacity, exact_cascade_distribution
from .state import CascadeState, m_prime_of

logger = logging.getLogger(__name__)

DEFAULT_SIGMA_BAND = 3.0


def check_trials(trials: int) -> int:
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise SpinDomainError(
            code="INVALID_TRIALS",
            message="Počet pokusů musí být kladné celé číslo",
            context={"trials": trials},
        )
    return trials


class CascadeTree:
    """Lazily expanded outcome tree; each prefix is collapsed at most once."""

    def __init__(
        self,
        initial: SymmetricTensorState,
        alpha: float,
        beta: float,
        order: Sequence[int] | None = None,
    ) -> None:
        self._nodes: dict[str, CascadeState] = {"": CascadeState.start(initial, alpha, beta, order)}
        self._plus: dict[str, float] = {}

    @property
    def root(self) -> CascadeState:
        return self._nodes[""]

    @property
    def expanded(self) -> int:
        return len(self._nodes)

    def node(self, prefix: str) -> CascadeState:
        cached = self._nodes.get(prefix)
        if cached is None:
            parent = self.node(prefix[:-1])
            cached = collapse(parent, Outcome(prefix[-1]))
            self._nodes[prefix] = cached
        return cached

    def plus_probability(self, prefix: str) -> float:
        cached = self._plus.get(prefix)
        if cached is None:
            cached = outcome_probabilities(self.node(prefix))[0]
            self._plus[prefix] = cached
        return cached

    def walk(self, uniforms: np.ndarray) -> str:
        """Outcome string for one trial; uniforms[i] decides step i."""
        prefix = ""
        for u in uniforms:
            prefix += str(Outcome.PLUS if u < self.plus_probability(prefix) else Outcome.MINUS)
        return prefix


@dataclass(frozen=True, slots=True)
class CascadeStatistics:
    spin: Spin
    alpha: float
    beta: float
    trials: int
    seed: int
    histogram: dict[MagneticQuantumNumber, int]
    exact: dict[MagneticQuantumNumber, float]
    mode: str = "quantum"
    lambda_draws: int | None = None

    def frequencies(self) -> dict[MagneticQuantumNumber, float]:
        return {m: count / self.trials for m, count in self.histogram.items()}

    @property
    def max_deviation(self) -> float:
        frequencies = self.frequencies()
        return max(abs(frequencies[m] - p) for m, p in self.exact.items())

    @property
    def max_sigma_deviation(self) -> float:
        """Largest |frequency - p| in units of the multinomial marginal sigma."""
        frequencies = self.frequencies()
        worst = 0.0
        for m, p in self.exact.items():
            gap = abs(frequencies[m] - p)
            sigma = math.sqrt(max(p * (1.0 - p), 0.0) / self.trials)
            if sigma > 0.0:
                worst = max(worst, gap / sigma)
            elif gap > 1e-12:
                worst = math.inf
        return worst

    def within_band(self, sigma_band: float = DEFAULT_SIGMA_BAND) -> bool:
        return self.max_sigma_deviation <= sigma_band


def histogram_of(spin: Spin, outcome_strings: Sequence[str]) -> dict[MagneticQuantumNumber, int]:
    counts = {m: 0 for m in spin.magnetic_numbers()}
    for labels in outcome_strings:
        counts[m_prime_of(labels)] += 1
    return counts


def simulate_cascades(
    initial: SymmetricTensorState,
    alpha: float,
    beta: float,
    trials: int,
    seed: int,
    order: Sequence[int] | None = None,
    cap: int = EXACT_CASCADE_CAP,
) -> CascadeStatistics:
    """Seeded Monte Carlo of the quantum cascade; one uniform draw per measured slot."""
    check_trials(trials)
    check_cascade_capacity(initial.spin, cap)
    rng = np.random.default_rng(seed)
    uniforms = rng.random((trials, initial.slot_count))
    tree = CascadeTree(initial, alpha, beta, order)
    outcomes = [tree.walk(row) for row in uniforms]
    logger.debug("Simulated %d cascades, %d tree nodes expanded", trials, tree.expanded)
    return CascadeStatistics(
        spin=initial.spin,
        alpha=tree.root.alpha,
        beta=tree.root.beta,
        trials=trials,
        seed=seed,
        histogram=histogram_of(initial.spin, outcomes),
        exact=exact_cascade_distribution(initial, alpha, beta, order, cap),
    )
