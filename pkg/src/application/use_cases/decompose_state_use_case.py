from __future__ import annotations

import logging
from pathlib import Path

from src.application.contracts import AppSettings
from src.application.dto import DecomposeResult
from src.application.ports import StateFileStorePort
from src.domain.majorana import PolynomialVariant, constellation_to_state, state_to_constellation
from src.domain.spin import transition_probability

logger = logging.getLogger(__name__)


class DecomposeStateUseCase:
    def __init__(self, state_store: StateFileStorePort, settings: AppSettings) -> None:
        self._state_store = state_store
        self._settings = settings

    def execute(
        self,
        state_path: str | Path,
        *,
        variant: PolynomialVariant = PolynomialVariant.MAJORANA,
        tol: float | None = None,
    ) -> DecomposeResult:
        state = self._state_store.read_state(state_path)
        constellation = state_to_constellation(state, variant)
        rebuilt = constellation_to_state(constellation, variant)
        overlap = transition_probability(rebuilt, state)
        result = DecomposeResult(
            source=state,
            constellation=constellation,
            round_trip_overlap=overlap,
            tol=self._settings.tolerances.round_trip if tol is None else tol,
        )
        if not result.passed:
            logger.warning("Round trip of %s reached overlap %.17g only", state_path, overlap)
        return result
