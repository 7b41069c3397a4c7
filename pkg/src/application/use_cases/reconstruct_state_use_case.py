from __future__ import annotations

import logging
from pathlib import Path

from src.application.contracts import AppSettings
from src.application.dto import ReconstructResult
from src.application.ports import StateFileStorePort
from src.domain.majorana import constellation_to_state, state_to_constellation
from src.domain.spin import transition_probability

logger = logging.getLogger(__name__)


class ReconstructStateUseCase:
    def __init__(self, state_store: StateFileStorePort, settings: AppSettings) -> None:
        self._state_store = state_store
        self._settings = settings

    def execute(self, constellation_path: str | Path, *, tol: float | None = None) -> ReconstructResult:
        constellation = self._state_store.read_constellation(constellation_path)
        state = constellation_to_state(constellation)
        overlap = transition_probability(
            constellation_to_state(state_to_constellation(state)),
            state,
        )
        result = ReconstructResult(
            source=constellation,
            state=state,
            round_trip_overlap=overlap,
            tol=self._settings.tolerances.round_trip if tol is None else tol,
        )
        if not result.passed:
            logger.warning(
                "Round trip of %s reached overlap %.17g only", constellation_path, overlap
            )
        return result
