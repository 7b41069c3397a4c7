from __future__ import annotations

from pathlib import Path
from typing import Any

from src.application.contracts import AppSettings, SimulationMode
from src.application.dto import SimulationReport
from src.application.ports import StateFileStorePort
from src.domain.cascade import simulate_cascades
from src.domain.classical import simulate_classical_cascades
from src.domain.embedding import SymmetricTensorState, coherent_embedding, embed_state
from src.domain.errors import SpinDomainError
from src.domain.spin import MagneticQuantumNumber, Spin


class SimulateCascadeUseCase:
    def __init__(self, state_store: StateFileStorePort, settings: AppSettings) -> None:
        self._state_store = state_store
        self._settings = settings

    def execute(
        self,
        mode: SimulationMode,
        *,
        alpha: float,
        beta: float,
        spin: Spin | None = None,
        m: MagneticQuantumNumber | None = None,
        state_path: str | Path | None = None,
        trials: int | None = None,
        seed: int | None = None,
    ) -> SimulationReport:
        initial, source = self._initial_state(spin, m, state_path)
        resolved_trials = self._settings.simulation.trials if trials is None else trials
        resolved_seed = self._settings.simulation.seed if seed is None else seed
        cap = self._settings.caps.exact_cascade
        simulate = simulate_classical_cascades if mode is SimulationMode.CLASSICAL else simulate_cascades
        statistics = simulate(initial, alpha, beta, resolved_trials, resolved_seed, cap=cap)
        return SimulationReport(
            statistics=statistics,
            source=source,
            sigma_band=self._settings.simulation.sigma_band,
        )

    def _initial_state(
        self,
        spin: Spin | None,
        m: MagneticQuantumNumber | None,
        state_path: str | Path | None,
    ) -> tuple[SymmetricTensorState, dict[str, Any]]:
        caps = self._settings.caps
        if state_path is not None:
            state = self._state_store.read_state(state_path)
            embedded = embed_state(state, caps.generic_symmetrize, caps.coherent_symmetrize)
            return embedded, {"kind": "state", "amplitudes": state.as_pairs()}
        if spin is None or m is None:
            raise SpinDomainError(
                code="MISSING_INPUT",
                message="Simulace vyžaduje buď soubor se stavem, nebo dvojici (S, M)",
            )
        embedded = coherent_embedding(spin, m, coherent_cap=caps.coherent_symmetrize)
        return embedded, {"kind": "coherent", "M": str(m)}
