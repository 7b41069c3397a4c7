from __future__ import annotations

from typing import Sequence

from src.application.contracts import AppSettings
from src.application.dto import EquivalenceSweepResult
from src.domain.embedding import equivalence_sweep
from src.domain.spin import MagneticQuantumNumber


class EquivalenceSweepUseCase:
    def __init__(self, settings: AppSettings) -> None:
        self._settings = settings

    def execute(
        self,
        twice_s_values: Sequence[int],
        *,
        samples: int,
        seed: int | None = None,
        tol: float | None = None,
        m: MagneticQuantumNumber | None = None,
        m_prime: MagneticQuantumNumber | None = None,
    ) -> EquivalenceSweepResult:
        resolved_seed = self._settings.simulation.seed if seed is None else seed
        resolved_tol = self._settings.tolerances.equivalence if tol is None else tol
        reports = equivalence_sweep(
            twice_s_values,
            samples,
            resolved_seed,
            tol=resolved_tol,
            cap=self._settings.caps.equivalence_sweep,
            m=m,
            m_prime=m_prime,
            basis_cap=self._settings.caps.subspace_basis,
        )
        return EquivalenceSweepResult(reports=tuple(reports), seed=resolved_seed, tol=resolved_tol)
