from __future__ import annotations

from typing import Sequence

import numpy as np

from src.application.dto import TransitionTableResult
from src.domain.spin import (
    EulerAngles,
    MagneticQuantumNumber,
    Spin,
    checked_transition_probability,
)


class TransitionTableUseCase:
    def execute(
        self,
        spin: Spin,
        betas: Sequence[float],
        m: MagneticQuantumNumber | None = None,
    ) -> TransitionTableResult:
        numbers = spin.magnetic_numbers()
        rows = tuple(range(spin.dimension)) if m is None else (spin.position_of(m),)
        angles = [EulerAngles(0.0, beta) for beta in betas]
        tables = tuple(
            np.array(
                [
                    [checked_transition_probability(spin, row_m, column_m, a) for column_m in numbers]
                    for row_m in numbers
                ]
            )
            for a in angles
        )
        return TransitionTableResult(
            spin=spin,
            betas=tuple(a.beta for a in angles),
            tables=tables,
            rows_selected=rows,
        )
