from __future__ import annotations

from src.application.dto import CoherentStateResult
from src.domain.majorana import coherent_constellation
from src.domain.spin import BlochPoint, EulerAngles, MagneticQuantumNumber, Spin, coherent_state


class CoherentStateUseCase:
    def execute(
        self,
        spin: Spin,
        m: MagneticQuantumNumber,
        alpha: float,
        beta: float,
    ) -> CoherentStateResult:
        angles = EulerAngles(alpha, beta)
        return CoherentStateResult(
            state=coherent_state(spin, m, angles),
            constellation=coherent_constellation(spin, m, BlochPoint(angles.alpha, angles.beta)),
        )
