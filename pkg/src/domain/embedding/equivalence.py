from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Iterable

import numpy as np

from src.domain.errors import CapacityError, SpinDomainError
from src.domain.spin import EulerAngles, MagneticQuantumNumber, Spin, brute_force_transition
from .subspace import SUBSPACE_BASIS_CAP, outcome_subspace, projection_probability
from .symmetrize import coherent_embedding

logger = logging.getLogger(__name__)

EQUIVALENCE_TOLERANCE = 1e-9
EQUIVALENCE_SWEEP_CAP = 8


@dataclass(frozen=True, slots=True)
class EquivalenceReport:
    spin: Spin
    m: MagneticQuantumNumber
    m_prime: MagneticQuantumNumber
    alpha: float
    beta: float
    lhs: float
    rhs: float
    tol: float

    @property
    def delta(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        return self.delta < self.tol

    def as_record(self) -> dict[str, Any]:
        return {
            "S": str(self.spin),
            "twice_s": self.spin.twice_s,
            "M": str(self.m),
            "M_prime": str(self.m_prime),
            "alpha": self.alpha,
            "beta": self.beta,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "delta": self.delta,
            "pass": self.passed,
        }


def verify_equivalence(
    spin: Spin,
    m: MagneticQuantumNumber,
    m_prime: MagneticQuantumNumber,
    alpha: float,
    beta: float,
    tol: float = EQUIVALENCE_TOLERANCE,
    basis_cap: int = SUBSPACE_BASIS_CAP,
) -> EquivalenceReport:
    """Spin-S transition probability against its symmetrized tensor counterpart."""
    angles = EulerAngles(alpha, beta)
    lhs = brute_force_transition(spin, m, m_prime, angles)
    embedded = coherent_embedding(spin, m)
    subspace = outcome_subspace(spin, m_prime, angles.alpha, angles.beta, basis_cap)
    rhs = projection_probability(embedded, subspace)
    report = EquivalenceReport(
        spin=spin,
        m=m,
        m_prime=m_prime,
        alpha=angles.alpha,
        beta=angles.beta,
        lhs=lhs,
        rhs=rhs,
        tol=tol,
    )
    if not report.passed:
        logger.debug(
            "Equivalence check failed for S=%s M=%s M'=%s: delta=%.3e",
            spin,
            m,
            m_prime,
            report.delta,
        )
    return report


def equivalence_sweep(
    twice_s_values: Iterable[int],
    angle_samples: int,
    seed: int,
    tol: float = EQUIVALENCE_TOLERANCE,
    cap: int = EQUIVALENCE_SWEEP_CAP,
    m: MagneticQuantumNumber | None = None,
    m_prime: MagneticQuantumNumber | None = None,
    basis_cap: int = SUBSPACE_BASIS_CAP,
) -> list[EquivalenceReport]:
    """Every (M, M') pair of every spin, at angle_samples random (alpha, beta) each.

    Fixing m or m_prime restricts the sweep to pairs with that quantum number.
    """
    if angle_samples < 1:
        raise SpinDomainError(
            code="INVALID_SAMPLES",
            message="Počet náhodných úhlů musí být kladný",
            context={"angle_samples": angle_samples},
        )
    spins = [Spin(twice_s=int(value)) for value in twice_s_values]
    for spin in spins:
        if spin.twice_s > cap:
            raise CapacityError(
                code="CAPACITY",
                message=f"Ověření ekvivalence je omezeno na 2S <= {cap}",
                context={"twice_s": spin.twice_s, "cap": cap},
            )
    rng = np.random.default_rng(seed)
    reports: list[EquivalenceReport] = []
    for spin in spins:
        alphas = rng.uniform(0.0, 2.0 * math.pi, size=angle_samples)
        betas = rng.uniform(0.0, math.pi, size=angle_samples)
        rows = [spin.check(m)] if m is not None else spin.magnetic_numbers()
        columns = [spin.check(m_prime)] if m_prime is not None else spin.magnetic_numbers()
        for row in rows:
            for column in columns:
                for alpha, beta in zip(alphas, betas):
                    reports.append(
                        verify_equivalence(
                            spin, row, column, float(alpha), float(beta), tol, basis_cap
                        )
                    )
    logger.debug("Equivalence sweep produced %d reports", len(reports))
    return reports
