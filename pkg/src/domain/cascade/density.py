from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from src.domain.errors import InfeasibleDecompositionError, SpinDomainError

DENSITY_TOLERANCE = 1e-10
INTEGER_WEIGHT_TOLERANCE = 1e-10


@dataclass(frozen=True, slots=True, eq=False)
class Density2:
    """Proper state of one spin-1/2 slot, in the {psi_+^0, psi_-^0} basis."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (2, 2):
            raise SpinDomainError(
                code="NOT_DENSITY",
                message="Matice hustoty musí mít rozměr 2x2",
                context={"shape": list(matrix.shape)},
            )
        hermitian_gap = float(np.max(np.abs(matrix - matrix.conj().T)))
        trace = complex(np.trace(matrix))
        smallest = float(np.linalg.eigvalsh((matrix + matrix.conj().T) / 2.0)[0])
        if (
            hermitian_gap > DENSITY_TOLERANCE
            or abs(trace - 1.0) > DENSITY_TOLERANCE
            or smallest < -DENSITY_TOLERANCE
        ):
            raise SpinDomainError(
                code="NOT_DENSITY",
                message="Matice není hermitovská, pozitivně semidefinitní se stopou 1",
                context={"hermitian_gap": hermitian_gap, "trace": trace.real, "min_eigenvalue": smallest},
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_pure(cls, vector: np.ndarray) -> Density2:
        unit = np.asarray(vector, dtype=complex) / np.linalg.norm(vector)
        return cls(np.outer(unit, unit.conj()))

    @classmethod
    def from_mixture(cls, vectors: list[np.ndarray]) -> Density2:
        return cls(sum(np.outer(v, np.conj(v)) for v in vectors) / len(vectors))

    def spectrum(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigenvalues clipped to [0, 1], descending, with matching eigenvector columns."""
        values, vectors = np.linalg.eigh(self.matrix)
        order = np.argsort(values)[::-1]
        return np.clip(values[order], 0.0, 1.0), vectors[:, order]

    def is_pure(self, tol: float = DENSITY_TOLERANCE) -> bool:
        return float(self.spectrum()[0][0]) >= 1.0 - tol

    def expectation(self, vector: np.ndarray) -> float:
        return float(np.real(np.vdot(vector, self.matrix @ vector)))

    def distance(self, other: Density2) -> float:
        return float(np.max(np.abs(self.matrix - other.matrix)))


def decompose_density(density: Density2, count: int) -> list[np.ndarray]:
    """count unit spinors whose equal-weight mixture reproduces the density.

    Integer eigen-weights count * lambda_k give count * lambda_k copies of
    eigenvector k; otherwise the phase-spread ensemble
    sqrt(lambda_1) v_1 + e^{2 pi I j / count} sqrt(lambda_2) v_2 is used.
    """
    if count < 1:
        raise InfeasibleDecompositionError(
            code="INFEASIBLE_DECOMPOSITION",
            message="Počet čistých stavů musí být kladný",
            context={"count": count},
        )
    values, vectors = density.spectrum()
    leading, trailing = vectors[:, 0], vectors[:, 1]
    if density.is_pure():
        return [leading.copy() for _ in range(count)]
    if count == 1:
        raise InfeasibleDecompositionError(
            code="INFEASIBLE_DECOMPOSITION",
            message="Smíšený stav nelze vyjádřit jediným čistým stavem",
            context={"eigenvalues": values.tolist()},
        )

    weights = values * count
    rounded = np.rint(weights)
    if np.all(np.abs(weights - rounded) <= INTEGER_WEIGHT_TOLERANCE) and int(rounded.sum()) == count:
        copies = [leading.copy() for _ in range(int(rounded[0]))]
        copies += [trailing.copy() for _ in range(int(rounded[1]))]
        return copies

    first, second = math.sqrt(values[0]), math.sqrt(values[1])
    return [
        first * leading + np.exp(2j * math.pi * j / count) * second * trailing
        for j in range(count)
    ]
