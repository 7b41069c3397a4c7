from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from src.domain.errors import CapacityError, SpinDomainError
from src.domain.spin import (
    SPIN_HALF,
    EulerAngles,
    MagneticQuantumNumber,
    Spin,
    wigner_matrix,
)
from .tensor import SymmetricTensorState, minus_counts

# explicit bases grow as C(2S, S+M') * 2^(2S) amplitudes
SUBSPACE_BASIS_CAP = 12


def spin_half_rotation(alpha: float, beta: float) -> np.ndarray:
    """Columns are psi_+^{alpha,beta} and psi_-^{alpha,beta}."""
    return wigner_matrix(SPIN_HALF, EulerAngles(alpha, beta))


@dataclass(frozen=True, slots=True, eq=False)
class OutcomeSubspace:
    """Span of the distinguishable orderings with S+M' factors psi_+ and S-M' factors psi_-."""

    spin: Spin
    m_prime: MagneticQuantumNumber
    alpha: float
    beta: float
    basis: np.ndarray

    def __post_init__(self) -> None:
        basis = np.array(self.basis, dtype=complex)
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[1])

    def gram(self) -> np.ndarray:
        return self.basis.conj().T @ self.basis


def outcome_subspace(
    spin: Spin,
    m_prime: MagneticQuantumNumber,
    alpha: float,
    beta: float,
    cap: int = SUBSPACE_BASIS_CAP,
) -> OutcomeSubspace:
    if spin.twice_s > cap:
        raise CapacityError(
            code="CAPACITY",
            message=f"Explicitní báze podprostoru je omezena na 2S <= {cap}",
            context={"twice_s": spin.twice_s, "cap": cap},
        )
    wanted_minus = spin.minus_count(m_prime)
    rotation = spin_half_rotation(alpha, beta)
    slot_count = spin.twice_s
    columns = []
    for index in np.flatnonzero(minus_counts(slot_count) == wanted_minus):
        bits = [(int(index) >> (slot_count - 1 - slot)) & 1 for slot in range(slot_count)]
        columns.append(reduce(np.kron, [rotation[:, bit] for bit in bits]))
    angles = EulerAngles(alpha, beta)
    return OutcomeSubspace(
        spin=spin,
        m_prime=m_prime,
        alpha=angles.alpha,
        beta=angles.beta,
        basis=np.column_stack(columns),
    )


def projection_probability(state: SymmetricTensorState, subspace: OutcomeSubspace) -> float:
    if state.spin != subspace.spin:
        raise SpinDomainError(
            code="SPIN_MISMATCH",
            message="Stav a podprostor musí patřit ke stejnému spinu",
            context={"state": state.spin.twice_s, "subspace": subspace.spin.twice_s},
        )
    coefficients = subspace.basis.conj().T @ state.amplitudes
    return min(1.0, float(np.vdot(coefficients, coefficients).real))


def outcome_basis_matrix(
    spin: Spin, alpha: float, beta: float, cap: int = SUBSPACE_BASIS_CAP
) -> np.ndarray:
    """All outcome subspace bases side by side, M' descending."""
    return np.column_stack(
        [outcome_subspace(spin, m, alpha, beta, cap).basis for m in spin.magnetic_numbers()]
    )


def measurement_distribution(
    state: SymmetricTensorState,
    alpha: float,
    beta: float,
) -> dict[MagneticQuantumNumber, float]:
    """Projection probabilities for every M' without forming explicit bases.

    The adjoint single-slot rotation is applied along each tensor axis, so the
    result holds coefficients in the rotated product basis.
    """
    adjoint = spin_half_rotation(alpha, beta).conj().T
    tensor = state.as_tensor()
    for axis in range(state.slot_count):
        tensor = np.moveaxis(np.tensordot(adjoint, tensor, axes=(1, axis)), 0, axis)
    weights = np.abs(tensor.reshape(-1)) ** 2
    totals = np.bincount(minus_counts(state.slot_count), weights=weights, minlength=state.slot_count + 1)
    return {
        m: float(totals[state.spin.minus_count(m)]) for m in state.spin.magnetic_numbers()
    }


def permutation_overlap_coefficient(
    spin: Spin,
    m: MagneticQuantumNumber,
    m_prime: MagneticQuantumNumber,
    k: int,
) -> int:
    """Orderings of the M side meeting a fixed M' ordering with k (+ over -) slot pairs."""
    low, high = overlap_k_range(spin, m, m_prime)
    if not low <= k <= high:
        raise SpinDomainError(
            code="K_OUT_OF_RANGE",
            message=f"Index k musí ležet v intervalu [{low}, {high}]",
            context={"k": k, "low": low, "high": high},
        )
    return math.comb(spin.plus_count(m_prime), spin.plus_count(m) - k) * math.comb(
        spin.minus_count(m_prime), k
    )


def overlap_k_range(
    spin: Spin,
    m: MagneticQuantumNumber,
    m_prime: MagneticQuantumNumber,
) -> tuple[int, int]:
    # max{0, M - M'} <= k <= min{S - M', S + M}
    low = max(0, (m.twice_m - m_prime.twice_m) // 2)
    high = min(spin.minus_count(m_prime), spin.plus_count(m))
    return low, high


def unnormalized_overlap(
    spin: Spin,
    m: MagneticQuantumNumber,
    m_prime: MagneticQuantumNumber,
    alpha: float,
    beta: float,
) -> complex:
    """Sum over k of a_k times single-slot overlaps raised to the b exponents.

    Multiplying by C(2S, S+M') gives the overlap of the unnormalized
    symmetrized vectors for M (unrotated) and M' (rotated by alpha, beta).
    """
    rotation = spin_half_rotation(alpha, beta)
    plus_plus, minus_plus = rotation[0, 0], rotation[1, 0]
    plus_minus, minus_minus = rotation[0, 1], rotation[1, 1]
    s_plus_m = spin.plus_count(m)
    s_minus_m_prime = spin.minus_count(m_prime)
    m_shift = (m_prime.twice_m - m.twice_m) // 2
    low, high = overlap_k_range(spin, m, m_prime)
    total = 0j
    for k in range(low, high + 1):
        total += (
            permutation_overlap_coefficient(spin, m, m_prime, k)
            * plus_plus ** (s_plus_m - k)
            * minus_plus ** (m_shift + k)
            * plus_minus**k
            * minus_minus ** (s_minus_m_prime - k)
        )
    return complex(total)


def overlap_sum_probability(
    spin: Spin,
    m: MagneticQuantumNumber,
    m_prime: MagneticQuantumNumber,
    alpha: float,
    beta: float,
) -> float:
    total = unnormalized_overlap(spin, m, m_prime, alpha, beta)
    arrangements_m = math.comb(spin.twice_s, spin.plus_count(m))
    arrangements_m_prime = math.comb(spin.twice_s, spin.plus_count(m_prime))
    return min(1.0, arrangements_m_prime * abs(total) ** 2 / arrangements_m)
