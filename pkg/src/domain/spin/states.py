from __future__ import annotations

import math

import numpy as np

from src.domain.errors import SpinDomainError
from .model import BlochPoint, EulerAngles, MagneticQuantumNumber, Spin, SpinState
from .rotation import wigner_matrix

RAY_TOLERANCE = 1e-10
# below this relative modulus a spinor component counts as a pole, alpha is conventional
_POLE_EPSILON = 1e-14

SPIN_HALF = Spin.half()
PLUS = MagneticQuantumNumber(1)
MINUS = MagneticQuantumNumber(-1)


def basis_state(spin: Spin, m: MagneticQuantumNumber) -> SpinState:
    vector = np.zeros(spin.dimension, dtype=complex)
    vector[spin.position_of(m)] = 1.0
    return SpinState(spin=spin, amplitudes=vector)


def coherent_state(
    spin: Spin,
    m: MagneticQuantumNumber,
    angles: EulerAngles | None = None,
) -> SpinState:
    position = spin.position_of(m)
    rotation = wigner_matrix(spin, angles or EulerAngles.identity())
    return SpinState(spin=spin, amplitudes=rotation[:, position])


def spin_half_state(point: BlochPoint, m: MagneticQuantumNumber = PLUS) -> SpinState:
    return coherent_state(SPIN_HALF, m, EulerAngles(point.alpha, point.beta))


def transition_probability(a: SpinState, b: SpinState) -> float:
    if a.spin.dimension != b.spin.dimension:
        raise SpinDomainError(
            code="DIMENSION_MISMATCH",
            message="Přechodovou pravděpodobnost lze počítat jen mezi stavy stejné dimenze",
            context={"left": a.spin.dimension, "right": b.spin.dimension},
        )
    value = abs(complex(np.vdot(a.amplitudes, b.amplitudes))) ** 2
    return min(1.0, max(0.0, value))


def ray_equal(a: SpinState, b: SpinState, tol: float = RAY_TOLERANCE) -> bool:
    if a.spin != b.spin:
        return False
    return transition_probability(a, b) >= 1.0 - tol


def bloch_of_state(state: SpinState | np.ndarray) -> BlochPoint:
    vector = state.amplitudes if isinstance(state, SpinState) else np.asarray(state, dtype=complex)
    if vector.shape != (2,):
        raise SpinDomainError(
            code="DIMENSION_MISMATCH",
            message="Bod na Poincarého sféře lze určit jen pro stav spinu 1/2",
            context={"shape": list(vector.shape)},
        )
    norm = float(np.linalg.norm(vector))
    if norm == 0.0:
        raise SpinDomainError(
            code="ZERO_VECTOR",
            message="Nulový vektor nereprezentuje žádný stav",
        )
    upper, lower = vector / norm
    beta = 2.0 * math.atan2(abs(lower), abs(upper))
    if abs(lower) <= _POLE_EPSILON or abs(upper) <= _POLE_EPSILON:
        return BlochPoint(0.0, 0.0 if abs(lower) <= _POLE_EPSILON else math.pi)
    alpha = float(np.angle(lower) - np.angle(upper))
    return BlochPoint(alpha, beta)
