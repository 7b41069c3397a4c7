from __future__ import annotations

import logging
import math
from fractions import Fraction

import numpy as np

from .model import EulerAngles, MagneticQuantumNumber, Spin
from .states import basis_state, coherent_state, transition_probability

logger = logging.getLogger(__name__)

CLOSED_FORM_TOLERANCE = 1e-10


def coherent_transition_closed_form(
    spin: Spin,
    m: MagneticQuantumNumber,
    m_prime: MagneticQuantumNumber,
    beta: float,
) -> float:
    """|<psi_M^0 | psi_M'^{alpha,beta}>|^2 from the k-sum; alpha does not enter.

    k runs over max{0, M - M'} <= k <= min{S - M', S + M}, the range in which
    every exponent and factorial argument stays non-negative.
    """
    sp, sm = spin.plus_count(m), spin.minus_count(m)
    tp, tm = spin.plus_count(m_prime), spin.minus_count(m_prime)

    cos_half = math.cos(beta / 2.0)
    minus_sin_half = -math.sin(beta / 2.0)
    squared = math.factorial(sp) * math.factorial(sm) * math.factorial(tp) * math.factorial(tm)

    total = 0.0
    for k in range(max(0, sp - tp), min(tm, sp) + 1):
        denominator = (
            math.factorial(tm - k)
            * math.factorial(sp - k)
            * math.factorial(k + tp - sp)
            * math.factorial(k)
        )
        coefficient = math.sqrt(Fraction(squared, denominator * denominator))
        sign = -1.0 if k % 2 else 1.0
        total += (
            sign
            * coefficient
            * cos_half ** (sp + tm - 2 * k)
            * minus_sin_half ** (tp - sp + 2 * k)
        )
    return min(1.0, total * total)


def brute_force_transition(
    spin: Spin,
    m: MagneticQuantumNumber,
    m_prime: MagneticQuantumNumber,
    angles: EulerAngles,
) -> float:
    return transition_probability(basis_state(spin, m), coherent_state(spin, m_prime, angles))


def checked_transition_probability(
    spin: Spin,
    m: MagneticQuantumNumber,
    m_prime: MagneticQuantumNumber,
    angles: EulerAngles,
) -> float:
    """Closed form cross-checked against the overlap; the overlap wins on mismatch."""
    closed = coherent_transition_closed_form(spin, m, m_prime, angles.beta)
    brute = brute_force_transition(spin, m, m_prime, angles)
    if abs(closed - brute) > CLOSED_FORM_TOLERANCE:
        logger.warning(
            "Closed-form transition probability disagrees with overlap "
            "(S=%s, M=%s, M'=%s, beta=%.17g): closed=%.17g overlap=%.17g",
            spin,
            m,
            m_prime,
            angles.beta,
            closed,
            brute,
        )
        return brute
    return closed


def transition_matrix(spin: Spin, beta: float) -> np.ndarray:
    """P_{M,M'} for all quantum numbers, rows and columns stored +S first."""
    numbers = spin.magnetic_numbers()
    return np.array(
        [
            [coherent_transition_closed_form(spin, m, m_prime, beta) for m_prime in numbers]
            for m in numbers
        ]
    )
