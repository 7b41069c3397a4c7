from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import expm

from .model import EulerAngles, Spin

# (row, column, sign * coefficient, cos exponent, sin exponent) per k-term
_Term = tuple[int, int, float, int, int]


@lru_cache(maxsize=64)
def _small_d_terms(twice_s: int) -> tuple[_Term, ...]:
    """Exact k-sum terms of d^S_{m,m'}(beta), rows and columns stored +S first.

    Each term contributes coefficient * cos(beta/2)^a * (-sin(beta/2))^b, where
    the coefficient sqrt(C^2) / denominator is formed from integer factorials.
    """
    terms: list[_Term] = []
    dimension = twice_s + 1
    for row in range(dimension):
        sm = row
        sp = twice_s - row
        for column in range(dimension):
            tm = column
            tp = twice_s - column
            squared = (
                math.factorial(sp) * math.factorial(sm) * math.factorial(tp) * math.factorial(tm)
            )
            k_low = max(0, tp - sp)
            k_high = min(sm, tp)
            for k in range(k_low, k_high + 1):
                denominator = (
                    math.factorial(sm - k)
                    * math.factorial(tp - k)
                    * math.factorial(k + sp - tp)
                    * math.factorial(k)
                )
                magnitude = math.sqrt(Fraction(squared, denominator * denominator))
                sign = -1.0 if k % 2 else 1.0
                terms.append((row, column, sign * magnitude, tp + sm - 2 * k, sp - tp + 2 * k))
    return tuple(terms)


def wigner_small_d(spin: Spin, beta: float) -> np.ndarray:
    cos_half = math.cos(beta / 2.0)
    minus_sin_half = -math.sin(beta / 2.0)
    matrix = np.zeros((spin.dimension, spin.dimension))
    for row, column, coefficient, cos_power, sin_power in _small_d_terms(spin.twice_s):
        matrix[row, column] += coefficient * cos_half**cos_power * minus_sin_half**sin_power
    return matrix


def wigner_matrix(spin: Spin, angles: EulerAngles) -> np.ndarray:
    """Active rotation of C^(2S+1): entry (m, m') = e^{-I m alpha} d_{m,m'}(beta) e^{-I m' gamma}."""
    m_values = spin.m_values()
    left = np.exp(-1j * m_values * angles.alpha)
    right = np.exp(-1j * m_values * angles.gamma)
    return left[:, None] * wigner_small_d(spin, angles.beta) * right[None, :]


def spin_operators(spin: Spin) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    m_values = spin.m_values()
    s = spin.twice_s / 2.0
    j_plus = np.zeros((spin.dimension, spin.dimension), dtype=complex)
    # J+ raises m: column p (m) feeds row p - 1 (m + 1)
    for position in range(1, spin.dimension):
        m = m_values[position]
        j_plus[position - 1, position] = math.sqrt(s * (s + 1.0) - m * (m + 1.0))
    j_minus = j_plus.conj().T
    j_x = (j_plus + j_minus) / 2.0
    j_y = (j_plus - j_minus) / 2.0j
    j_z = np.diag(m_values).astype(complex)
    return j_x, j_y, j_z


def wigner_matrix_from_generators(spin: Spin, angles: EulerAngles) -> np.ndarray:
    _, j_y, j_z = spin_operators(spin)
    return (
        expm(-1j * angles.alpha * j_z)
        @ expm(-1j * angles.beta * j_y)
        @ expm(-1j * angles.gamma * j_z)
    )


def rotation_matrix(angles: EulerAngles) -> np.ndarray:
    """SO(3) image R_z(alpha) R_y(beta) R_z(gamma) acting on sphere points."""

    def about_z(angle: float) -> np.ndarray:
        c, s = math.cos(angle), math.sin(angle)
        return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])

    c, s = math.cos(angles.beta), math.sin(angles.beta)
    about_y = np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])
    return about_z(angles.alpha) @ about_y @ about_z(angles.gamma)
