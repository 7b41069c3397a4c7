from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.optimize import linear_sum_assignment

from src.domain.errors import SpinDomainError
from src.domain.spin import (
    BlochPoint,
    EulerAngles,
    MagneticQuantumNumber,
    Spin,
    SpinState,
    rotation_matrix,
)
from .polynomial import (
    PolynomialVariant,
    ProjectiveRoot,
    build_polynomial,
    factorial_weights,
    roots,
)

# poles carry no azimuth; points this close to one compare as the pole itself
_POLE_SLACK = 1e-15


def point_key(point: BlochPoint) -> tuple[float, float]:
    if point.beta <= _POLE_SLACK or point.beta >= math.pi - _POLE_SLACK:
        return (point.beta, 0.0)
    return (point.beta, point.alpha)


@dataclass(frozen=True, slots=True, eq=False)
class Constellation:
    """Unordered multiset of 2S sphere points representing a spin-S ray."""

    spin: Spin
    points: tuple[BlochPoint, ...]

    def __post_init__(self) -> None:
        points = tuple(self.points)
        if len(points) != self.spin.twice_s:
            raise SpinDomainError(
                code="POINT_COUNT",
                message=(
                    f"Konstelace spinu {self.spin} musí mít {self.spin.twice_s} bodů, "
                    f"obdrženo {len(points)}"
                ),
                context={"expected": self.spin.twice_s, "actual": len(points)},
            )
        object.__setattr__(self, "points", points)

    def sorted_keys(self) -> tuple[tuple[float, float], ...]:
        return tuple(sorted(point_key(p) for p in self.points))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Constellation):
            return NotImplemented
        return self.spin == other.spin and self.sorted_keys() == other.sorted_keys()

    def __hash__(self) -> int:
        return hash((self.spin, self.sorted_keys()))

    def as_records(self) -> list[dict[str, float]]:
        return [p.as_record() for p in self.points]

    @classmethod
    def from_records(cls, spin: Spin, records: Iterable[dict[str, float]]) -> Constellation:
        return cls(spin=spin, points=tuple(BlochPoint(r["alpha"], r["beta"]) for r in records))


def bloch_of_root(root: ProjectiveRoot) -> BlochPoint:
    """Point whose factor cos(beta/2) x + e^{I alpha} sin(beta/2) vanishes at the root."""
    if root.is_infinite:
        return BlochPoint.south()
    value = complex(root.value)
    if value == 0:
        return BlochPoint.north()
    beta = 2.0 * math.atan(abs(value))
    alpha = math.atan2(-value.imag, -value.real)
    return BlochPoint(alpha, beta)


def root_of_point(point: BlochPoint) -> ProjectiveRoot:
    cos_half = math.cos(point.beta / 2.0)
    if cos_half == 0.0 or point.beta >= math.pi:
        return ProjectiveRoot.infinity()
    return ProjectiveRoot(-complex(np.exp(1j * point.alpha)) * math.tan(point.beta / 2.0))


def factor_coefficients(point: BlochPoint) -> np.ndarray:
    """First-order factor of one star, highest degree first."""
    return np.array(
        [math.cos(point.beta / 2.0), np.exp(1j * point.alpha) * math.sin(point.beta / 2.0)],
        dtype=complex,
    )


def state_to_constellation(
    state: SpinState,
    variant: PolynomialVariant = PolynomialVariant.MAJORANA,
) -> Constellation:
    found = roots(build_polynomial(state, variant))
    return Constellation(spin=state.spin, points=tuple(bloch_of_root(r) for r in found))


def constellation_to_state(
    constellation: Constellation,
    variant: PolynomialVariant = PolynomialVariant.MAJORANA,
) -> SpinState:
    product = np.array([1.0 + 0.0j])
    for point in constellation.points:
        product = np.convolve(product, factor_coefficients(point))
    if variant is PolynomialVariant.BACRY:
        return SpinState.normalized(constellation.spin, product)
    weights = factorial_weights(constellation.spin.twice_s)
    return SpinState.normalized(constellation.spin, product * weights)


def coherent_constellation(
    spin: Spin,
    m: MagneticQuantumNumber,
    point: BlochPoint,
) -> Constellation:
    aligned = spin.plus_count(m)
    opposed = spin.minus_count(m)
    antipode = point.antipode()
    return Constellation(spin=spin, points=(point,) * aligned + (antipode,) * opposed)


def match_constellations(a: Constellation, b: Constellation) -> float:
    """Largest angular error under the optimal one-to-one pairing of points."""
    if a.spin != b.spin:
        raise SpinDomainError(
            code="SPIN_MISMATCH",
            message="Konstelace různých spinů nelze porovnat",
            context={"left": a.spin.twice_s, "right": b.spin.twice_s},
        )
    left = np.array([p.cartesian() for p in a.points])
    right = np.array([p.cartesian() for p in b.points])
    chords = np.linalg.norm(left[:, None, :] - right[None, :, :], axis=2)
    cost = 2.0 * np.arcsin(np.clip(chords / 2.0, 0.0, 1.0))
    rows, columns = linear_sum_assignment(cost)
    return float(cost[rows, columns].max())


def rotate_constellation(constellation: Constellation, angles: EulerAngles) -> Constellation:
    rotation = rotation_matrix(angles)
    return Constellation(
        spin=constellation.spin,
        points=tuple(p.rotated(rotation) for p in constellation.points),
    )
