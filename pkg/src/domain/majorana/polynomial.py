from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from src.domain.errors import SpinDomainError
from src.domain.spin import Spin, SpinState

logger = logging.getLogger(__name__)

# relative magnitude under which a leading/trailing coefficient counts as an exact zero
ZERO_COEFFICIENT_TOLERANCE = 1e-14
# eigenvalues of a k-fold root scatter by roughly eps^(1/k); for 2S <= 16 that stays well below this
CLUSTER_RADIUS = 0.2
# rejected clusters are split again at a tenth of the radius until this floor
MIN_CLUSTER_RADIUS = 1e-8
MULTIPLE_ROOT_ITERATIONS = 50
# two stars d apart leave residuals of order d^2 at their merged point, so this keeps
# every accepted merge within about 3e-7 of the true stars
MULTIPLE_ROOT_RESIDUAL = 1e-13


class PolynomialVariant(str, Enum):
    BACRY = "bacry"
    MAJORANA = "majorana"

    def __str__(self) -> str:
        return self.value


@lru_cache(maxsize=64)
def factorial_weights(twice_s: int) -> np.ndarray:
    """sqrt((S+m)!(S-m)!) per storage position, +S first."""
    return np.array(
        [
            math.sqrt(math.factorial(twice_s - position) * math.factorial(position))
            for position in range(twice_s + 1)
        ]
    )


@dataclass(frozen=True, slots=True, eq=False)
class SpinPolynomial:
    """Projective polynomial of degree <= 2S, coefficients highest degree first.

    The coefficient at storage position p belongs to the amplitude with
    m = S - p and multiplies x^(2S - p).
    """

    spin: Spin
    coefficients: np.ndarray
    variant: PolynomialVariant

    def __post_init__(self) -> None:
        vector = np.array(self.coefficients, dtype=complex).reshape(-1)
        if vector.shape[0] != self.spin.dimension:
            raise SpinDomainError(
                code="DIMENSION_MISMATCH",
                message="Polynom musí mít 2S+1 koeficientů",
                context={"expected": self.spin.dimension, "actual": int(vector.shape[0])},
            )
        vector.setflags(write=False)
        object.__setattr__(self, "coefficients", vector)

    @property
    def degree(self) -> int:
        nonzero = np.flatnonzero(np.abs(self.coefficients) > 0.0)
        return -1 if nonzero.size == 0 else self.spin.twice_s - int(nonzero[0])

    def evaluate(self, x: complex) -> complex:
        return complex(np.polyval(self.coefficients, x))


@dataclass(frozen=True, slots=True)
class ProjectiveRoot:
    """A root on the Riemann sphere; ``value is None`` marks the point at infinity."""

    value: complex | None

    @classmethod
    def infinity(cls) -> ProjectiveRoot:
        return cls(value=None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None


def build_polynomial(
    state: SpinState,
    variant: PolynomialVariant = PolynomialVariant.MAJORANA,
) -> SpinPolynomial:
    coefficients = np.array(state.amplitudes, dtype=complex)
    if variant is PolynomialVariant.MAJORANA:
        coefficients = coefficients / factorial_weights(state.spin.twice_s)
    return SpinPolynomial(spin=state.spin, coefficients=coefficients, variant=variant)


def companion_matrix(monic_tail: np.ndarray) -> np.ndarray:
    """Companion matrix of x^n + c_1 x^(n-1) + ... + c_n given (c_1, ..., c_n)."""
    degree = monic_tail.shape[0]
    matrix = np.zeros((degree, degree), dtype=complex)
    matrix[0, :] = -monic_tail
    if degree > 1:
        matrix[1:, :-1] = np.eye(degree - 1)
    return matrix


def roots(polynomial: SpinPolynomial) -> tuple[ProjectiveRoot, ...]:
    coefficients = polynomial.coefficients
    scale = float(np.max(np.abs(coefficients)))
    if scale == 0.0:
        raise SpinDomainError(
            code="ZERO_POLYNOMIAL",
            message="Polynom s nulovými koeficienty nemá kořeny",
        )
    scaled = coefficients / scale
    significant = np.flatnonzero(np.abs(scaled) > ZERO_COEFFICIENT_TOLERANCE)
    first, last = int(significant[0]), int(significant[-1])
    at_infinity = first
    at_zero = polynomial.spin.twice_s - last
    core = scaled[first : last + 1]
    logger.debug(
        "Stripped %d roots at infinity and %d at zero from degree-%d polynomial",
        at_infinity,
        at_zero,
        polynomial.spin.twice_s,
    )

    finite: list[complex] = []
    if core.shape[0] > 1:
        eigenvalues = [
            complex(v) for v in np.linalg.eigvals(companion_matrix(core[1:] / core[0]))
        ]
        finite = _resolve(core, np.polyder(core), eigenvalues, CLUSTER_RADIUS)

    return (
        tuple(ProjectiveRoot.infinity() for _ in range(at_infinity))
        + tuple(ProjectiveRoot(complex(r)) for r in finite)
        + tuple(ProjectiveRoot(0j) for _ in range(at_zero))
    )


def chordal_distance(a: complex, b: complex) -> float:
    """Distance of two finite points after stereographic projection, in [0, 2]."""
    return 2.0 * abs(a - b) / math.sqrt((1.0 + abs(a) ** 2) * (1.0 + abs(b) ** 2))


def _resolve(
    core: np.ndarray,
    derivative: np.ndarray,
    estimates: list[complex],
    radius: float,
) -> list[complex]:
    """Group estimates by radius; a group that is not one multiple root is split finer."""
    resolved: list[complex] = []
    for cluster in _clusters(estimates, radius):
        members = [estimates[i] for i in cluster]
        if len(members) == 1:
            resolved.append(_refine(core, derivative, members[0]))
            continue
        multiple = _multiple_root(core, members)
        if multiple is not None:
            logger.debug("Resolved %d-fold root at %s", len(members), multiple)
            resolved.extend([multiple] * len(members))
        elif radius / 10.0 >= MIN_CLUSTER_RADIUS:
            resolved.extend(_resolve(core, derivative, members, radius / 10.0))
        else:
            logger.debug(
                "Keeping %d close roots near %s as distinct points", len(members), members[0]
            )
            resolved.extend(_refine(core, derivative, estimate) for estimate in members)
    return resolved


def _clusters(values: list[complex], radius: float) -> list[list[int]]:
    """Single-linkage groups of values closer than radius on the sphere."""
    groups: list[list[int]] = []
    unassigned = list(range(len(values)))
    while unassigned:
        group = [unassigned.pop(0)]
        grew = True
        while grew:
            grew = False
            for index in list(unassigned):
                if any(
                    chordal_distance(values[index], values[member]) < radius
                    for member in group
                ):
                    group.append(index)
                    unassigned.remove(index)
                    grew = True
        groups.append(group)
    return groups


def _relative_residual(coefficients: np.ndarray, x: complex) -> float:
    magnitude = float(np.polyval(np.abs(coefficients), abs(x)))
    if magnitude == 0.0:
        return 0.0
    return abs(complex(np.polyval(coefficients, x))) / magnitude


def _multiple_root(core: np.ndarray, members: list[complex]) -> complex | None:
    """Refine a cluster as one root of multiplicity len(members), or None if it is not one.

    Works in the chart where the centroid has modulus <= 1. The (k-1)-th derivative
    has a simple root there, and every lower derivative must vanish at it.
    """
    multiplicity = len(members)
    centroid = sum(members) / multiplicity
    flipped = abs(centroid) > 1.0
    chart = core[::-1] if flipped else core
    x = 1.0 / centroid if flipped else centroid

    highest = np.polyder(chart, multiplicity - 1)
    slope_coefficients = np.polyder(highest)
    for _ in range(MULTIPLE_ROOT_ITERATIONS):
        slope = complex(np.polyval(slope_coefficients, x))
        if slope == 0:
            return None
        step = complex(np.polyval(highest, x)) / slope
        x -= step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break

    for order in range(multiplicity - 1):
        if _relative_residual(np.polyder(chart, order), x) > MULTIPLE_ROOT_RESIDUAL:
            return None
    if flipped:
        return None if x == 0 else 1.0 / x
    return x


def _refine(core: np.ndarray, derivative: np.ndarray, estimate: complex) -> complex:
    """One Newton step, kept only when it lowers the residual."""
    slope = complex(np.polyval(derivative, estimate))
    residual = abs(complex(np.polyval(core, estimate)))
    if slope == 0 or residual == 0.0:
        return estimate
    candidate = estimate - complex(np.polyval(core, estimate)) / slope
    if abs(complex(np.polyval(core, candidate))) < residual:
        return candidate
    return estimate
