from __future__ import annotations

import logging
import math
from functools import reduce
from typing import Sequence

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from src.domain.errors import CapacityError, SpinDomainError
from src.domain.majorana import coherent_constellation, point_key, state_to_constellation
from src.domain.spin import (
    BlochPoint,
    MagneticQuantumNumber,
    Spin,
    SpinState,
    spin_half_state,
)
from .tensor import SymmetricTensorState, minus_counts

logger = logging.getLogger(__name__)

GENERIC_SYMMETRIZE_CAP = 8
COHERENT_SYMMETRIZE_CAP = 16


def _checked_points(points: Sequence[BlochPoint], spin: Spin | None) -> tuple[Spin, list[BlochPoint]]:
    listed = list(points)
    if not listed or (spin is not None and len(listed) != spin.twice_s):
        expected = spin.twice_s if spin is not None else "2S >= 1"
        raise SpinDomainError(
            code="POINT_COUNT",
            message="Počet bodů neodpovídá počtu slotů 2S",
            context={"expected": expected, "actual": len(listed)},
        )
    return (spin or Spin(twice_s=len(listed))), listed


def _spinor(point: BlochPoint) -> np.ndarray:
    return spin_half_state(point).amplitudes


def _multiplicities(points: list[BlochPoint]) -> dict[tuple[float, float], int]:
    counts: dict[tuple[float, float], int] = {}
    for point in points:
        key = point_key(point)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _is_coherent(points: list[BlochPoint]) -> bool:
    distinct: dict[tuple[float, float], BlochPoint] = {}
    for point in points:
        distinct.setdefault(point_key(point), point)
    if len(distinct) == 1:
        return True
    if len(distinct) == 2:
        first, second = distinct.values()
        return point_key(first.antipode()) == point_key(second) or math.isclose(
            first.angular_distance(second), math.pi, abs_tol=1e-12
        )
    return False


def product_state(points: Sequence[BlochPoint], spin: Spin | None = None) -> SymmetricTensorState:
    resolved, listed = _checked_points(points, spin)
    vector = reduce(np.kron, [_spinor(point) for point in listed])
    keys = {point_key(point) for point in listed}
    return SymmetricTensorState.normalized(resolved, vector, symmetric=len(keys) == 1)


def ordering_sum(
    points: Sequence[BlochPoint],
    spin: Spin | None = None,
    generic_cap: int = GENERIC_SYMMETRIZE_CAP,
    coherent_cap: int = COHERENT_SYMMETRIZE_CAP,
) -> np.ndarray:
    """Unnormalized sum of product states over all distinguishable orderings.

    Summing over every permutation gives j!(n-j)! e_j at a string with j '+'
    labels, e_j being the x^j coefficient of prod(a_l x + b_l) over the slot
    spinors (a_l, b_l). Repeated points are then divided out by their
    multiplicity factorials.
    """
    resolved, listed = _checked_points(points, spin)
    slot_count = resolved.twice_s
    coherent = _is_coherent(listed)
    cap = coherent_cap if coherent else generic_cap
    if slot_count > cap:
        raise CapacityError(
            code="CAPACITY",
            message=f"Symetrizace je omezena na 2S <= {cap}",
            context={"twice_s": slot_count, "cap": cap, "coherent": coherent},
        )

    polynomial = np.array([1.0 + 0.0j])
    for point in listed:
        polynomial = np.convolve(polynomial, _spinor(point))
    # polynomial[q] multiplies x^(n - q), i.e. belongs to strings with q '-' labels
    repeated = math.prod(math.factorial(count) for count in _multiplicities(listed).values())
    per_minus_count = np.array(
        [
            math.factorial(slot_count - minus) * math.factorial(minus) * polynomial[minus] / repeated
            for minus in range(slot_count + 1)
        ]
    )
    return per_minus_count[minus_counts(slot_count)]


def distinguishable_orderings(points: Sequence[BlochPoint]) -> list[tuple[BlochPoint, ...]]:
    listed = list(points)
    representatives: dict[tuple[float, float], BlochPoint] = {}
    keys = []
    for point in listed:
        key = point_key(point)
        representatives.setdefault(key, point)
        keys.append(key)
    return [
        tuple(representatives[key] for key in ordering)
        for ordering in multiset_permutations(sorted(keys))
    ]


def ordering_sum_by_enumeration(points: Sequence[BlochPoint]) -> np.ndarray:
    orderings = distinguishable_orderings(points)
    return sum(reduce(np.kron, [_spinor(p) for p in ordering]) for ordering in orderings)


def symmetrize(
    points: Sequence[BlochPoint],
    spin: Spin | None = None,
    generic_cap: int = GENERIC_SYMMETRIZE_CAP,
    coherent_cap: int = COHERENT_SYMMETRIZE_CAP,
) -> SymmetricTensorState:
    resolved, listed = _checked_points(points, spin)
    vector = ordering_sum(listed, resolved, generic_cap, coherent_cap)
    logger.debug(
        "Symmetrized %d points, pre-normalization norm^2 = %.17g",
        resolved.twice_s,
        float(np.vdot(vector, vector).real),
    )
    return SymmetricTensorState.normalized(resolved, vector, symmetric=True)


def normalization_constant(spin: Spin, m: MagneticQuantumNumber) -> float:
    arrangements = math.factorial(spin.twice_s) // (
        math.factorial(spin.plus_count(m)) * math.factorial(spin.minus_count(m))
    )
    return math.sqrt(arrangements)


def coherent_embedding(
    spin: Spin,
    m: MagneticQuantumNumber,
    point: BlochPoint | None = None,
    coherent_cap: int = COHERENT_SYMMETRIZE_CAP,
) -> SymmetricTensorState:
    constellation = coherent_constellation(spin, m, point or BlochPoint.north())
    return symmetrize(constellation.points, spin, coherent_cap=coherent_cap)


def dicke_embedding(state: SpinState) -> SymmetricTensorState:
    """Sum over m of psi_m times the normalized Dicke vector with S+m '+' labels."""
    slot_count = state.spin.twice_s
    counts = minus_counts(slot_count)
    scale = np.array([math.sqrt(math.comb(slot_count, minus)) for minus in range(slot_count + 1)])
    vector = state.amplitudes[counts] / scale[counts]
    return SymmetricTensorState(spin=state.spin, amplitudes=vector, symmetric=True)


def embed_state(
    state: SpinState,
    generic_cap: int = GENERIC_SYMMETRIZE_CAP,
    coherent_cap: int = COHERENT_SYMMETRIZE_CAP,
) -> SymmetricTensorState:
    """Stars of the state, then symmetrization of the star multiset."""
    constellation = state_to_constellation(state)
    return symmetrize(constellation.points, state.spin, generic_cap, coherent_cap)
