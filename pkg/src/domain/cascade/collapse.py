from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from src.domain.embedding import Outcome, SymmetricTensorState
from src.domain.errors import SpinDomainError
from .density import Density2
from .state import CascadeResult, CascadeState

logger = logging.getLogger(__name__)


def _check_slot(slot_count: int, slot: int) -> None:
    if not 0 <= slot < slot_count:
        raise SpinDomainError(
            code="SLOT_OUT_OF_RANGE",
            message=f"Slot {slot} neexistuje, stav má {slot_count} slotů",
            context={"slot": slot, "slot_count": slot_count},
        )


def _slot_matrix(tensor: np.ndarray, axis: int) -> np.ndarray:
    """2 x rest matrix: row b holds the amplitudes with the slot label b."""
    return np.moveaxis(tensor, axis, 0).reshape(2, -1)


def _density_of_tensor(tensor: np.ndarray, axis: int) -> Density2:
    matrix = _slot_matrix(tensor, axis)
    return Density2(matrix @ matrix.conj().T)


def reduced_density(state: SymmetricTensorState, slot: int) -> Density2:
    _check_slot(state.slot_count, slot)
    return _density_of_tensor(state.as_tensor(), slot)


def proper_states(state: SymmetricTensorState | CascadeState) -> tuple[Density2, ...]:
    """Reduced density of every unmeasured slot, in slot order."""
    if isinstance(state, CascadeState):
        by_slot = {
            slot: _density_of_tensor(state.remaining, axis)
            for axis, slot in enumerate(state.pending)
        }
        return tuple(by_slot[slot] for slot in sorted(by_slot))
    return tuple(_density_of_tensor(state.as_tensor(), slot) for slot in range(state.slot_count))


@dataclass(frozen=True, slots=True, eq=False)
class BiorthogonalSplit:
    """psi = a_+ psi_+^0 (x) phi_+ + a_- psi_-^0 (x) phi_-; phi is None where a vanishes."""

    a_plus: float
    a_minus: float
    phi_plus: np.ndarray | None
    phi_minus: np.ndarray | None


def biorthogonal_split(state: SymmetricTensorState, slot: int) -> BiorthogonalSplit:
    _check_slot(state.slot_count, slot)
    rows = _slot_matrix(state.as_tensor(), slot)
    norms = [float(np.linalg.norm(row)) for row in rows]
    conditionals = [row / norm if norm > 0.0 else None for row, norm in zip(rows, norms)]
    return BiorthogonalSplit(
        a_plus=norms[0],
        a_minus=norms[1],
        phi_plus=conditionals[0],
        phi_minus=conditionals[1],
    )


def _branch(state: CascadeState, label: Outcome) -> np.ndarray:
    if state.is_complete:
        raise SpinDomainError(
            code="EMPTY_CASCADE",
            message="Kaskáda nemá žádný neměřený slot",
        )
    outcome_vector = state.measurement_basis()[:, label.bit]
    return np.tensordot(outcome_vector.conj(), state.remaining, axes=(0, 0))


def outcome_probabilities(state: CascadeState) -> tuple[float, float]:
    """(P(+), P(-)) for the next slot, normalized to sum to one."""
    plus = float(np.vdot(_branch(state, Outcome.PLUS), _branch(state, Outcome.PLUS)).real)
    minus = float(np.vdot(_branch(state, Outcome.MINUS), _branch(state, Outcome.MINUS)).real)
    total = plus + minus
    return plus / total, minus / total


def collapse(state: CascadeState, label: Outcome) -> CascadeState:
    """Deterministic update of the unmeasured slots given the observed label."""
    branch = _branch(state, label)
    norm = float(np.linalg.norm(branch))
    if norm == 0.0:
        raise SpinDomainError(
            code="IMPOSSIBLE_OUTCOME",
            message=f"Výsledek {label} má nulovou pravděpodobnost",
            context={"prefix": state.prefix, "label": str(label)},
        )
    remaining = np.asarray(branch / norm)
    remaining.setflags(write=False)
    return CascadeState(
        spin=state.spin,
        remaining=remaining,
        pending=state.pending[1:],
        outcomes=state.outcomes + (label,),
        alpha=state.alpha,
        beta=state.beta,
    )


def measure_entity(state: CascadeState, rng: np.random.Generator) -> tuple[Outcome, CascadeState]:
    p_plus, _ = outcome_probabilities(state)
    label = Outcome.PLUS if rng.random() < p_plus else Outcome.MINUS
    logger.debug("Slot %d measured %s with P(+)=%.6f", state.pending[0], label, p_plus)
    return label, collapse(state, label)


def run_cascade(
    initial: SymmetricTensorState,
    alpha: float,
    beta: float,
    rng: np.random.Generator,
    order: list[int] | None = None,
) -> CascadeResult:
    state = CascadeState.start(initial, alpha, beta, order)
    while not state.is_complete:
        _, state = measure_entity(state, rng)
    return CascadeResult(spin=initial.spin, outcomes=state.outcomes)


def next_slot_density(state: CascadeState) -> Density2:
    """Proper state of the slot measured next."""
    if state.is_complete:
        raise SpinDomainError(
            code="EMPTY_CASCADE",
            message="Kaskáda nemá žádný neměřený slot",
        )
    return _density_of_tensor(state.remaining, 0)
