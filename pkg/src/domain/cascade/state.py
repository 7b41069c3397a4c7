from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.domain.embedding import Outcome, SymmetricTensorState, spin_half_rotation
from src.domain.errors import SpinDomainError
from src.domain.spin import EulerAngles, MagneticQuantumNumber, Spin


def check_order(slot_count: int, order: Sequence[int] | None) -> tuple[int, ...]:
    if order is None:
        return tuple(range(slot_count))
    resolved = tuple(int(slot) for slot in order)
    if sorted(resolved) != list(range(slot_count)):
        raise SpinDomainError(
            code="SLOT_OUT_OF_RANGE",
            message="Pořadí měření musí být permutací indexů slotů",
            context={"order": list(resolved), "slot_count": slot_count},
        )
    return resolved


@dataclass(frozen=True, slots=True, eq=False)
class CascadeState:
    """Conditional state of the unmeasured slots after a prefix of outcomes.

    Axis i of ``remaining`` belongs to slot ``pending[i]``; the next measured
    slot is always axis 0.
    """

    spin: Spin
    remaining: np.ndarray
    pending: tuple[int, ...]
    outcomes: tuple[Outcome, ...]
    alpha: float
    beta: float

    @classmethod
    def start(
        cls,
        initial: SymmetricTensorState,
        alpha: float,
        beta: float,
        order: Sequence[int] | None = None,
    ) -> CascadeState:
        pending = check_order(initial.slot_count, order)
        angles = EulerAngles(alpha, beta)
        tensor = np.transpose(initial.as_tensor(), pending)
        tensor.setflags(write=False)
        return cls(
            spin=initial.spin,
            remaining=tensor,
            pending=pending,
            outcomes=(),
            alpha=angles.alpha,
            beta=angles.beta,
        )

    @property
    def is_complete(self) -> bool:
        return not self.pending

    @property
    def prefix(self) -> str:
        return "".join(str(o) for o in self.outcomes)

    def measurement_basis(self) -> np.ndarray:
        return spin_half_rotation(self.alpha, self.beta)

    def remaining_state(self) -> SymmetricTensorState:
        if self.is_complete:
            raise SpinDomainError(
                code="EMPTY_CASCADE",
                message="Všechny sloty již byly změřeny",
            )
        return SymmetricTensorState.normalized(Spin(twice_s=len(self.pending)), self.remaining)


@dataclass(frozen=True, slots=True)
class CascadeResult:
    spin: Spin
    outcomes: tuple[Outcome, ...]

    @property
    def labels(self) -> str:
        return "".join(str(o) for o in self.outcomes)

    @property
    def n_plus(self) -> int:
        return sum(1 for o in self.outcomes if o is Outcome.PLUS)

    @property
    def n_minus(self) -> int:
        return len(self.outcomes) - self.n_plus

    @property
    def m_prime(self) -> MagneticQuantumNumber:
        return MagneticQuantumNumber(twice_m=self.n_plus - self.n_minus)


def m_prime_of(labels: str) -> MagneticQuantumNumber:
    plus = labels.count(str(Outcome.PLUS))
    return MagneticQuantumNumber(twice_m=plus - (len(labels) - plus))
