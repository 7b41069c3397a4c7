from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from src.domain.errors import SpinDomainError
from src.domain.spin import Spin

NORM_TOLERANCE = 1e-10
SYMMETRY_TOLERANCE = 1e-12


class Outcome(str, Enum):
    PLUS = "+"
    MINUS = "-"

    def __str__(self) -> str:
        return self.value

    @property
    def bit(self) -> int:
        return 0 if self is Outcome.PLUS else 1

    @classmethod
    def from_bit(cls, bit: int) -> Outcome:
        return cls.PLUS if bit == 0 else cls.MINUS


@lru_cache(maxsize=32)
def minus_counts(slot_count: int) -> np.ndarray:
    """Number of '-' labels per basis index; slot 0 is the most significant bit."""
    counts = np.array([bin(index).count("1") for index in range(2**slot_count)], dtype=int)
    counts.setflags(write=False)
    return counts


def index_labels(index: int, slot_count: int) -> str:
    return "".join(
        str(Outcome.from_bit((index >> (slot_count - 1 - slot)) & 1)) for slot in range(slot_count)
    )


def labels_index(labels: str) -> int:
    index = 0
    for label in labels:
        index = (index << 1) | Outcome(label).bit
    return index


@dataclass(frozen=True, slots=True, eq=False)
class SymmetricTensorState:
    """Unit vector over the 2^(2S) strings of +/- slot labels."""

    spin: Spin
    amplitudes: np.ndarray
    symmetric: bool = False

    def __post_init__(self) -> None:
        vector = np.array(self.amplitudes, dtype=complex).reshape(-1)
        expected = 2**self.spin.twice_s
        if vector.shape[0] != expected:
            raise SpinDomainError(
                code="DIMENSION_MISMATCH",
                message=f"Tenzorový stav musí mít {expected} amplitud",
                context={"expected": expected, "actual": int(vector.shape[0])},
            )
        norm = float(np.linalg.norm(vector))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise SpinDomainError(
                code="NOT_NORMALIZED",
                message="Amplitudy tenzorového stavu musí mít jednotkovou normu",
                context={"norm": norm},
            )
        vector.setflags(write=False)
        object.__setattr__(self, "amplitudes", vector)

    @classmethod
    def normalized(
        cls,
        spin: Spin,
        vector: np.ndarray,
        symmetric: bool = False,
    ) -> SymmetricTensorState:
        raw = np.asarray(vector, dtype=complex).reshape(-1)
        norm = float(np.linalg.norm(raw))
        if norm == 0.0:
            raise SpinDomainError(
                code="ZERO_VECTOR",
                message="Nulový vektor nereprezentuje žádný stav",
            )
        return cls(spin=spin, amplitudes=raw / norm, symmetric=symmetric)

    @property
    def slot_count(self) -> int:
        return self.spin.twice_s

    def as_tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.slot_count)

    def amplitude(self, labels: str) -> complex:
        if len(labels) != self.slot_count:
            raise SpinDomainError(
                code="DIMENSION_MISMATCH",
                message="Délka řetězce značek musí odpovídat počtu slotů",
                context={"expected": self.slot_count, "actual": len(labels)},
            )
        return complex(self.amplitudes[labels_index(labels)])

    def is_permutation_invariant(self, tol: float = SYMMETRY_TOLERANCE) -> bool:
        # adjacent transpositions generate every slot permutation
        tensor = self.as_tensor()
        for slot in range(self.slot_count - 1):
            swapped = np.swapaxes(tensor, slot, slot + 1)
            if float(np.max(np.abs(swapped - tensor))) > tol:
                return False
        return True
