from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True, slots=True)
class SpinDomainError(ValueError):
    code: str
    message: str
    context: dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


@dataclass(frozen=True, slots=True)
class CapacityError(SpinDomainError):
    """Raised when an input exceeds the size caps of dense tensor storage."""


@dataclass(frozen=True, slots=True)
class InfeasibleDecompositionError(SpinDomainError):
    """Raised when a mixed proper state cannot be split into the requested count."""
