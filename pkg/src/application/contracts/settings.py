from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"

    def __str__(self) -> str:
        return self.value


class SimulationMode(str, Enum):
    QUANTUM = "quantum"
    CLASSICAL = "classical"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class ToleranceSettings:
    round_trip: float = 1e-8
    equivalence: float = 1e-9


@dataclass(frozen=True, slots=True)
class CapSettings:
    generic_symmetrize: int = 8
    coherent_symmetrize: int = 16
    exact_cascade: int = 12
    equivalence_sweep: int = 8
    subspace_basis: int = 12


@dataclass(frozen=True, slots=True)
class SimulationSettings:
    trials: int = 100_000
    seed: int = 42
    sigma_band: float = 3.0


@dataclass(frozen=True, slots=True)
class OutputSettings:
    format: OutputFormat = OutputFormat.JSON


@dataclass(frozen=True, slots=True)
class AppSettings:
    tolerances: ToleranceSettings = field(default_factory=ToleranceSettings)
    caps: CapSettings = field(default_factory=CapSettings)
    simulation: SimulationSettings = field(default_factory=SimulationSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
