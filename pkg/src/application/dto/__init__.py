from .reports import (
    REPORT_SCHEMA,
    CoherentStateResult,
    DecomposeResult,
    EquivalenceSweepResult,
    ReconstructResult,
    Report,
    SimulationReport,
    TransitionTableResult,
    finite_or_none,
)

__all__ = [
    "REPORT_SCHEMA",
    "CoherentStateResult",
    "DecomposeResult",
    "EquivalenceSweepResult",
    "ReconstructResult",
    "Report",
    "SimulationReport",
    "TransitionTableResult",
    "finite_or_none",
]
