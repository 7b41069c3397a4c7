from .settings import (
    AppSettings,
    CapSettings,
    OutputFormat,
    OutputSettings,
    SimulationMode,
    SimulationSettings,
    ToleranceSettings,
)

__all__ = [
    "AppSettings",
    "CapSettings",
    "OutputFormat",
    "OutputSettings",
    "SimulationMode",
    "SimulationSettings",
    "ToleranceSettings",
]
