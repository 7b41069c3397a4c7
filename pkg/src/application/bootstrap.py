from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from src.application.contracts import AppSettings
from src.application.ports import ReportWriterPort, StateFileStorePort
from src.application.use_cases import (
    CoherentStateUseCase,
    DecomposeStateUseCase,
    EquivalenceSweepUseCase,
    ReconstructStateUseCase,
    SimulateCascadeUseCase,
    TransitionTableUseCase,
)
from src.infrastructure import (
    FileReportWriter,
    JsonStateFileStore,
    YamlSettingsLoader,
    default_settings_path,
)


@dataclass(frozen=True, slots=True)
class AppContainer:
    settings: AppSettings
    decompose_state_use_case: DecomposeStateUseCase
    reconstruct_state_use_case: ReconstructStateUseCase
    coherent_state_use_case: CoherentStateUseCase
    transition_table_use_case: TransitionTableUseCase
    equivalence_sweep_use_case: EquivalenceSweepUseCase
    simulate_cascade_use_case: SimulateCascadeUseCase
    report_writer: ReportWriterPort


def build_app_container(
    settings_path: str | Path | None = None,
    *,
    settings: AppSettings | None = None,
    state_store: StateFileStorePort | None = None,
    report_writer: ReportWriterPort | None = None,
) -> AppContainer:
    resolved_settings = settings or YamlSettingsLoader.load_from_file(
        settings_path if settings_path is not None else default_settings_path()
    )
    store = state_store or JsonStateFileStore()
    writer = report_writer or FileReportWriter()

    return AppContainer(
        settings=resolved_settings,
        decompose_state_use_case=DecomposeStateUseCase(store, resolved_settings),
        reconstruct_state_use_case=ReconstructStateUseCase(store, resolved_settings),
        coherent_state_use_case=CoherentStateUseCase(),
        transition_table_use_case=TransitionTableUseCase(),
        equivalence_sweep_use_case=EquivalenceSweepUseCase(resolved_settings),
        simulate_cascade_use_case=SimulateCascadeUseCase(store, resolved_settings),
        report_writer=writer,
    )
