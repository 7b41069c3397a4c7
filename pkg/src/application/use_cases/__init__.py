from .coherent_state_use_case import CoherentStateUseCase
from .decompose_state_use_case import DecomposeStateUseCase
from .equivalence_sweep_use_case import EquivalenceSweepUseCase
from .reconstruct_state_use_case import ReconstructStateUseCase
from .simulate_cascade_use_case import SimulateCascadeUseCase
from .transition_table_use_case import TransitionTableUseCase

__all__ = [
    "CoherentStateUseCase",
    "DecomposeStateUseCase",
    "EquivalenceSweepUseCase",
    "ReconstructStateUseCase",
    "SimulateCascadeUseCase",
    "TransitionTableUseCase",
]
