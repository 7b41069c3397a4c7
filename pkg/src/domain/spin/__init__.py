from .model import (
    BlochPoint,
    EulerAngles,
    MagneticQuantumNumber,
    Spin,
    SpinState,
    normalize_angle,
)
from .rotation import (
    rotation_matrix,
    spin_operators,
    wigner_matrix,
    wigner_matrix_from_generators,
    wigner_small_d,
)
from .states import (
    MINUS,
    PLUS,
    SPIN_HALF,
    basis_state,
    bloch_of_state,
    coherent_state,
    ray_equal,
    spin_half_state,
    transition_probability,
)
from .probability import (
    brute_force_transition,
    checked_transition_probability,
    coherent_transition_closed_form,
    transition_matrix,
)

__all__ = [
    "BlochPoint",
    "EulerAngles",
    "MagneticQuantumNumber",
    "Spin",
    "SpinState",
    "normalize_angle",
    "rotation_matrix",
    "spin_operators",
    "wigner_matrix",
    "wigner_matrix_from_generators",
    "wigner_small_d",
    "MINUS",
    "PLUS",
    "SPIN_HALF",
    "basis_state",
    "bloch_of_state",
    "coherent_state",
    "ray_equal",
    "spin_half_state",
    "transition_probability",
    "brute_force_transition",
    "checked_transition_probability",
    "coherent_transition_closed_form",
    "transition_matrix",
]
