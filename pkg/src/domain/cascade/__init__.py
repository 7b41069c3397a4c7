from .density import Density2, decompose_density
from .state import CascadeResult, CascadeState, check_order, m_prime_of
from .collapse import (
    BiorthogonalSplit,
    biorthogonal_split,
    collapse,
    measure_entity,
    next_slot_density,
    outcome_probabilities,
    proper_states,
    reduced_density,
    run_cascade,
)
from .exact import (
    EXACT_CASCADE_CAP,
    aggregate_by_m_prime,
    born_distribution,
    check_cascade_capacity,
    distribution_distance,
    exact_cascade_distribution,
    exact_outcome_law,
)
from .simulation import (
    DEFAULT_SIGMA_BAND,
    CascadeStatistics,
    CascadeTree,
    check_trials,
    histogram_of,
    simulate_cascades,
)

__all__ = [
    "Density2",
    "decompose_density",
    "CascadeResult",
    "CascadeState",
    "check_order",
    "m_prime_of",
    "BiorthogonalSplit",
    "biorthogonal_split",
    "collapse",
    "measure_entity",
    "next_slot_density",
    "outcome_probabilities",
    "proper_states",
    "reduced_density",
    "run_cascade",
    "EXACT_CASCADE_CAP",
    "aggregate_by_m_prime",
    "born_distribution",
    "check_cascade_capacity",
    "distribution_distance",
    "exact_cascade_distribution",
    "exact_outcome_law",
    "DEFAULT_SIGMA_BAND",
    "CascadeStatistics",
    "CascadeTree",
    "check_trials",
    "histogram_of",
    "simulate_cascades",
]
