from .tensor import (
    Outcome,
    SymmetricTensorState,
    index_labels,
    labels_index,
    minus_counts,
)
from .symmetrize import (
    COHERENT_SYMMETRIZE_CAP,
    GENERIC_SYMMETRIZE_CAP,
    coherent_embedding,
    dicke_embedding,
    distinguishable_orderings,
    embed_state,
    normalization_constant,
    ordering_sum,
    ordering_sum_by_enumeration,
    product_state,
    symmetrize,
)
from .subspace import (
    OutcomeSubspace,
    measurement_distribution,
    outcome_basis_matrix,
    outcome_subspace,
    overlap_k_range,
    overlap_sum_probability,
    permutation_overlap_coefficient,
    projection_probability,
    spin_half_rotation,
    unnormalized_overlap,
)
from .equivalence import (
    EquivalenceReport,
    equivalence_sweep,
    verify_equivalence,
)

__all__ = [
    "Outcome",
    "SymmetricTensorState",
    "index_labels",
    "labels_index",
    "minus_counts",
    "COHERENT_SYMMETRIZE_CAP",
    "GENERIC_SYMMETRIZE_CAP",
    "coherent_embedding",
    "dicke_embedding",
    "distinguishable_orderings",
    "embed_state",
    "normalization_constant",
    "ordering_sum",
    "ordering_sum_by_enumeration",
    "product_state",
    "symmetrize",
    "OutcomeSubspace",
    "measurement_distribution",
    "outcome_basis_matrix",
    "outcome_subspace",
    "overlap_k_range",
    "overlap_sum_probability",
    "permutation_overlap_coefficient",
    "projection_probability",
    "spin_half_rotation",
    "unnormalized_overlap",
    "EquivalenceReport",
    "equivalence_sweep",
    "verify_equivalence",
]
