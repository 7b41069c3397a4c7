from .aerts import (
    ClassicalSpinHalf,
    HiddenVariable,
    aerts_decide,
    aerts_plus_probability,
    aerts_sample,
    plus_probability_expression,
    projection_on,
)
from .cascade import (
    ClassicalCascadeTree,
    classical_cascade,
    classical_cascade_distribution,
    classical_plus_probability,
    entity_candidates,
    simulate_classical_cascades,
)

__all__ = [
    "ClassicalSpinHalf",
    "HiddenVariable",
    "aerts_decide",
    "aerts_plus_probability",
    "aerts_sample",
    "plus_probability_expression",
    "projection_on",
    "ClassicalCascadeTree",
    "classical_cascade",
    "classical_cascade_distribution",
    "classical_plus_probability",
    "entity_candidates",
    "simulate_classical_cascades",
]
