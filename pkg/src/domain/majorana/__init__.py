from .polynomial import (
    PolynomialVariant,
    ProjectiveRoot,
    SpinPolynomial,
    build_polynomial,
    chordal_distance,
    companion_matrix,
    factorial_weights,
    roots,
)
from .constellation import (
    Constellation,
    point_key,
    bloch_of_root,
    coherent_constellation,
    constellation_to_state,
    factor_coefficients,
    match_constellations,
    root_of_point,
    rotate_constellation,
    state_to_constellation,
)

__all__ = [
    "PolynomialVariant",
    "ProjectiveRoot",
    "SpinPolynomial",
    "build_polynomial",
    "chordal_distance",
    "companion_matrix",
    "factorial_weights",
    "roots",
    "Constellation",
    "point_key",
    "bloch_of_root",
    "coherent_constellation",
    "constellation_to_state",
    "factor_coefficients",
    "match_constellations",
    "root_of_point",
    "rotate_constellation",
    "state_to_constellation",
]
