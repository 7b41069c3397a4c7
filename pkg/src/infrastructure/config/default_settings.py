from __future__ import annotations

DEFAULT_SETTINGS_YAML = """tolerances:
  round_trip: 1.0e-8
  equivalence: 1.0e-9

caps:
  generic_symmetrize: 8
  coherent_symmetrize: 16
  exact_cascade: 12
  equivalence_sweep: 8
  subspace_basis: 12

simulation:
  trials: 100000
  seed: 42
  sigma_band: 3.0

output:
  format: "json"
"""
