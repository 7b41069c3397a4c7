from __future__ import annotations

import json
import math

import numpy as np
import pytest

from src.application.bootstrap import build_app_container
from src.application.contracts import AppSettings, CapSettings, SimulationMode
from src.domain.errors import CapacityError, SpinDomainError
from src.domain.majorana import PolynomialVariant
from src.domain.spin import (
    EulerAngles,
    MagneticQuantumNumber,
    Spin,
    coherent_state,
    ray_equal,
)
from tests.conftest import random_state, write_state_file


class TestDecomposeAndReconstruct:
    def test_decompose_random_state(self, container, tmp_path, rng):
        state = random_state(Spin(twice_s=4), rng)
        result = container.decompose_state_use_case.execute(write_state_file(tmp_path / "s.json", state))
        assert result.passed
        assert len(result.constellation.points) == 4
        payload = result.to_payload()
        assert payload["round_trip_overlap"] >= 1 - 1e-8
        assert {"schema", "twice_s", "points"} <= set(payload)

    def test_bacry_variant(self, container, tmp_path, rng):
        state = random_state(Spin(twice_s=3), rng)
        result = container.decompose_state_use_case.execute(
            write_state_file(tmp_path / "s.json", state), variant=PolynomialVariant.BACRY
        )
        assert result.passed

    def test_reconstruct_identical_points(self, container, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(
            json.dumps({"schema": 1, "twice_s": 4, "points": [{"alpha": 1.0, "beta": 0.5}] * 4}),
            encoding="utf-8",
        )
        result = container.reconstruct_state_use_case.execute(path)
        expected = coherent_state(Spin(twice_s=4), MagneticQuantumNumber(4), EulerAngles(1.0, 0.5))
        assert ray_equal(result.state, expected)
        assert result.passed

    def test_failed_round_trip_logs_warning(self, container, tmp_path, rng, monkeypatch, caplog):
        monkeypatch.setattr(
            "src.application.use_cases.decompose_state_use_case.transition_probability",
            lambda a, b: 0.5,
        )
        state = random_state(Spin(twice_s=2), rng)
        result = container.decompose_state_use_case.execute(write_state_file(tmp_path / "s.json", state))
        assert not result.passed
        assert any("Round trip" in record.getMessage() for record in caplog.records)


class TestTables:
    def test_spin_half_columns(self, container):
        result = container.transition_table_use_case.execute(Spin(twice_s=1), [0.0, 1.0, math.pi])
        for beta, table in zip(result.betas, result.tables):
            np.testing.assert_allclose(table[0], [(1 + math.cos(beta)) / 2, (1 - math.cos(beta)) / 2], atol=1e-12)
        assert result.max_row_sum_error < 1e-12

    def test_single_row(self, container):
        result = container.transition_table_use_case.execute(
            Spin(twice_s=3), [0.9], MagneticQuantumNumber(1)
        )
        rows = result.to_rows()
        assert len(rows) == 1
        assert rows[0]["M"] == "1/2"
        assert sum(value for key, value in rows[0].items() if key.startswith("P[")) == pytest.approx(1.0)


class TestEquivalenceSweep:
    def test_defaults_come_from_settings(self, container):
        result = container.equivalence_sweep_use_case.execute([1, 2], samples=3)
        assert result.seed == 42
        assert result.tol == 1e-9
        assert result.all_passed
        assert result.to_payload()["cases"] == 3 * (4 + 9)

    def test_capacity_from_settings(self, container):
        with pytest.raises(CapacityError):
            container.equivalence_sweep_use_case.execute([9], samples=1)

    def test_subspace_basis_cap_from_settings(self, tmp_path):
        settings = AppSettings(caps=CapSettings(subspace_basis=2))
        container = build_app_container(tmp_path / "unused.yaml", settings=settings)
        with pytest.raises(CapacityError) as info:
            container.equivalence_sweep_use_case.execute([3], samples=1)
        assert info.value.context["cap"] == 2


class TestSimulateCascade:
    def test_coherent_input(self, container):
        report = container.simulate_cascade_use_case.execute(
            SimulationMode.QUANTUM,
            alpha=0.0,
            beta=math.pi / 3,
            spin=Spin(twice_s=2),
            m=MagneticQuantumNumber(0),
            trials=5_000,
            seed=42,
        )
        payload = report.to_payload()
        assert payload["source"] == {"kind": "coherent", "M": "0"}
        assert sum(payload["histogram"].values()) == 5_000
        assert "lambda_draws" not in payload

    def test_state_file_input_in_classical_mode(self, container, tmp_path, rng):
        state = random_state(Spin(twice_s=3), rng)
        report = container.simulate_cascade_use_case.execute(
            SimulationMode.CLASSICAL,
            alpha=0.5,
            beta=1.5,
            state_path=write_state_file(tmp_path / "s.json", state),
            trials=1_000,
        )
        payload = report.to_payload()
        assert payload["mode"] == "classical"
        assert payload["lambda_draws"] == 3_000
        assert payload["seed"] == 42

    def test_missing_input(self, container):
        with pytest.raises(SpinDomainError) as info:
            container.simulate_cascade_use_case.execute(SimulationMode.QUANTUM, alpha=0.0, beta=0.0)
        assert info.value.code == "MISSING_INPUT"


class TestBootstrap:
    def test_explicit_settings_skip_the_file(self, tmp_path):
        container = build_app_container(tmp_path / "never.yaml", settings=AppSettings())
        assert container.settings == AppSettings()
        assert not (tmp_path / "never.yaml").exists()
