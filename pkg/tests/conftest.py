from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from src.application.bootstrap import build_app_container
from src.domain.spin import Spin, SpinState
from src.infrastructure.config.default_settings import DEFAULT_SETTINGS_YAML


def random_state(spin: Spin, rng: np.random.Generator) -> SpinState:
    vector = rng.normal(size=spin.dimension) + 1j * rng.normal(size=spin.dimension)
    return SpinState.normalized(spin, vector)


def write_state_file(path: Path, state: SpinState) -> Path:
    path.write_text(
        json.dumps({"schema": 1, "twice_s": state.spin.twice_s, "amplitudes": state.as_pairs()}),
        encoding="utf-8",
    )
    return path


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def settings_file(tmp_path: Path) -> Path:
    path = tmp_path / "settings.yaml"
    path.write_text(DEFAULT_SETTINGS_YAML, encoding="utf-8")
    return path


@pytest.fixture
def container(settings_file: Path):
    return build_app_container(settings_file)
