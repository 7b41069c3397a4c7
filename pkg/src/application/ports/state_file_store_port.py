from __future__ import annotations

from pathlib import Path
from typing import Protocol

from src.domain.majorana import Constellation
from src.domain.spin import SpinState


class StateFileStorePort(Protocol):
    def read_state(self, path: str | Path) -> SpinState:
        ...

    def read_constellation(self, path: str | Path) -> Constellation:
        ...
