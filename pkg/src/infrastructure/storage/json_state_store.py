from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from src.application.ports import StateFileStorePort
from src.domain.errors import SpinDomainError
from src.domain.majorana import Constellation
from src.domain.spin import Spin, SpinState
from .errors import StateFileError

SUPPORTED_SCHEMA = 1


class JsonStateFileStore(StateFileStorePort):
    def read_state(self, path: str | Path) -> SpinState:
        raw = JsonStateFileStore._load(Path(path))
        spin = JsonStateFileStore._spin(raw)
        amplitudes = raw.get("amplitudes")
        if not isinstance(amplitudes, list) or not all(
            isinstance(pair, list) and len(pair) == 2 for pair in amplitudes
        ):
            raise StateFileError("Položka 'amplitudes' musí být seznam dvojic [re, im]")
        try:
            return SpinState.from_pairs(spin, amplitudes)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, SpinDomainError):
                raise
            raise StateFileError(f"Amplitudy nelze převést na komplexní čísla: {exc}") from exc

    def read_constellation(self, path: str | Path) -> Constellation:
        raw = JsonStateFileStore._load(Path(path))
        spin = JsonStateFileStore._spin(raw)
        points = raw.get("points")
        if not isinstance(points, list) or not all(
            isinstance(p, Mapping) and "alpha" in p and "beta" in p for p in points
        ):
            raise StateFileError("Položka 'points' musí být seznam záznamů {alpha, beta}")
        try:
            return Constellation.from_records(spin, points)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, SpinDomainError):
                raise
            raise StateFileError(f"Body konstelace nelze načíst: {exc}") from exc

    @staticmethod
    def _load(path: Path) -> Mapping[str, Any]:
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise StateFileError(f"Soubor {path} není platný JSON: {exc}") from exc
        except OSError as exc:
            raise StateFileError(f"Soubor {path} nelze přečíst: {exc}") from exc

        if not isinstance(raw, Mapping):
            raise StateFileError("Kořen souboru musí být objekt")
        if raw.get("schema") != SUPPORTED_SCHEMA:
            raise StateFileError(f"Nepodporovaná verze schématu: {raw.get('schema')!r}")
        return raw

    @staticmethod
    def _spin(raw: Mapping[str, Any]) -> Spin:
        twice_s = raw.get("twice_s")
        if isinstance(twice_s, bool) or not isinstance(twice_s, int):
            raise StateFileError("Položka 'twice_s' musí být celé číslo")
        return Spin(twice_s=twice_s)
