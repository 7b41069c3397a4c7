from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Mapping

import yaml

from src.application.contracts import (
    AppSettings,
    CapSettings,
    OutputFormat,
    OutputSettings,
    SimulationSettings,
    ToleranceSettings,
)
from .default_settings import DEFAULT_SETTINGS_YAML
from .errors import SettingsError

try:
    from platformdirs import user_config_dir
except Exception:
    user_config_dir = None

logger = logging.getLogger(__name__)

APP_NAME = "SpinStarCascade"


def default_settings_path(app_name: str = APP_NAME) -> Path:
    if user_config_dir is not None:
        try:
            return Path(user_config_dir(appname=app_name, appauthor=False)) / "settings.yaml"
        except Exception:
            pass
    return Path(".app_data") / "settings.yaml"


class YamlSettingsLoader:
    @staticmethod
    def load_from_file(file_path: str | Path) -> AppSettings:
        path = Path(file_path)

        if not path.exists():
            YamlSettingsLoader._create_default_settings_file(path)

        try:
            raw = yaml.safe_load(path.read_text(encoding="utf-8"))
        except Exception as exc:
            raise SettingsError(f"Nepodařilo se načíst nastavení: {exc}") from exc

        if not isinstance(raw, Mapping):
            raise SettingsError("Kořen nastavení musí být mapování")

        return YamlSettingsLoader._parse(raw)

    @staticmethod
    def _create_default_settings_file(path: Path) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(DEFAULT_SETTINGS_YAML, encoding="utf-8")
        except Exception as exc:
            raise SettingsError(
                f"Soubor nastavení nebyl nalezen a vytvoření výchozího selhalo: {path} ({exc})"
            ) from exc
        logger.info("Created default settings file %s", path)

    @staticmethod
    def _parse(raw: Mapping[str, Any]) -> AppSettings:
        required = ["tolerances", "caps", "simulation", "output"]
        missing = [k for k in required if k not in raw]
        if missing:
            raise SettingsError(f"Chybějící sekce nastavení: {', '.join(missing)}")

        tolerances = YamlSettingsLoader._section(raw, "tolerances")
        caps = YamlSettingsLoader._section(raw, "caps")
        simulation = YamlSettingsLoader._section(raw, "simulation")
        output = YamlSettingsLoader._section(raw, "output")

        return AppSettings(
            tolerances=ToleranceSettings(
                **{
                    key: YamlSettingsLoader._positive_float(tolerances, key)
                    for key in ToleranceSettings.__dataclass_fields__
                }
            ),
            caps=CapSettings(
                **{
                    key: YamlSettingsLoader._positive_int(caps, key)
                    for key in CapSettings.__dataclass_fields__
                }
            ),
            simulation=SimulationSettings(
                trials=YamlSettingsLoader._positive_int(simulation, "trials"),
                seed=YamlSettingsLoader._seed(simulation),
                sigma_band=YamlSettingsLoader._positive_float(simulation, "sigma_band"),
            ),
            output=OutputSettings(format=YamlSettingsLoader._output_format(output)),
        )

    @staticmethod
    def _section(raw: Mapping[str, Any], name: str) -> Mapping[str, Any]:
        section = raw[name]
        if not isinstance(section, Mapping):
            raise SettingsError(f"Sekce '{name}' musí být mapování")
        return section

    @staticmethod
    def _positive_float(section: Mapping[str, Any], key: str) -> float:
        if key not in section:
            raise SettingsError(f"Chybí položka '{key}'")
        value = section[key]
        if isinstance(value, str):
            # YAML 1.1 reads exponents without a dot, like 1e-10, as strings
            try:
                value = float(value)
            except ValueError:
                pass
        if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
            raise SettingsError(f"Položka '{key}' musí být kladné číslo")
        return float(value)

    @staticmethod
    def _positive_int(section: Mapping[str, Any], key: str) -> int:
        if key not in section:
            raise SettingsError(f"Chybí položka '{key}'")
        value = section[key]
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise SettingsError(f"Položka '{key}' musí být kladné celé číslo")
        return value

    @staticmethod
    def _seed(section: Mapping[str, Any]) -> int:
        value = section.get("seed")
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < 2**64:
            raise SettingsError("Položka 'seed' musí být celé číslo v rozsahu 0 až 2^64 - 1")
        return value

    @staticmethod
    def _output_format(section: Mapping[str, Any]) -> OutputFormat:
        try:
            return OutputFormat(str(section.get("format", OutputFormat.JSON.value)))
        except ValueError as exc:
            raise SettingsError("Položka 'format' musí být 'json' nebo 'csv'") from exc
