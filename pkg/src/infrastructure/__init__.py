from .config import ConfigError, SettingsError, YamlSettingsLoader, default_settings_path
from .reporting import FileReportWriter
from .storage import JsonStateFileStore, StateFileError

__all__ = [
    "ConfigError",
    "FileReportWriter",
    "JsonStateFileStore",
    "SettingsError",
    "StateFileError",
    "YamlSettingsLoader",
    "default_settings_path",
]
