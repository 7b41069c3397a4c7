from .errors import ConfigError, SettingsError
from .settings_loader import YamlSettingsLoader, default_settings_path

__all__ = [
    "ConfigError",
    "SettingsError",
    "YamlSettingsLoader",
    "default_settings_path",
]
