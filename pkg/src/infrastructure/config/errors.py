from __future__ import annotations


class ConfigError(ValueError):
    """Base config error."""


class SettingsError(ConfigError):
    """Raised when the settings file is invalid."""
