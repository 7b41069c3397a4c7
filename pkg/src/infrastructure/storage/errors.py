from __future__ import annotations


class StateFileError(ValueError):
    """Raised when a state or constellation file cannot be read or parsed."""
