from .atomic import atomic_write_text
from .errors import StateFileError
from .json_state_store import JsonStateFileStore

__all__ = ["JsonStateFileStore", "StateFileError", "atomic_write_text"]
