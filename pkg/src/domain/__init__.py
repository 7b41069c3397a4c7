from .errors import CapacityError, InfeasibleDecompositionError, SpinDomainError

__all__ = ["CapacityError", "InfeasibleDecompositionError", "SpinDomainError"]
