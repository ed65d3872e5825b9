"""Precondition checks shared by the numerical kernels."""
import math
from typing import Sized

from ..core.exceptions import DomainError


def require_positive(value: float, name: str) -> float:
    """Return value if it is a finite number > 0, else raise DomainError."""
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be positive, got {value!r}")
    return value


def require_nonnegative(value: float, name: str) -> float:
    """Return value if it is a finite number >= 0, else raise DomainError."""
    if not (math.isfinite(value) and value >= 0):
        raise DomainError(f"{name} must be nonnegative, got {value!r}")
    return value


def require_positive_int(value: int, name: str) -> int:
    """Return value if it is an integer >= 1, else raise DomainError."""
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def require_nonnegative_int(value: int, name: str) -> int:
    """Return value if it is an integer >= 0, else raise DomainError."""
    if isinstance(value, bool) or int(value) != value or value < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {value!r}")
    return int(value)


def require_nonempty(values: Sized, name: str) -> Sized:
    """Return values if it has at least one element, else raise DomainError."""
    if len(values) == 0:
        raise DomainError(f"{name} must not be empty")
    return values
