"""Exception hierarchy shared by every module."""
from typing import List, Optional


class DopplerKeygenError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DopplerKeygenError, ValueError):
    """An argument lies outside the domain of an operation."""


class NumericError(DopplerKeygenError, ArithmeticError):
    """A numerical procedure failed to converge."""


class UsageError(DopplerKeygenError, ValueError):
    """An operation was called with inconsistent arguments."""


class ConfigError(DopplerKeygenError):
    """
    Configuration could not be parsed or validated.

    Attributes:
        errors: One message per violated key or invariant
    """

    def __init__(self, message: str, errors: Optional[List[str]] = None):
        self.errors = list(errors or [])
        if self.errors:
            message = f"{message}: " + "; ".join(self.errors)
        super().__init__(message)


class OutputError(DopplerKeygenError):
    """An output artifact could not be written."""
