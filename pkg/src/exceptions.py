"""
Exceptions raised by the active-set constructions.
"""

from typing import Optional


class ActiveSetError(Exception):
    """Base class for all construction failures."""


class InvalidParameterError(ActiveSetError, ValueError):
    """Raised when weight parameters, eps, t or an index are not admissible."""


class EnumerationLimitError(ActiveSetError):
    """Raised when a construction exhausts j_max or l_max before meeting its budget."""

    def __init__(
        self,
        limit: str,
        value: int,
        residual: Optional[float] = None,
        budget: Optional[float] = None,
    ):
        self.limit = limit
        self.value = value
        self.residual = residual
        self.budget = budget
        message = f"{limit}={value} exhausted"
        if residual is not None and budget is not None:
            message += f" (residual achieved {residual:.6g}, budget {budget:.6g})"
        super().__init__(message)


class TruncationError(ActiveSetError):
    """Raised when no truncation point below the ceiling meets the slack target."""


class UniverseTooSmallError(ActiveSetError):
    """Raised when an oracle universe is too small to certify or too large to list."""


class CertificationError(ActiveSetError):
    """Raised when a finished construction leaves more excluded mass than its budget."""

    def __init__(self, method: str, residual: float, budget: float):
        self.method = method
        self.residual = residual
        self.budget = budget
        super().__init__(
            f"{method} set is not certified "
            f"(residual achieved {residual:.6g}, budget {budget:.6g})"
        )
