"""Exception types shared across the package."""

from __future__ import annotations


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class RegimeError(ValueError):
    """The parameter point does not satisfy a hypothesis the operation needs."""


class SizeGuardError(ValueError):
    """The ambient algebra is too large for dense exact computation."""


class VerificationError(AssertionError):
    """A checked identity failed; ``details`` carries the counterexample."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


class OracleFault(RuntimeError):
    """Two independent computations of the same quantity disagree."""
