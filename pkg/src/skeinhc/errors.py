"""Exception types shared across the package.

Exit-code mapping used by the CLI: DomainError (and subclasses) -> 2,
ConsistencyError -> 3.
"""

__all__ = ["DomainError", "PoleError", "ParityError", "ConsistencyError"]


class DomainError(ValueError):
    """Invalid input for an operation: bad indices, mismatched signatures, ..."""


class PoleError(DomainError):
    """A denominator vanishes at the requested specialization point."""


class ParityError(DomainError):
    """An element has the wrong Clifford parity for the requested conversion."""


class ConsistencyError(AssertionError):
    """An internal cross-check failed; the computation cannot be trusted."""
