"""Shared pre-condition checks."""

from tmsverify.core.exceptions import ContractViolation, GenusError

MIN_GENUS = 2


def require_genus(g: int) -> int:
    """
    Reject genera outside the supported domain.

    At g = 1 the fixed loci have codimension zero and every formula collapses
    to a constant, so only g ≥ 2 is accepted.

    Raises:
        GenusError: If g < 2
    """
    if g < MIN_GENUS:
        raise GenusError(g, MIN_GENUS)
    return g


def require_non_negative(value: int, name: str) -> int:
    """Reject negative integer parameters."""
    if value < 0:
        raise ContractViolation(f"{name} must be non-negative (got {value})")
    return value
