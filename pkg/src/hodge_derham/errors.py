"""Exception types shared across the package.

The CLI maps these onto exit codes: ``InputError`` -> 2, anything derived
from ``InvariantViolation`` -> 3.
"""


class InputError(ValueError):
    """Malformed user input (bad spec, bad degree, out-of-range index)."""


class InvariantViolation(RuntimeError):
    """An internal mathematical invariant failed (d^2 != 0, bad chain map, ...)."""


class ContainmentError(InvariantViolation):
    """A subspace containment required for a subquotient or induced map fails."""


class ChainMapError(InvariantViolation):
    """A proposed map of complexes does not commute with the differentials."""
