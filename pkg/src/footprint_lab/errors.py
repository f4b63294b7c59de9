"""Exception types shared across the package."""


class NotPrimePower(ValueError):
    """Requested field size is not a prime power (or is < 2)."""


class CapExceeded(ValueError):
    """Requested field size is above the supported table-driven cap."""


class DivisionByZero(ZeroDivisionError):
    """Multiplicative inverse (or negative power) of the zero element."""


class BadEncoding(ValueError):
    """Operand is not a valid integer encoding of a field element."""


class BadLevel(ValueError):
    """Level index is outside the ambient variable range."""


class CountOutOfRange(ValueError):
    """Requested initial-segment length exceeds the available set."""


class IndexOutOfRange(ValueError):
    """Requested rank exceeds the enumerated set."""


class OutOfRange(ValueError):
    """Parameter violates the documented domain of a formula."""


class AmbientMismatch(ValueError):
    """Monomials or polynomials disagree on the number of variables."""


class BudgetExceeded(RuntimeError):
    """Refused an exhaustive run whose cost estimate exceeds the budget."""

    def __init__(self, message: str, estimated: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.estimated = estimated
        self.budget = budget


class WitnessInvalid(RuntimeError):
    """Constructed witness family failed its own point-count validation."""


class DependentBasis(ValueError):
    """Supplied combination rows are linearly dependent."""
