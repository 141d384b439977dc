"""Exception hierarchy for stirlingb."""

from typing import Optional


class StirlingError(Exception):
    """Base class for every error raised by stirlingb."""

    pass


class DomainError(StirlingError, ValueError):
    """Raised when an index lies outside the domain of an operation."""

    pass


class SizeLimitError(StirlingError):
    """Raised when an enumeration request exceeds a configured size guard."""

    def __init__(self, what: str, n: int, limit: int):
        self.what = what
        self.n = n
        self.limit = limit
        super().__init__(
            f"{what} with n={n} exceeds the size guard n <= {limit} "
            "(raise guards in stirlingb.json or set STIRLINGB_MAX_OBJECTS)"
        )

    def __reduce__(self) -> tuple:
        return (type(self), (self.what, self.n, self.limit))


class ArithmeticOverflowError(StirlingError, OverflowError):
    """Raised when a coefficient leaves the signed 64-bit range."""

    def __init__(self, operation: str, value: int):
        self.operation = operation
        self.value = value
        super().__init__(f"coefficient overflow in {operation}: {value} does not fit in 64 bits")

    def __reduce__(self) -> tuple:
        return (type(self), (self.operation, self.value))


class ValidationError(StirlingError, ValueError):
    """Raised when an object violates its structural invariants."""

    def __init__(
        self,
        message: str,
        condition: Optional[str] = None,
        position: Optional[int] = None,
        details: Optional[dict] = None,
    ):
        self.condition = condition
        self.position = position
        self.details = details
        super().__init__(message)

    def __reduce__(self) -> tuple:
        return (type(self), (self.args[0], self.condition, self.position, self.details))


class ParseError(StirlingError, ValueError):
    """Raised when a text form cannot be parsed."""

    pass
