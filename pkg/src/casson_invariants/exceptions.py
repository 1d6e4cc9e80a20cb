from typing import Any


class CassonError(Exception):
    """Base class for all exceptions raised by this package."""

    pass


class ManifoldValidationError(CassonError, ValueError):
    """Raised when a manifold specification violates a hypothesis of the
    result that is used to compute its invariants.

    Every instance names exactly one violated hypothesis, the theorem that
    needs it and the offending parameter values.
    """

    def __init__(
        self,
        hypothesis: str,
        theorem: str,
        values: dict[str, Any],
    ) -> None:
        self.hypothesis = hypothesis
        self.theorem = theorem
        self.values = values
        rendered = ", ".join(f"{k}={v}" for k, v in values.items())
        super().__init__(f"{hypothesis} [{theorem}] ({rendered})")


class ExpressionSyntaxError(CassonError, ValueError):
    """Raised when a manifold expression cannot be parsed."""

    def __init__(self, message: str, text: str, position: int) -> None:
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class EnumerationCapExceeded(CassonError):
    """Raised when a character enumeration would exceed the configured cap."""

    def __init__(self, size: int, cap: int) -> None:
        self.size = size
        self.cap = cap
        super().__init__(
            f"Enumeration of size {size} exceeds the cap of {cap}."
        )


class NoClosedFormError(CassonError):
    """Raised when an expression leaf has no closed-form invariant."""

    pass


class IntegralityError(CassonError, ArithmeticError):
    """Raised when a value that must be an integer, or a divisibility that
    must hold, fails for a computed invariant.
    """

    pass
