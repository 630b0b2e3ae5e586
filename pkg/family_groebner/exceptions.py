"""Exceptions for family_groebner."""

from __future__ import annotations

from typing import Any


class FamilyGroebnerError(Exception):
    """Base class for family_groebner exceptions."""


class StructuralError(FamilyGroebnerError):
    """Raised when exponents or polynomials have incompatible shapes."""


class RingMismatchError(StructuralError):
    """Raised when two operands do not live in the same ring."""

    def __init__(self, left: Any, right: Any):
        """Initialize the error."""
        self.left = left
        self.right = right
        super().__init__(f"Ring mismatch: {left} vs {right}")


class ZeroPolynomialError(FamilyGroebnerError):
    """Raised when an operation needs a nonzero polynomial."""


class ExponentOverflowError(FamilyGroebnerError):
    """Raised when an exponent component leaves the machine-word range."""


class CoefficientError(FamilyGroebnerError):
    """Raised when a coefficient is not valid in its domain."""


class ExactDivisionError(FamilyGroebnerError):
    """Raised when a polynomial division that must be exact leaves a remainder."""

    def __init__(self, dividend: Any, divisor: Any):
        """Initialize the error."""
        self.dividend = dividend
        self.divisor = divisor
        super().__init__(f"{divisor} does not divide {dividend}")


class MissingAssignmentError(FamilyGroebnerError):
    """Raised when a substitution does not cover every parameter."""

    def __init__(self, missing: list[str]):
        """Initialize the error."""
        self.missing = missing
        super().__init__(f"No value assigned to {', '.join(missing)}")


class PreconditionError(FamilyGroebnerError):
    """Raised when an analysis is called outside its preconditions."""


class SessionParseError(FamilyGroebnerError):
    """Raised when a session file cannot be parsed or resolved."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        """Initialize the error."""
        self.message = message
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{location}{message}")


class UnknownVariableError(SessionParseError):
    """Raised when a polynomial uses a variable the ring does not declare."""


class PointViolatesBaseError(SessionParseError):
    """Raised when a point does not satisfy the base relations."""
