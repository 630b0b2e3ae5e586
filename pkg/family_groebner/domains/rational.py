"""Module for the field of rational numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import CoefficientError
from ._base import BaseDomain


@dataclass(frozen=True)
class RationalField(BaseDomain):
    """Class to represent Q with arbitrary-precision Fractions."""

    @property
    def name(self) -> str:
        """Return domain name."""
        return "Q"

    @property
    def characteristic(self) -> int:
        """Return characteristic of the domain."""
        return 0

    @property
    def is_field(self) -> bool:
        """Return whether every nonzero element is invertible."""
        return True

    def convert(self, value: int | Fraction) -> Fraction:
        """Convert an integer or rational literal into the domain."""
        return Fraction(value)

    def inv(self, value: Fraction) -> Fraction:
        """Return multiplicative inverse of value."""
        if value == 0:
            raise CoefficientError("Division by zero in Q")
        return 1 / Fraction(value)

    def to_str(self, value: Fraction) -> str:
        """Return canonical text for value, `p/q` with q > 0 and gcd 1."""
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
