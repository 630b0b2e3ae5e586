"""Module for prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from ..exceptions import CoefficientError
from ._base import BaseDomain
from .const import LOGGER


@dataclass(frozen=True)
class PrimeField(BaseDomain):
    """Class to represent F_p; elements are ints with 0 <= value < p."""

    p: int

    def __post_init__(self) -> None:
        """Post initialization."""
        if not isprime(self.p):
            raise CoefficientError(f"Characteristic {self.p} is not prime")
        LOGGER.debug("Created prime field of characteristic %s", self.p)

    @property
    def name(self) -> str:
        """Return domain name."""
        return f"Fp({self.p})"

    @property
    def characteristic(self) -> int:
        """Return characteristic of the domain."""
        return self.p

    @property
    def is_field(self) -> bool:
        """Return whether every nonzero element is invertible."""
        return True

    def convert(self, value: int | Fraction) -> int:
        """Convert an integer or rational literal into the domain."""
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise CoefficientError(f"{value} is not an element of {self}")
        return value.numerator * pow(value.denominator, -1, self.p) % self.p

    def normalize(self, value: int) -> int:
        """Return canonical representative of value."""
        return value % self.p

    def inv(self, value: int) -> int:
        """Return multiplicative inverse of value."""
        if value % self.p == 0:
            raise CoefficientError(f"Division by zero in {self}")
        return pow(value, -1, self.p)

    def power(self, value: int, exponent: int) -> int:
        """Return value ** exponent."""
        if exponent < 0:
            return pow(self.inv(value), -exponent, self.p)
        return pow(value, exponent, self.p)

    def is_zero(self, value: int) -> bool:
        """Return whether value is zero."""
        return value % self.p == 0

    def is_one(self, value: int) -> bool:
        """Return whether value is one."""
        return value % self.p == 1

    def to_str(self, value: int) -> str:
        """Return the symmetric representative of value as text."""
        value %= self.p
        if value > self.p // 2:
            return str(value - self.p)
        return str(value)
