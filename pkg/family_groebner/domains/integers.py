"""Module for the principal ideal rings Z and Z/n."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
import math

from ..exceptions import CoefficientError
from ._base import BaseDomain


@dataclass(frozen=True)
class IntegerRing(BaseDomain):
    """
    Class to represent Z.

    Ideals are principal; an ideal is represented by its nonnegative
    generator, with 0 for the zero ideal.
    """

    @property
    def name(self) -> str:
        """Return domain name."""
        return "Z"

    @property
    def characteristic(self) -> int:
        """Return characteristic of the domain."""
        return 0

    @property
    def modulus(self) -> int | None:
        """Return modulus, None for Z."""
        return None

    def convert(self, value: int | Fraction) -> int:
        """Convert an integer literal into the domain."""
        value = Fraction(value)
        if value.denominator != 1:
            raise CoefficientError(f"{value} is not an element of {self}")
        return self.normalize(value.numerator)

    def inv(self, value: int) -> int:
        """Return multiplicative inverse of value."""
        if value in (1, -1):
            return value
        return super().inv(value)

    def to_str(self, value: int) -> str:
        """Return canonical text for value."""
        return str(value)

    def ideal_generator(self, values: Iterable[int]) -> int:
        """Return normalized generator of the ideal generated by values."""
        return math.gcd(*values)

    def ideal_divides(self, left: int, right: int) -> bool:
        """Return whether (right) is contained in (left)."""
        left = self.ideal_generator((left,))
        right = self.ideal_generator((right,))
        if left == 0:
            return right == 0
        return right % left == 0


@dataclass(frozen=True)
class IntegerModRing(IntegerRing):
    """Class to represent Z/n for n >= 2; elements are ints with 0 <= value < n."""

    n: int

    def __post_init__(self) -> None:
        """Post initialization."""
        if self.n < 2:
            raise CoefficientError(f"Modulus {self.n} must be at least 2")

    @property
    def name(self) -> str:
        """Return domain name."""
        return f"Zmod({self.n})"

    @property
    def characteristic(self) -> int:
        """Return characteristic of the domain."""
        return self.n

    @property
    def modulus(self) -> int | None:
        """Return modulus."""
        return self.n

    def normalize(self, value: int) -> int:
        """Return canonical representative of value."""
        return value % self.n

    def inv(self, value: int) -> int:
        """Return multiplicative inverse of value."""
        if math.gcd(value, self.n) != 1:
            raise CoefficientError(f"{value} is not invertible in {self}")
        return pow(value, -1, self.n)

    def is_zero(self, value: int) -> bool:
        """Return whether value is zero."""
        return value % self.n == 0

    def is_one(self, value: int) -> bool:
        """Return whether value is one."""
        return value % self.n == 1

    def ideal_generator(self, values: Iterable[int]) -> int:
        """Return normalized generator gcd(values, n), with 0 for the zero ideal."""
        generator = math.gcd(self.n, *values)
        return 0 if generator == self.n else generator
