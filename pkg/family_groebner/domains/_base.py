"""Base coefficient domain module."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, final

from ..exceptions import CoefficientError


@dataclass(frozen=True)
class BaseDomain:
    """
    Base for coefficient domains.

    Elements are plain Python values (int or Fraction); the domain object owns
    the arithmetic so that residues stay normalized. Sub-classes must implement
    `name`, `characteristic`, `convert` and `to_str`, and should override
    `normalize` when values need reducing.
    """

    @property
    def name(self) -> str:
        """Return domain name as written in a session file."""
        raise NotImplementedError()

    @property
    def characteristic(self) -> int:
        """Return characteristic of the domain."""
        raise NotImplementedError()

    @property
    def is_field(self) -> bool:
        """Return whether every nonzero element is invertible."""
        return False

    @property
    def zero(self) -> Any:
        """Return additive identity."""
        return self.convert(0)

    @property
    def one(self) -> Any:
        """Return multiplicative identity."""
        return self.convert(1)

    def convert(self, value: int | Fraction) -> Any:
        """Convert an integer or rational literal into the domain."""
        raise NotImplementedError()

    def normalize(self, value: Any) -> Any:
        """Return canonical representative of value."""
        return value

    @final
    def add(self, left: Any, right: Any) -> Any:
        """Return left + right."""
        return self.normalize(left + right)

    @final
    def sub(self, left: Any, right: Any) -> Any:
        """Return left - right."""
        return self.normalize(left - right)

    @final
    def mul(self, left: Any, right: Any) -> Any:
        """Return left * right."""
        return self.normalize(left * right)

    @final
    def neg(self, value: Any) -> Any:
        """Return -value."""
        return self.normalize(-value)

    def inv(self, value: Any) -> Any:
        """Return multiplicative inverse of value."""
        raise CoefficientError(f"{self.to_str(value)} is not invertible in {self}")

    @final
    def div(self, left: Any, right: Any) -> Any:
        """Return left / right."""
        return self.mul(left, self.inv(right))

    def power(self, value: Any, exponent: int) -> Any:
        """Return value ** exponent."""
        if exponent < 0:
            return self.power(self.inv(value), -exponent)
        return self.normalize(value**exponent)

    def is_zero(self, value: Any) -> bool:
        """Return whether value is zero."""
        return value == 0

    def is_one(self, value: Any) -> bool:
        """Return whether value is one."""
        return value == 1

    def to_str(self, value: Any) -> str:
        """Return canonical text for value."""
        raise NotImplementedError()

    def signed(self, value: Any) -> tuple[bool, str]:
        """Return (is_negative, magnitude text) used when printing polynomials."""
        text = self.to_str(value)
        if text.startswith("-"):
            return True, text[1:]
        return False, text

    @final
    def __str__(self) -> str:
        """Return string representation of self."""
        return self.name
