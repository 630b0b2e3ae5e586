"""Test prime fields."""

from fractions import Fraction

import pytest

from family_groebner.domains import PrimeField
from family_groebner.exceptions import CoefficientError


def test_prime_field():
    """Test arithmetic in F_7."""
    field = PrimeField(7)
    assert field.name == "Fp(7)"
    assert field.characteristic == 7
    assert field.is_field
    assert field.convert(Fraction(1, 2)) == 4
    assert field.convert(-1) == 6
    assert field.mul(3, 5) == 1
    assert field.inv(3) == 5
    assert field.power(3, -1) == 5
    assert field.is_zero(14)
    assert field.is_one(8)
    assert field.to_str(6) == "-1"
    assert field.to_str(3) == "3"


def test_prime_field_errors():
    """Test invalid characteristics and divisions."""
    with pytest.raises(CoefficientError):
        PrimeField(4)
    field = PrimeField(7)
    with pytest.raises(CoefficientError):
        field.convert(Fraction(1, 7))
    with pytest.raises(CoefficientError):
        field.inv(0)
