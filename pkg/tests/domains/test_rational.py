"""Test rational field."""

from fractions import Fraction

import pytest

from family_groebner.domains import RationalField
from family_groebner.exceptions import CoefficientError


def test_rational_arithmetic(qq: RationalField):
    """Test arithmetic on Q."""
    assert qq.name == "Q"
    assert str(qq) == "Q"
    assert qq.characteristic == 0
    assert qq.is_field
    half = qq.convert(Fraction(1, 2))
    assert qq.add(half, half) == 1
    assert qq.div(1, 3) == Fraction(1, 3)
    assert qq.power(half, -2) == 4
    assert qq.to_str(Fraction(-3, 6)) == "-1/2"
    assert qq.signed(Fraction(-3, 6)) == (True, "1/2")
    assert qq.to_str(qq.convert(4)) == "4"


def test_rational_division_by_zero(qq: RationalField):
    """Test that zero has no inverse."""
    with pytest.raises(CoefficientError):
        qq.inv(qq.zero)
