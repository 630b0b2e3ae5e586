"""Test monomial ideals over Z and Z/n."""

import pytest

from family_groebner.domains import IntegerModRing, IntegerRing
from family_groebner.exceptions import PreconditionError, StructuralError
from family_groebner.monomial import (
    MonomialIdealOverPIR,
    generic_part,
    mono_base_change,
    mono_coeff_ideal,
    mono_diagram,
    mono_fiber,
    mono_table,
    special_primes,
    unit_part,
)
from family_groebner.session import Session

from .common import MONO_Z_DIAGRAM, monomials


def test_create_normalizes(zz: IntegerRing, z18: IntegerModRing):
    """Test that redundant and zero terms are dropped."""
    ideal = MonomialIdealOverPIR.create(
        zz, ("x", "y"), [(-6, (1, 0)), (3, (1, 0)), (4, (2, 0)), (0, (0, 1))]
    )
    assert str(ideal) == "(3*x, 4*x^2)"
    assert str(MonomialIdealOverPIR.create(zz, ("x",), [(5, (0,))])) == "(5)"
    assert str(MonomialIdealOverPIR.create(zz, ("x",), [])) == "(0)"
    modular = MonomialIdealOverPIR.create(z18, ("x",), [(36, (1,)), (12, (2,))])
    assert str(modular) == "(6*x^2)"
    with pytest.raises(StructuralError):
        MonomialIdealOverPIR.create(zz, ("x", "y"), [(1, (1,))])


def test_coefficients(mono_z: Session):
    """Test principal coefficient ideals of (9x, 2y, x^2, y^2)."""
    ideal = mono_z.ideal("I")
    assert str(ideal) == "(9*x, 2*y, x^2, y^2)"
    assert mono_coeff_ideal(ideal, (1, 1)) == 1
    assert mono_coeff_ideal(ideal, (1, 0)) == 9
    assert mono_coeff_ideal(ideal, (0, 1)) == 2
    assert mono_coeff_ideal(ideal, (0, 0)) == 0
    table = mono_table(ideal, (2, 2))
    assert dict(table.entries) == {(0, 0): 0, (1, 0): 9, (0, 1): 2, (1, 1): 1}
    assert table.as_dict()["entries"][1] == {"exponent": "y", "generators": [2]}
    with pytest.raises(PreconditionError):
        mono_table(ideal, (2,))


@pytest.mark.parametrize(
    ("q", "expected"),
    [(5, "(x, y)"), (2, "(x, y^2)"), (3, "(x^2, y)")],
)
def test_fibers(mono_z: Session, q: int, expected: str):
    """Test fibers over F_q."""
    fiber = mono_fiber(mono_z.ideal("I"), q)
    assert str(fiber) == expected
    assert fiber.as_dict()["q"] == q


def test_generic_and_special(mono_z: Session, mono_z18: Session):
    """Test generic fiber, unit part and special primes."""
    ideal = mono_z.ideal("I")
    assert monomials(ideal.variables, generic_part(ideal)) == {"x", "y"}
    assert unit_part(ideal) == ((0, 2), (1, 1), (2, 0))
    assert special_primes(ideal) == (2, 3)
    assert special_primes(mono_z18.ideal("I")) == (2, 3)
    plain = MonomialIdealOverPIR.create(
        ideal.domain, ideal.variables, [(1, (1, 0)), (1, (0, 1))]
    )
    assert special_primes(plain) == ()


def test_base_change(mono_z: Session, mono_z18: Session):
    """Test that base change to Z/n commutes with coefficient ideals."""
    ideal = mono_z.ideal("I")
    changed = mono_base_change(ideal, 18)
    assert changed == mono_z18.ideal("I")
    assert changed.modulus == 18
    for exponent in ((0, 0), (1, 0), (0, 1), (1, 1), (2, 0)):
        assert mono_coeff_ideal(changed, exponent) == changed.domain.ideal_generator(
            (mono_coeff_ideal(ideal, exponent),)
        )
    mod_three = mono_base_change(ideal, 3)
    assert str(mod_three) == "(y, x^2)"
    assert str(mono_fiber(mod_three, 3)) == str(mono_fiber(ideal, 3))
    assert str(mono_base_change(changed, 6)) == "(3*x, 2*y, x^2, y^2)"


def test_preconditions(mono_z: Session, mono_z18: Session):
    """Test invalid primes and moduli."""
    with pytest.raises(PreconditionError):
        mono_fiber(mono_z.ideal("I"), 4)
    with pytest.raises(PreconditionError):
        mono_fiber(mono_z18.ideal("I"), 5)
    with pytest.raises(PreconditionError):
        mono_base_change(mono_z18.ideal("I"), 4)
    with pytest.raises(PreconditionError):
        mono_base_change(mono_z.ideal("I"), 1)


def test_diagram(mono_z: Session, zz: IntegerRing):
    """Test the coefficient diagram."""
    ideal = mono_z.ideal("I")
    assert mono_diagram(ideal, (3, 3)) == MONO_Z_DIAGRAM
    line = MonomialIdealOverPIR.create(zz, ("x",), [(4, (1,)), (1, (3,))])
    assert mono_diagram(line, (5,)) == "(0)  (4)  (4)  (1)"
    cube = MonomialIdealOverPIR.create(zz, ("x", "y", "z"), [(1, (1, 0, 0))])
    with pytest.raises(PreconditionError):
        mono_diagram(cube, (2, 2, 2))
