"""Test session file parsing."""

from fractions import Fraction
import random

import pytest

from family_groebner.const import ENV_DEFAULT_PRIME
from family_groebner.domains import IntegerModRing, PrimeField, RationalField
from family_groebner.exceptions import (
    PointViolatesBaseError,
    PreconditionError,
    SessionParseError,
    UnknownVariableError,
)
from family_groebner.families import FamilyIdeal
from family_groebner.monomial import MonomialIdealOverPIR
from family_groebner.polynomial import PolyRing
from family_groebner.session import Session, parse_generators, parse_polynomial, parse_session


def test_parse_family_session(ex1: Session):
    """Test a complete family session."""
    family = ex1.family
    assert family.domain == RationalField()
    assert family.parameters == ("a",)
    assert family.variables == ("x", "y")
    assert not ex1.is_monomial
    ideal = ex1.ideal("I")
    assert isinstance(ideal, FamilyIdeal)
    assert str(ideal) == "(a*x - y)"
    assert ex1.point("P1").values == {"a": Fraction(1)}
    assert str(ex1.prime("pa1")) == "(a - 1)"


def test_parse_monomial_session(mono_z18: Session):
    """Test a session over Z/18."""
    assert mono_z18.is_monomial
    assert mono_z18.family is None
    ideal = mono_z18.ideal("I")
    assert isinstance(ideal, MonomialIdealOverPIR)
    assert ideal.domain == IntegerModRing(18)


def test_order_statement():
    """Test order blocks and aliases."""
    session = parse_session(
        "ring Q[a,b][x,y];\norder degrevlex(y,x), lp(b,a);\nideal I = (x + y^2);"
    )
    family = session.family
    assert family.variables == ("y", "x")
    assert family.variable_order == "grevlex"
    assert family.parameters == ("b", "a")
    assert str(session.ideal("I").basis) == "(y^2 + x)"


def test_lookups(ex1: Session):
    """Test parsing of command line objects and unknown names."""
    assert str(ex1.parse_polynomial("a - 1", parameters_only=True)) == "a - 1"
    assert str(ex1.parse_polynomial("x*a")) == "a*x"
    assert ex1.parse_point("a=-1/2").values == {"a": Fraction(-1, 2)}
    assert str(ex1.parse_prime(" (a + 1) ")) == "(a + 1)"
    with pytest.raises(UnknownVariableError):
        ex1.parse_polynomial("x", parameters_only=True)
    with pytest.raises(PreconditionError):
        ex1.ideal("J")
    with pytest.raises(PreconditionError):
        ex1.point("P9")
    with pytest.raises(PreconditionError):
        ex1.prime("p9")


def test_parse_polynomial(qxy: PolyRing):
    """Test parsing polynomials in canonical form."""
    assert str(parse_polynomial(qxy, "x^2 - 1/2*y")) == "x^2 - 1/2*y"
    assert str(parse_polynomial(qxy, "-(x - y)^2")) == "-x^2 + 2*x*y - y^2"
    assert [str(g) for g in parse_generators(qxy, "(x, y + 1)")] == ["x", "y + 1"]
    assert parse_generators(qxy, "()") == ()


def test_print_parse_round_trip(
    rng: random.Random, qq: RationalField, gf: PrimeField
):
    """Test that printed polynomials parse back to the same text."""
    for domain in (qq, gf):
        ring = PolyRing.create(domain, ("a", "x", "y"), "grevlex")
        for _ in range(50):
            f = ring.zero()
            for _ in range(rng.randint(1, 4)):
                exponent = tuple(rng.randint(0, 3) for _ in ring.variables)
                coefficient = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
                f = f + ring.monomial(exponent, coefficient)
            text = str(f)
            assert str(parse_polynomial(ring, text)) == text
            assert parse_polynomial(ring, text) == f


def test_syntax_error_position():
    """Test that syntax errors carry line and column."""
    with pytest.raises(SessionParseError) as err:
        parse_session("ring Q[a][x];\nideal I = (a*x +);\n")
    assert err.value.line == 2
    assert err.value.column == 17
    assert str(err.value).startswith("line 2, column 17: ")


@pytest.mark.parametrize(
    "text", ["ring Q[a][x];\nideal I = (1/0*x);", "ring Q[a][x];\npoint P: a=1/0;"]
)
def test_zero_denominator_position(text: str):
    """Test that a literal with zero denominator is reported where it starts."""
    with pytest.raises(SessionParseError) as err:
        parse_session(text)
    assert (err.value.line, err.value.column) == (2, 12)


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("ring Q[a][x];\nideal I = (a*z);", 2),
        ("ring Q[a][x];\npoint P: b=1;", 2),
    ],
)
def test_unknown_variable(text: str, line: int):
    """Test undeclared variables and parameters."""
    with pytest.raises(UnknownVariableError) as err:
        parse_session(text)
    assert err.value.line == line


def test_point_violates_base():
    """Test that named points must satisfy the base relations."""
    with pytest.raises(PointViolatesBaseError) as err:
        parse_session("ring Q[a][x,y];\nbase (a^2);\npoint P: a=1;")
    assert err.value.line == 3
    session = parse_session("ring Q[a][x,y];\nbase (a^2);\npoint P: a=0;")
    assert session.point("P").values == {"a": 0}


@pytest.mark.parametrize(
    "text",
    [
        "ideal I = (x);",
        "ring Q[a][x];\nring Q[b][x];",
        "ring Q[a][x];\nideal I = (x);\nideal I = (a);",
        "ring Q[a][a];",
        "ring Z[a][x];",
        "ring Z[][x];\nideal I = (x + 1);",
        "ring Z[][x];\nideal I = (1/2*x);",
        "ring Z[][x];\nbase (x);",
        "ring Z[][x];\npoint P: x=1;",
        "ring Zmod[][x];",
        "ring Q(5)[a][x];",
        "ring Fp(8)[a][x];",
        "ring Q[a,b][x];\npoint P: a=1;",
        "ring Q[a][x,y];\norder lex(x);",
        "ring Q[a][x];\norder foo(x);",
        "ring Q[a][x];\nideal I = (x^2147483648);",
        "ring Q[a][x];\nideal I = (x",
        "ring Q[a][x];\nideal I = (1/0*x);",
        "ring Q[a][x];\npoint P: a=1/0;",
    ],
)
def test_invalid_sessions(text: str):
    """Test rejected sessions."""
    with pytest.raises(SessionParseError):
        parse_session(text)


def test_missing_ring_position():
    """Test that a missing ring is reported at the start of the file."""
    with pytest.raises(SessionParseError) as err:
        parse_session("# nothing here\n")
    assert (err.value.line, err.value.column) == (1, 1)


def test_default_prime(monkeypatch: pytest.MonkeyPatch):
    """Test the characteristic of Fp without an argument."""
    assert parse_session("ring Fp[a][x];").family.domain == PrimeField(32003)
    assert parse_session("ring Fp(7)[a][x];").family.domain == PrimeField(7)
    monkeypatch.setenv(ENV_DEFAULT_PRIME, "101")
    assert parse_session("ring Fp[a][x];").family.domain == PrimeField(101)
    monkeypatch.setenv(ENV_DEFAULT_PRIME, "100")
    with pytest.raises(SessionParseError):
        parse_session("ring Fp[a][x];")
