"""Fixtures for family_groebner tests."""

from __future__ import annotations

from collections.abc import Generator
import random

import pytest

from family_groebner.const import ENV_DEFAULT_PRIME
from family_groebner.domains import IntegerModRing, IntegerRing, PrimeField, RationalField
from family_groebner.polynomial import PolyRing
from family_groebner.session import Session, parse_session

from .common import (
    EX1_SESSION,
    EX2_SESSION,
    EX3_SESSION,
    EX3B_SESSION,
    FITEX_SESSION,
    FRACTEX_SESSION,
    FUZZEX_SESSION,
    GTZEX_SESSION,
    ISOEX_SESSION,
    MONO_Z18_SESSION,
    MONO_Z_SESSION,
    REDEX_SESSION,
)


@pytest.fixture(autouse=True)
def default_prime_env(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Run every test with the built-in default characteristic."""
    monkeypatch.delenv(ENV_DEFAULT_PRIME, raising=False)
    yield


@pytest.fixture(name="rng")
def rng_fixture() -> random.Random:
    """Return seeded random generator."""
    return random.Random(20240601)


@pytest.fixture(name="qq")
def qq_fixture() -> RationalField:
    """Return Q."""
    return RationalField()


@pytest.fixture(name="gf")
def gf_fixture() -> PrimeField:
    """Return F_32003."""
    return PrimeField(32003)


@pytest.fixture(name="zz")
def zz_fixture() -> IntegerRing:
    """Return Z."""
    return IntegerRing()


@pytest.fixture(name="z18")
def z18_fixture() -> IntegerModRing:
    """Return Z/18."""
    return IntegerModRing(18)


@pytest.fixture(name="qxy")
def qxy_fixture(qq: RationalField) -> PolyRing:
    """Return Q[x, y] with lex."""
    return PolyRing.create(qq, ("x", "y"))


@pytest.fixture(name="ex1")
def ex1_fixture() -> Session:
    """Return (ax - y) over Q[a]."""
    return parse_session(EX1_SESSION)


@pytest.fixture(name="ex2")
def ex2_fixture() -> Session:
    """Return (ax^2 + y, by^2 + y + 1) over Q[a, b]."""
    return parse_session(EX2_SESSION)


@pytest.fixture(name="ex3")
def ex3_fixture() -> Session:
    """Return (ax - 1) over Q[a]."""
    return parse_session(EX3_SESSION)


@pytest.fixture(name="ex3b")
def ex3b_fixture() -> Session:
    """Return (ax - b) over Q[a, b]."""
    return parse_session(EX3B_SESSION)


@pytest.fixture(name="fractex")
def fractex_fixture() -> Session:
    """Return (ax + 1) over Q[a, b]/(ab)."""
    return parse_session(FRACTEX_SESSION)


@pytest.fixture(name="fuzzex")
def fuzzex_fixture() -> Session:
    """Return (ax - y) over Q[a, b]/(a^2)."""
    return parse_session(FUZZEX_SESSION)


@pytest.fixture(name="gtzex")
def gtzex_fixture() -> Session:
    """Return (a(a - 1)x, x^2) over Q[a, b]/(ab)."""
    return parse_session(GTZEX_SESSION)


@pytest.fixture(name="redex")
def redex_fixture() -> Session:
    """Return (ax + b, cy + d) over two planes meeting at a point."""
    return parse_session(REDEX_SESSION)


@pytest.fixture(name="fitex")
def fitex_fixture() -> Session:
    """Return (ax + y, x^3, x^2y, xy^2, y^3) over Q[a]."""
    return parse_session(FITEX_SESSION)


@pytest.fixture(name="isoex")
def isoex_fixture() -> Session:
    """Return (x - a, y - b) over Q[a, b]."""
    return parse_session(ISOEX_SESSION)


@pytest.fixture(name="mono_z")
def mono_z_fixture() -> Session:
    """Return (9x, 2y, x^2, y^2) over Z."""
    return parse_session(MONO_Z_SESSION)


@pytest.fixture(name="mono_z18")
def mono_z18_fixture() -> Session:
    """Return (9x, 2y, x^2, y^2) over Z/18."""
    return parse_session(MONO_Z18_SESSION)
