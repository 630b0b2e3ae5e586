"""Common sessions and helpers for tests."""

from __future__ import annotations

from collections.abc import Iterable
import random

import sympy

from family_groebner.ideals import IdealHandle
from family_groebner.polynomial import Exponent, Polynomial, PolyRing, monomial_str

PRIME = 32003

EX1_SESSION = """
# x and y collide over a = 0
ring Q[a][x,y];
order lex(x,y), lex(a);
ideal I = (a*x - y);
point P1: a=1;
point P0: a=0;
prime pa = (a);
prime pa1 = (a - 1);
"""

EX2_SESSION = """
ring Q[a,b][x,y];
ideal I = (a*x^2 + y, b*y^2 + y + 1);
point O: a=0, b=0;
prime pab = (a, b);
"""

EX3_SESSION = """
ring Q[a][x];
ideal I = (a*x - 1);
"""

EX3B_SESSION = """
ring Q[a,b][x];
ideal I = (a*x - b);
"""

FRACTEX_SESSION = """
ring Q[a,b][x];
base (a*b);
ideal I = (a*x + 1);
"""

FUZZEX_SESSION = """
ring Q[a,b][x,y];
base (a^2);
ideal I = (a*x - y);
point B0: a=0, b=0;
point B1: a=0, b=1;
point B2: a=0, b=2;
"""

GTZEX_SESSION = """
ring Q[a,b][x];
base (a*b);
ideal I = (a*(a - 1)*x, x^2);
"""

REDEX_SESSION = """
ring Q[a,b,c,d][x,y];
base (a*c, a*d, b*c, b*d);
ideal I = (a*x + b, c*y + d);
"""

FITEX_SESSION = """
ring Q[a][x,y];
ideal I = (a*x + y, x^3, x^2*y, x*y^2, y^3);
prime pa = (a);
"""

ISOEX_SESSION = """
ring Q[a,b][x,y];
ideal I = (x - a, y - b);
"""

MONO_Z_SESSION = """
ring Z[][x,y];
ideal I = (9*x, 2*y, x^2, y^2);
"""

MONO_Z18_SESSION = """
ring Zmod(18)[][x,y];
ideal I = (9*x, 2*y, x^2, y^2);
"""

REGRESSION_SESSIONS = {
    "ex1": EX1_SESSION,
    "ex2": EX2_SESSION,
    "ex3": EX3_SESSION,
    "ex3b": EX3B_SESSION,
    "fractex": FRACTEX_SESSION,
    "fuzzex": FUZZEX_SESSION,
    "gtzex": GTZEX_SESSION,
    "redex": REDEX_SESSION,
    "fitex": FITEX_SESSION,
    "isoex": ISOEX_SESSION,
}

FITEX_STAIRCASE = "\n".join(
    (
        "(1)",
        "(0)  (1)",
        "(0)  (a)  (1)",
        "(0)  (a)  (a)  (1)",
    )
)

MONO_Z_DIAGRAM = "\n".join(
    (
        "(1)",
        "(2)  (1)",
        "(0)  (9)  (1)",
    )
)


def strings(ideal: IdealHandle) -> list[str]:
    """Return generators of ideal modulo its base as text."""
    return [str(g) for g in ideal.generators_mod_base()]


def monomials(variables: Iterable[str], exponents: Iterable[Exponent]) -> set[str]:
    """Return monomials as a set of text."""
    variables = tuple(variables)
    return {monomial_str(variables, e) for e in exponents}


def random_polynomial(
    rng: random.Random, ring: PolyRing, max_degree: int = 3, max_terms: int = 3
) -> Polynomial:
    """Return a random nonzero sparse polynomial of bounded total degree."""
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            exponent = tuple(rng.randint(0, max_degree) for _ in ring.variables)
            if sum(exponent) <= max_degree:
                terms.append((exponent, rng.randint(1, PRIME - 1)))
        if polynomial := ring.from_terms(terms):
            return polynomial


def to_sympy(f: Polynomial, symbols: tuple[sympy.Symbol, ...]) -> sympy.Expr:
    """Return f as a sympy expression."""
    return sympy.Add(
        *(
            int(c) * sympy.Mul(*(s**e for s, e in zip(symbols, exponent)))
            for exponent, c in f.terms
        )
    )
