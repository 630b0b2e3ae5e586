"""Monomial ideals over Z and Z/n."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
import itertools
import logging
from typing import Any

from sympy import isprime, primefactors

from .const import ATTR_ENTRIES, ATTR_EXPONENT, ATTR_GENERATORS, ATTR_MONOMIALS
from .domains import IntegerModRing, IntegerRing
from .exceptions import PreconditionError, StructuralError
from .helpers import format_grid, staircase_rows
from .polynomial import (
    Exponent,
    exponent_divides,
    exponent_lcm,
    minimal_exponents,
    monomial_ideal_str,
    monomial_str,
)

_LOGGER = logging.getLogger(__name__)


def _term_key(term: tuple[int, Exponent]) -> tuple[Any, ...]:
    """Return display key: by degree, then larger first exponents first."""
    coefficient, exponent = term
    return (sum(exponent), tuple(-e for e in exponent), coefficient)


@dataclass(frozen=True)
class MonomialIdealOverPIR:
    """
    Ideal of Z[x] or (Z/n)[x] generated by terms c * x^E.

    Coefficients are stored as ideal generators of the base (nonnegative, and
    dividing n over Z/n); a term is dropped when another term has a smaller
    exponent and a coefficient dividing its coefficient.
    """

    domain: IntegerRing
    variables: tuple[str, ...]
    terms: tuple[tuple[int, Exponent], ...]

    @classmethod
    def create(
        cls,
        domain: IntegerRing,
        variables: Iterable[str],
        terms: Iterable[tuple[int, Exponent]],
    ) -> MonomialIdealOverPIR:
        """Create ideal from (coefficient, exponent) terms, normalizing them."""
        variables = tuple(variables)
        normalized = set()
        for coefficient, exponent in terms:
            exponent = tuple(exponent)
            if len(exponent) != len(variables):
                raise StructuralError(f"Exponent {exponent} does not fit {variables}")
            generator = domain.ideal_generator((domain.normalize(coefficient),))
            if generator:
                normalized.add((generator, exponent))
        kept = [
            (c, e)
            for c, e in normalized
            if not any(
                (d, f) != (c, e)
                and exponent_divides(f, e)
                and domain.ideal_divides(d, c)
                and (f != e or d < c)
                for d, f in normalized
            )
        ]
        return cls(domain, variables, tuple(sorted(kept, key=_term_key)))

    def __str__(self) -> str:
        """Return ideal notation, e.g. `(9*x, 2*y, x^2, y^2)`."""
        if not self.terms:
            return "(0)"
        parts = []
        for coefficient, exponent in self.terms:
            monomial = monomial_str(self.variables, exponent)
            if coefficient == 1:
                parts.append(monomial)
            elif monomial == "1":
                parts.append(str(coefficient))
            else:
                parts.append(f"{coefficient}*{monomial}")
        return f"({', '.join(parts)})"

    @property
    def modulus(self) -> int | None:
        """Return n over Z/n, None over Z."""
        return self.domain.modulus

    def join_closure(self) -> tuple[Exponent, ...]:
        """Return generator exponents closed under lcm."""
        closure = {e for _, e in self.terms}
        frontier = set(closure)
        while frontier:
            new = {
                exponent_lcm(left, right)
                for left in frontier
                for right in closure
            } - closure
            closure |= new
            frontier = new
        return tuple(sorted(closure))


@dataclass(frozen=True)
class MonomialTable:
    """Principal coefficient ideals of a monomial ideal over a window."""

    ideal: MonomialIdealOverPIR
    bounds: tuple[int, ...]
    entries: tuple[tuple[Exponent, int], ...]

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            ATTR_ENTRIES: [
                {
                    ATTR_EXPONENT: monomial_str(self.ideal.variables, e),
                    ATTR_GENERATORS: [generator],
                }
                for e, generator in self.entries
            ]
        }


@dataclass(frozen=True)
class MonomialFiber:
    """Minimal monomial generators of a fiber over F_q."""

    ideal: MonomialIdealOverPIR
    q: int
    monomials: tuple[Exponent, ...]

    def __str__(self) -> str:
        """Return ideal notation, e.g. `(x, y^2)`."""
        return monomial_ideal_str(self.ideal.variables, self.monomials)

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            "q": self.q,
            ATTR_MONOMIALS: [monomial_str(self.ideal.variables, e) for e in self.monomials],
        }


def mono_coeff_ideal(ideal: MonomialIdealOverPIR, exponent: Exponent) -> int:
    """Return generator of J_E = gcd of c_F over F <= E; 0 for the zero ideal."""
    return ideal.domain.ideal_generator(
        c for c, e in ideal.terms if exponent_divides(e, exponent)
    )


def mono_table(ideal: MonomialIdealOverPIR, bounds: Iterable[int]) -> MonomialTable:
    """Return coefficient ideals over the window product(range(b))."""
    bounds = tuple(bounds)
    if len(bounds) != len(ideal.variables):
        raise PreconditionError(f"Window {bounds} does not match {ideal.variables}")
    entries = tuple(
        (e, mono_coeff_ideal(ideal, e))
        for e in itertools.product(*(range(b) for b in bounds))
    )
    return MonomialTable(ideal, bounds, entries)


def _validate_prime(ideal: MonomialIdealOverPIR, q: int) -> None:
    """Raise unless F_q is a residue field of the base."""
    if not isprime(q):
        raise PreconditionError(f"{q} is not prime")
    if ideal.modulus is not None and ideal.modulus % q:
        raise PreconditionError(f"{q} does not divide {ideal.modulus}")


def mono_fiber(ideal: MonomialIdealOverPIR, q: int) -> MonomialFiber:
    """Return the fiber over F_q: monomials x^E with q not dividing J_E, minimalized."""
    _validate_prime(ideal, q)
    monomials = minimal_exponents(
        e for e in ideal.join_closure() if mono_coeff_ideal(ideal, e) % q
    )
    return MonomialFiber(ideal, q, monomials)


def mono_base_change(ideal: MonomialIdealOverPIR, n: int) -> MonomialIdealOverPIR:
    """Return the extension of ideal to (Z/n)[x]."""
    if n < 2:
        raise PreconditionError(f"Modulus {n} must be at least 2")
    if ideal.modulus is not None and ideal.modulus % n:
        raise PreconditionError(f"Z/{ideal.modulus} does not map onto Z/{n}")
    changed = MonomialIdealOverPIR.create(
        IntegerModRing(n), ideal.variables, ideal.terms
    )
    _LOGGER.debug("Base change of %s to Z/%s: %s", ideal, n, changed)
    return changed


def mono_diagram(ideal: MonomialIdealOverPIR, bounds: Iterable[int]) -> str:
    """Return the coefficient diagram, y increasing upward and x rightward."""
    bounds = tuple(bounds)
    if len(ideal.variables) > 2:
        raise PreconditionError(
            f"Diagrams need at most two variables, got {len(ideal.variables)}"
        )
    if len(bounds) != len(ideal.variables):
        raise PreconditionError(f"Window {bounds} does not match {ideal.variables}")
    if not bounds:
        return f"({mono_coeff_ideal(ideal, ())})"
    return format_grid(
        staircase_rows(
            bounds,
            lambda e: f"({mono_coeff_ideal(ideal, e)})",
            lambda e: mono_coeff_ideal(ideal, e) == 1,
        )
    )


def generic_part(ideal: MonomialIdealOverPIR) -> tuple[Exponent, ...]:
    """Return monomials whose coefficient ideal is nonzero; the generic fiber."""
    return minimal_exponents(e for _, e in ideal.terms)


def unit_part(ideal: MonomialIdealOverPIR) -> tuple[Exponent, ...]:
    """Return monomials whose coefficient ideal is (1); they lie in every fiber."""
    return minimal_exponents(
        e for e in ideal.join_closure() if mono_coeff_ideal(ideal, e) == 1
    )


def special_primes(ideal: MonomialIdealOverPIR) -> tuple[int, ...]:
    """Return the primes whose fiber differs from the generic fiber."""
    if ideal.modulus is not None:
        candidates = set(primefactors(ideal.modulus))
    else:
        candidates = {
            q
            for e in ideal.join_closure()
            if (generator := mono_coeff_ideal(ideal, e)) > 1
            for q in primefactors(generator)
        }
    generic = generic_part(ideal)
    return tuple(
        sorted(q for q in candidates if mono_fiber(ideal, q).monomials != generic)
    )
