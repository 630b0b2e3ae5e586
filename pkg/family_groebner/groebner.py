"""Division with remainder, Buchberger's algorithm and reduced Groebner bases."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
import logging

from .exceptions import (
    CoefficientError,
    RingMismatchError,
    StructuralError,
    ZeroPolynomialError,
)
from .polynomial import (
    Exponent,
    OrderSpec,
    Polynomial,
    PolyRing,
    exponent_add,
    exponent_divides,
    exponent_lcm,
    exponent_sub,
    exponents_coprime,
    monomial_str,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerBasis:
    """Groebner basis of an ideal of ring under ring.order."""

    ring: PolyRing
    polynomials: tuple[Polynomial, ...]
    reduced: bool = False

    def __iter__(self) -> Iterator[Polynomial]:
        """Iterate over basis elements."""
        return iter(self.polynomials)

    def __len__(self) -> int:
        """Return number of basis elements."""
        return len(self.polynomials)

    def __str__(self) -> str:
        """Return ideal notation, e.g. `(a*x - y, a^2)`."""
        if not self.polynomials:
            return "(0)"
        return f"({', '.join(str(p) for p in self.polynomials)})"

    @property
    def order(self) -> OrderSpec:
        """Return the monomial order of the basis."""
        return self.ring.order

    @property
    def leading_monomials(self) -> tuple[Exponent, ...]:
        """Return leading exponents of the basis elements."""
        return tuple(p.leading_monomial for p in self.polynomials)

    def initial_ideal_str(self) -> str:
        """Return the monomial ideal spanned by the leading monomials."""
        if not self.polynomials:
            return "(0)"
        monomials = (
            monomial_str(self.ring.variables, e) for e in self.leading_monomials
        )
        return f"({', '.join(monomials)})"

    def is_zero(self) -> bool:
        """Return whether the ideal is (0)."""
        return not self.polynomials

    def is_unit(self) -> bool:
        """Return whether the ideal is (1)."""
        return any(p and p.is_constant() for p in self.polynomials)

    def contains(self, f: Polynomial) -> bool:
        """Return whether f belongs to the ideal."""
        return member(f, self)


def _require_field(ring: PolyRing) -> None:
    """Raise unless the coefficient domain of ring is a field."""
    if not ring.domain.is_field:
        raise CoefficientError(f"Groebner bases need a field, got {ring.domain}")


def _to_ring(f: Polynomial, ring: PolyRing) -> Polynomial:
    """Return f re-sorted for ring, which may differ from f.ring only by order."""
    if f.ring == ring:
        return f
    if f.ring.with_order(ring.order) != ring:
        raise RingMismatchError(f.ring, ring)
    return ring.from_dict(dict(f.terms))


def _ring_for(
    polynomials: list[Polynomial], order: OrderSpec | None, ring: PolyRing | None
) -> PolyRing:
    """Return ring of a computation from its inputs."""
    if ring is None:
        if not polynomials:
            raise StructuralError("Cannot infer the ring of an empty generator list")
        ring = polynomials[0].ring
    if order is not None:
        ring = ring.with_order(order)
    return ring


def s_polynomial(
    f: Polynomial, g: Polynomial, order: OrderSpec | None = None
) -> Polynomial:
    """Return the S-polynomial of f and g; their leading terms cancel."""
    if not f or not g:
        raise ZeroPolynomialError("S-polynomial of the zero polynomial")
    ring = _ring_for([f], order, None)
    f, g = _to_ring(f, ring), _to_ring(g, ring)
    inv = ring.domain.inv
    f_coefficient, f_lead = f.leading_term()
    g_coefficient, g_lead = g.leading_term()
    lcm = exponent_lcm(f_lead, g_lead)
    return f.mul_term(inv(f_coefficient), exponent_sub(lcm, f_lead)) - g.mul_term(
        inv(g_coefficient), exponent_sub(lcm, g_lead)
    )


def normal_form(
    f: Polynomial, basis: Iterable[Polynomial], order: OrderSpec | None = None
) -> Polynomial:
    """
    Return the fully reduced remainder of f by basis.

    f - r lies in the ideal generated by basis and no term of r is divisible by
    a leading monomial of basis. Divisors are tried in the given sequence, so
    the result is deterministic for a fixed basis ordering.
    """
    ring = _ring_for([f], order, None)
    f = _to_ring(f, ring)
    domain = ring.domain
    key = ring.order.key
    divisors = [
        (g.leading_monomial, g.leading_coefficient, g)
        for g in (_to_ring(g, ring) for g in basis)
        if g
    ]
    current = dict(f.terms)
    remainder = {}
    while current:
        exponent = max(current, key=key)
        coefficient = current[exponent]
        for lead, lead_coefficient, divisor in divisors:
            if not exponent_divides(lead, exponent):
                continue
            factor = domain.div(coefficient, lead_coefficient)
            shift = exponent_sub(exponent, lead)
            for e, c in divisor.terms:
                target = exponent_add(e, shift)
                value = domain.sub(
                    current.get(target, domain.zero), domain.mul(factor, c)
                )
                if domain.is_zero(value):
                    current.pop(target, None)
                else:
                    current[target] = value
            break
        else:
            remainder[exponent] = current.pop(exponent)
    return ring.from_dict(remainder)


def _pair_lcm(basis: list[Polynomial], pair: tuple[int, int]) -> Exponent:
    """Return lcm of the leading monomials of a pair."""
    return exponent_lcm(
        basis[pair[0]].leading_monomial, basis[pair[1]].leading_monomial
    )


def _update(
    basis: list[Polynomial],
    active: list[int],
    pairs: list[tuple[int, int]],
    new: Polynomial,
) -> None:
    """Add new to the basis, pruning pairs with the coprime and chain criteria."""
    basis.append(new)
    index = len(basis) - 1
    lead = new.leading_monomial

    def lm(k: int) -> Exponent:
        return basis[k].leading_monomial

    candidates = list(active)
    kept: list[int] = []
    while candidates:
        k = candidates.pop(0)
        lcm = exponent_lcm(lead, lm(k))
        if exponents_coprime(lead, lm(k)) or not any(
            exponent_divides(exponent_lcm(lead, lm(other)), lcm)
            for other in (*candidates, *kept)
        ):
            kept.append(k)

    surviving = []
    for i, j in pairs:
        lcm = exponent_lcm(lm(i), lm(j))
        if (
            exponent_divides(lead, lcm)
            and exponent_lcm(lm(i), lead) != lcm
            and exponent_lcm(lm(j), lead) != lcm
        ):
            continue
        surviving.append((i, j))
    surviving.extend((k, index) for k in kept if not exponents_coprime(lead, lm(k)))
    pairs[:] = surviving
    active[:] = [k for k in active if not exponent_divides(lead, lm(k))] + [index]


def buchberger(
    generators: Iterable[Polynomial],
    order: OrderSpec | None = None,
    ring: PolyRing | None = None,
) -> GroebnerBasis:
    """
    Return a Groebner basis of the ideal generated by generators.

    Pairs are chosen by the normal strategy: smallest lcm in the active order,
    ties broken by basis index.
    """
    generators = list(generators)
    ring = _ring_for(generators, order, ring)
    _require_field(ring)
    key = ring.order.key
    polynomials = [_to_ring(g, ring).monic() for g in generators if g]
    if any(p.is_constant() for p in polynomials):
        return GroebnerBasis(ring, (ring.one(),), reduced=True)

    basis: list[Polynomial] = []
    active: list[int] = []
    pairs: list[tuple[int, int]] = []
    for polynomial in polynomials:
        _update(basis, active, pairs, polynomial)

    reductions = 0
    while pairs:
        i, j = min(pairs, key=lambda pair: (key(_pair_lcm(basis, pair)), pair))
        pairs.remove((i, j))
        reductions += 1
        remainder = normal_form(
            s_polynomial(basis[i], basis[j]), (basis[k] for k in active)
        )
        if not remainder:
            continue
        if remainder.is_constant():
            _LOGGER.debug("Unit ideal detected after %s reductions", reductions)
            return GroebnerBasis(ring, (ring.one(),), reduced=True)
        _update(basis, active, pairs, remainder.monic())

    _LOGGER.debug(
        "Buchberger in %s: %s generators, %s pair reductions, %s basis elements",
        ring,
        len(polynomials),
        reductions,
        len(active),
    )
    return GroebnerBasis(ring, tuple(basis[k] for k in active))


def reduced_basis(basis: GroebnerBasis) -> GroebnerBasis:
    """Return the unique reduced Groebner basis, sorted by decreasing leading monomial."""
    if basis.reduced:
        return basis
    ring = basis.ring
    key = ring.order.key
    minimal: list[Polynomial] = []
    for polynomial in sorted(
        (p.monic() for p in basis.polynomials if p),
        key=lambda p: key(p.leading_monomial),
    ):
        if not any(
            exponent_divides(kept.leading_monomial, polynomial.leading_monomial)
            for kept in minimal
        ):
            minimal.append(polynomial)
    reduced = [
        normal_form(polynomial, minimal[:i] + minimal[i + 1 :]).monic()
        for i, polynomial in enumerate(minimal)
    ]
    reduced.sort(key=lambda p: key(p.leading_monomial), reverse=True)
    return GroebnerBasis(ring, tuple(reduced), reduced=True)


def groebner_basis(
    generators: Iterable[Polynomial],
    order: OrderSpec | None = None,
    ring: PolyRing | None = None,
) -> GroebnerBasis:
    """Return the reduced Groebner basis of the ideal generated by generators."""
    return reduced_basis(buchberger(generators, order, ring))


def eliminate(
    generators: Iterable[Polynomial],
    drop: Iterable[str],
    ring: PolyRing | None = None,
) -> GroebnerBasis:
    """
    Return the reduced basis of I intersected with k[remaining variables].

    The elimination order is synthesized here: dropped variables form a fresh
    dominant block, remaining variables keep the order induced from the ring.
    """
    generators = list(generators)
    ring = _ring_for(generators, None, ring)
    dropped_names = set(drop)
    drop = tuple(name for name in ring.variables if name in dropped_names)
    elimination = ring.elimination_ring(drop) if drop else ring
    basis = groebner_basis(
        (_to_ring(g, elimination) for g in generators), ring=elimination
    )
    dropped = {ring.index(name) for name in drop}
    target = ring.restrict(name for name in ring.variables if name not in drop)
    kept = [target.embed(p) for p in basis if not p.support() & dropped]
    kept.sort(key=lambda p: target.order.key(p.leading_monomial), reverse=True)
    return GroebnerBasis(target, tuple(kept), reduced=True)


def member(f: Polynomial, basis: GroebnerBasis) -> bool:
    """Return whether f lies in the ideal with Groebner basis basis."""
    return not normal_form(_to_ring(f, basis.ring), basis.polynomials)
