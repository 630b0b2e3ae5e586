"""Ideal arithmetic relative to base relations J0."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
import functools
import logging
import threading
from typing import Any

from .const import AUX_INTERSECT, AUX_SATURATE
from .exceptions import RingMismatchError, ZeroPolynomialError
from .groebner import GroebnerBasis, eliminate, groebner_basis, member
from .polynomial import Polynomial, PolyRing

_LOGGER = logging.getLogger(__name__)

NOTE_ZERO_COLON = "zero-colon"


@functools.lru_cache(maxsize=256)
def _base_basis(ring: PolyRing, base: tuple[Polynomial, ...]) -> GroebnerBasis:
    """Return reduced basis of the base relations in ring."""
    return groebner_basis(base, ring=ring)


def fresh_variable(ring: PolyRing, stem: str) -> str:
    """Return a variable name based on stem that ring does not use."""
    name = stem
    while ring.has_variable(name):
        name = f"{name}_"
    return name


@dataclass(frozen=True)
class IdealHandle:
    """
    Ideal of ring generated by generators, read modulo the base relations.

    The reduced Groebner basis of generators + base is computed on first use
    and cached.
    """

    ring: PolyRing
    generators: tuple[Polynomial, ...]
    base: tuple[Polynomial, ...] = ()
    note: str | None = None
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )
    _cache: dict[str, Any] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        """Post initialization."""
        embed = self.ring.embed
        object.__setattr__(
            self, "generators", tuple(embed(g) for g in self.generators if g)
        )
        object.__setattr__(self, "base", tuple(embed(g) for g in self.base if g))

    def __str__(self) -> str:
        """Return ideal notation of the reduced generators modulo the base."""
        if self.is_unit():
            return "(1)"
        generators = self.generators_mod_base()
        if not generators:
            return "(0)"
        return f"({', '.join(str(g) for g in generators)})"

    @property
    def basis(self) -> GroebnerBasis:
        """Return reduced Groebner basis of generators + base."""
        with self._lock:
            if (basis := self._cache.get("basis")) is None:
                basis = groebner_basis((*self.generators, *self.base), ring=self.ring)
                self._cache["basis"] = basis
                _LOGGER.debug(
                    "Cached basis of %s generators in %s: %s elements",
                    len(self.generators),
                    self.ring,
                    len(basis),
                )
            return basis

    @property
    def base_basis(self) -> GroebnerBasis:
        """Return reduced Groebner basis of the base relations alone."""
        return _base_basis(self.ring, self.base)

    def generators_mod_base(self) -> tuple[Polynomial, ...]:
        """Return reduced basis elements that do not lie in the base ideal."""
        base_basis = self.base_basis
        return tuple(g for g in self.basis if not member(g, base_basis))

    def with_generators(
        self, generators: Iterable[Polynomial], note: str | None = None
    ) -> IdealHandle:
        """Return ideal with the same ring and base but other generators."""
        return IdealHandle(self.ring, tuple(generators), self.base, note)

    def with_base(self, base: Iterable[Polynomial]) -> IdealHandle:
        """Return ideal with the same generators and other base relations."""
        return IdealHandle(self.ring, self.generators, tuple(base), self.note)

    def is_zero(self) -> bool:
        """Return whether the ideal is (0) modulo the base."""
        return not self.generators_mod_base()

    def is_unit(self) -> bool:
        """Return whether the ideal is (1)."""
        return self.basis.is_unit()

    def contains(self, f: Polynomial) -> bool:
        """Return whether f lies in the ideal modulo the base."""
        return member(self.ring.embed(f), self.basis)


def _check_compatible(left: IdealHandle, right: IdealHandle) -> None:
    """Raise unless both ideals share ring and base ideal."""
    if left.ring != right.ring:
        raise RingMismatchError(left.ring, right.ring)
    if left.base_basis.polynomials != right.base_basis.polynomials:
        raise RingMismatchError(
            f"{left.ring} mod {left.base_basis}", f"{right.ring} mod {right.base_basis}"
        )


def _require_nonzero(ideal: IdealHandle, g: Polynomial) -> Polynomial:
    """Return g in the ring of ideal, raising for the zero polynomial."""
    g = ideal.ring.embed(g)
    if not g:
        raise ZeroPolynomialError(f"Cannot divide {ideal} by zero")
    return g


def _eliminate_auxiliary(
    ideal: IdealHandle, stem: str, build: Any
) -> tuple[Polynomial, ...]:
    """
    Eliminate one fresh variable from the ideal returned by build.

    build receives the extended ring and the new variable and returns the
    generators to eliminate from.
    """
    ring = ideal.ring
    name = fresh_variable(ring, stem)
    extended = ring.extend((name,))
    generators = build(extended, extended.gen(name))
    basis = eliminate(generators, (name,), ring=extended)
    return tuple(ring.embed(g) for g in basis)


def intersect(left: IdealHandle, right: IdealHandle) -> IdealHandle:
    """Return left and right intersected, via t*left + (1 - t)*right."""
    _check_compatible(left, right)

    def build(extended: PolyRing, t: Polynomial) -> list[Polynomial]:
        embed = extended.embed
        return [
            *(t * embed(g) for g in left.generators),
            *((1 - t) * embed(g) for g in right.generators),
            *(embed(g) for g in left.base),
        ]

    generators = _eliminate_auxiliary(left, AUX_INTERSECT, build)
    _LOGGER.debug("Intersection has %s generators", len(generators))
    return left.with_generators(generators)


def colon_poly(ideal: IdealHandle, g: Polynomial) -> IdealHandle:
    """Return (ideal : g) modulo the base."""
    g = _require_nonzero(ideal, g)

    def build(extended: PolyRing, t: Polynomial) -> list[Polynomial]:
        embed = extended.embed
        return [
            *(t * embed(f) for f in (*ideal.generators, *ideal.base)),
            (1 - t) * embed(g),
        ]

    multiples = _eliminate_auxiliary(ideal, AUX_INTERSECT, build)
    return ideal.with_generators(f.exact_quotient(g) for f in multiples)


def colon_ideal(ideal: IdealHandle, divisor: IdealHandle) -> IdealHandle:
    """
    Return (ideal : divisor) modulo the base.

    The colon by the zero ideal is (1); the result then carries the note
    `zero-colon`.
    """
    _check_compatible(ideal, divisor)
    generators = divisor.generators_mod_base()
    if not generators:
        _LOGGER.warning("Colon of %s by the zero ideal taken to be (1)", ideal)
        return ideal.with_generators((ideal.ring.one(),), note=NOTE_ZERO_COLON)
    return functools.reduce(intersect, (colon_poly(ideal, g) for g in generators))


def saturate(ideal: IdealHandle, g: Polynomial) -> IdealHandle:
    """Return (ideal : g^inf) modulo the base, via 1 - w*g."""
    g = _require_nonzero(ideal, g)

    def build(extended: PolyRing, w: Polynomial) -> list[Polynomial]:
        embed = extended.embed
        return [
            *(embed(f) for f in (*ideal.generators, *ideal.base)),
            1 - w * embed(g),
        ]

    return ideal.with_generators(_eliminate_auxiliary(ideal, AUX_SATURATE, build))


def radical_certificate(s: Polynomial, ideal: IdealHandle) -> GroebnerBasis:
    """
    Return reduced basis of ideal + base + (1 - w*s) in the ring extended by w.

    The basis is (1) exactly when s lies in the radical of the ideal.
    """
    ring = ideal.ring
    name = fresh_variable(ring, AUX_SATURATE)
    extended = ring.extend((name,))
    embed = extended.embed
    w = extended.gen(name)
    return groebner_basis(
        (
            *(embed(f) for f in (*ideal.generators, *ideal.base)),
            1 - w * embed(ring.embed(s)),
        ),
        ring=extended,
    )


def radical_member(s: Polynomial, ideal: IdealHandle) -> bool:
    """Return whether some power of s lies in the ideal modulo the base."""
    return radical_certificate(s, ideal).is_unit()


def equals_mod(left: IdealHandle, right: IdealHandle) -> bool:
    """Return whether two ideals coincide modulo the base."""
    _check_compatible(left, right)
    return left.basis.polynomials == right.basis.polynomials


def contains_mod(container: IdealHandle, ideal: IdealHandle) -> bool:
    """Return whether ideal is contained in container modulo the base."""
    _check_compatible(container, ideal)
    return all(member(g, container.basis) for g in ideal.generators)


def product(left: IdealHandle, right: IdealHandle) -> IdealHandle:
    """Return the product of two ideals modulo the base."""
    _check_compatible(left, right)
    return left.with_generators(f * g for f in left.generators for g in right.generators)


def ideal_sum(left: IdealHandle, right: IdealHandle) -> IdealHandle:
    """Return the sum of two ideals modulo the base."""
    _check_compatible(left, right)
    return left.with_generators((*left.generators, *right.generators))
