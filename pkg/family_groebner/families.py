"""
Families of ideals over a parameter ring A = k[a]/J0.

The main ring k[a, x] carries a product order: x-exponents are compared first
with the variable order, parameter exponents break ties. A reduced Groebner
basis of I + J0 under that order yields the relative initial ideal in(I): each
basis element g contributes c_g * x^E_g, where E_g is its leading x-exponent
and c_g its full coefficient of x^E_g in k[a].

Pointwise questions about the family reduce to the finitely many exponents
E_g. Every coefficient ideal in(I)_E is the sum of the in(I)_D over leading
exponents D <= E, and a sum of ideals that are each locally (0) or (1) at a
prime is again locally (0) or (1) there. Checking the E_g is therefore enough
to decide whether a prime is good for specialization.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
import enum
import functools
from fractions import Fraction
import itertools
import logging
import threading
from typing import Any

from .const import (
    ATTR_ACTUAL,
    ATTR_BASE,
    ATTR_CERTIFICATE,
    ATTR_COMBINED,
    ATTR_CONTAINED,
    ATTR_ENTRIES,
    ATTR_EQUAL,
    ATTR_EXPONENT,
    ATTR_GENERATORS,
    ATTR_GOOD,
    ATTR_LOCUS,
    ATTR_MONOMIALS,
    ATTR_NOTES,
    ATTR_PER_VARIABLE,
    ATTR_POINT,
    ATTR_PREDICTED,
    ATTR_PRIME,
    ATTR_VERDICT,
    ATTR_WITNESS,
    DEFAULT_ORDER,
)
from .domains import BaseDomain
from .exceptions import PreconditionError, ZeroPolynomialError
from .groebner import GroebnerBasis, groebner_basis
from .ideals import (
    IdealHandle,
    colon_ideal,
    colon_poly,
    contains_mod,
    equals_mod,
    intersect,
    product,
    radical_certificate,
    saturate,
)
from .polynomial import (
    Exponent,
    OrderSpec,
    Polynomial,
    PolyRing,
    exponent_divides,
    minimal_exponents as minimal_monomials,
    monomial_ideal_str,
    monomial_str,
)

_LOGGER = logging.getLogger(__name__)

LOCUS_FLAT = "flat"
LOCUS_ISO = "iso"
LOCUS_FINITE = "finite"

NOTE_NO_WITNESS = "no generator witness; inconclusive"
NOTE_EMPTY_SUPPORT = "I contains a unit of A; the family is empty"
NOTE_EMPTY_FIBER = "I ∩ A is not contained in p; B is the zero ring"


def ideal_strings(ideal: IdealHandle) -> list[str]:
    """Return reduced generators of ideal modulo its base as text."""
    if ideal.is_unit():
        return ["1"]
    return [str(g) for g in ideal.generators_mod_base()]


@dataclass(frozen=True)
class FamilyRing:
    """The data k, a, x and J0 defining A = k[a]/J0 and A[x]."""

    domain: BaseDomain
    parameters: tuple[str, ...]
    variables: tuple[str, ...]
    variable_order: str = DEFAULT_ORDER
    parameter_order: str = DEFAULT_ORDER
    base_relations: tuple[Polynomial, ...] = ()

    def __post_init__(self) -> None:
        """Post initialization."""
        object.__setattr__(self, "parameters", tuple(self.parameters))
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(
            self,
            "base_relations",
            tuple(self.param_ring.embed(g) for g in self.base_relations if g),
        )

    def __str__(self) -> str:
        """Return string representation of self."""
        text = f"{self.domain}[{', '.join(self.parameters)}][{', '.join(self.variables)}]"
        if self.base_relations:
            text += f" mod ({', '.join(str(g) for g in self.base_relations)})"
        return text

    @property
    def nparams(self) -> int:
        """Return number of parameters."""
        return len(self.parameters)

    @functools.cached_property
    def ring(self) -> PolyRing:
        """Return k[a, x] with the x-dominant product order."""
        m, n = self.nparams, len(self.variables)
        order = OrderSpec.from_blocks(
            (
                (range(m, m + n), self.variable_order),
                (range(m), self.parameter_order),
            ),
            m + n,
        )
        return PolyRing(self.domain, self.parameters + self.variables, order)

    @functools.cached_property
    def param_ring(self) -> PolyRing:
        """Return k[a] with the parameter order."""
        return PolyRing.create(self.domain, self.parameters, self.parameter_order)

    @functools.cached_property
    def main_ring(self) -> PolyRing:
        """Return k[x] with the variable order, the ring of the fibers."""
        return PolyRing.create(self.domain, self.variables, self.variable_order)

    def with_base(self, relations: Iterable[Polynomial]) -> FamilyRing:
        """Return same family ring with other base relations."""
        return replace(self, base_relations=tuple(relations))

    def split(self, exponent: Exponent) -> tuple[Exponent, Exponent]:
        """Return (x-part, a-part) of an exponent of the main ring."""
        return exponent[self.nparams :], exponent[: self.nparams]

    def x_monomial(self, exponent: Exponent) -> str:
        """Return text for x^exponent."""
        return monomial_str(self.variables, exponent)

    def unit_exponent(self, variable: str) -> Exponent:
        """Return x-exponent of a single variable."""
        index = self.variables.index(variable)
        return tuple(int(i == index) for i in range(len(self.variables)))

    def param_ideal(
        self, generators: Iterable[Polynomial], note: str | None = None
    ) -> IdealHandle:
        """Return ideal of A = k[a]/J0."""
        return IdealHandle(self.param_ring, tuple(generators), self.base_relations, note)

    def total_ideal(self, generators: Iterable[Polynomial]) -> IdealHandle:
        """Return ideal of A[x], read modulo J0."""
        return IdealHandle(self.ring, tuple(generators), self.base_relations)


@dataclass(frozen=True)
class FamilyIdeal:
    """Ideal I of A[x] with its cached reduced Groebner basis of I + J0."""

    family: FamilyRing
    generators: tuple[Polynomial, ...]
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )
    _cache: dict[str, Any] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        """Post initialization."""
        embed = self.family.ring.embed
        object.__setattr__(self, "generators", tuple(embed(g) for g in self.generators))

    def __str__(self) -> str:
        """Return string representation of self."""
        return f"({', '.join(str(g) for g in self.generators)})"

    @functools.cached_property
    def handle(self) -> IdealHandle:
        """Return I as an ideal of k[a, x] read modulo J0."""
        return self.family.total_ideal(self.generators)

    @property
    def basis(self) -> GroebnerBasis:
        """Return reduced Groebner basis of I + J0 in k[a, x]."""
        return self.handle.basis

    @property
    def relative_initial(self) -> RelativeInitial:
        """Return cached relative initial ideal."""
        with self._lock:
            if (initial := self._cache.get("initial")) is None:
                initial = relative_initial(self)
                self._cache["initial"] = initial
            return initial


@dataclass(frozen=True)
class RelativeInitial:
    """in(I) as pairs (E_g, c_g), one per reduced basis element, in basis order."""

    family: FamilyRing
    entries: tuple[tuple[Exponent, Polynomial], ...]

    def __str__(self) -> str:
        """Return in(I) as an ideal of A[x], e.g. `(a*x, b)`."""
        generators = self.generators()
        if not generators:
            return "(0)"
        return f"({', '.join(str(g) for g in generators)})"

    @property
    def leading_exponents(self) -> tuple[Exponent, ...]:
        """Return distinct leading x-exponents in basis order."""
        return tuple(dict.fromkeys(e for e, _ in self.entries))

    def coefficient_ideal(self, exponent: Exponent) -> IdealHandle:
        """Return in(I)_E = (c_g : E_g <= E) as an ideal of A."""
        return self.family.param_ideal(
            c for e, c in self.entries if exponent_divides(e, exponent)
        )

    def generators(self) -> tuple[Polynomial, ...]:
        """Return c_g * x^E_g in k[a, x]."""
        ring = self.family.ring
        zero = (0,) * self.family.nparams
        return tuple(
            ring.embed(c) * ring.monomial(zero + e) for e, c in self.entries
        )


@dataclass(frozen=True)
class CoefficientTable:
    """Coefficient ideals over a window of x-exponents and the basis exponents."""

    family: FamilyRing
    bounds: tuple[int, ...]
    entries: tuple[tuple[Exponent, IdealHandle], ...]

    def lookup(self, exponent: Exponent) -> IdealHandle:
        """Return coefficient ideal recorded for exponent."""
        return dict(self.entries)[exponent]

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            ATTR_ENTRIES: [
                {
                    ATTR_EXPONENT: self.family.x_monomial(e),
                    ATTR_GENERATORS: ideal_strings(ideal),
                }
                for e, ideal in self.entries
            ]
        }


@dataclass(frozen=True)
class RationalPoint:
    """Assignment of values in k to every parameter."""

    family: FamilyRing
    values: Mapping[str, Fraction]

    def __post_init__(self) -> None:
        """Post initialization."""
        unknown = set(self.values) - set(self.family.parameters)
        if unknown:
            raise PreconditionError(f"Unknown parameters {sorted(unknown)}")
        object.__setattr__(
            self,
            "values",
            {
                name: Fraction(self.values[name])
                for name in self.family.parameters
                if name in self.values
            },
        )

    def __str__(self) -> str:
        """Return string representation of self."""
        return ", ".join(f"{name}={value}" for name, value in self.values.items())

    def __hash__(self) -> int:
        """Return hash of self."""
        return hash((self.family, tuple(self.values.items())))

    def violated_relations(self) -> list[Polynomial]:
        """Return base relations that do not vanish at the point."""
        domain = self.family.domain
        return [
            g
            for g in self.family.base_relations
            if not domain.is_zero(g.evaluate(self.values))
        ]


@dataclass(frozen=True)
class PrimeSpec:
    """Generators of an ideal p of k[a], trusted to be prime."""

    family: FamilyRing
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        """Post initialization."""
        embed = self.family.param_ring.embed
        object.__setattr__(self, "generators", tuple(embed(g) for g in self.generators))
        bare = IdealHandle(self.family.param_ring, self.generators)
        missing = [g for g in self.family.base_relations if not bare.contains(g)]
        if missing:
            raise PreconditionError(
                f"Prime ({', '.join(map(str, self.generators))}) does not contain "
                f"base relations {', '.join(map(str, missing))}"
            )

    def __str__(self) -> str:
        """Return string representation of self."""
        return f"({', '.join(str(g) for g in self.generators)})"

    @property
    def ideal(self) -> IdealHandle:
        """Return p as an ideal of A."""
        return self.family.param_ideal(self.generators)


@dataclass(frozen=True)
class LocusComponent:
    """One constituent of a locus: a per-exponent or per-variable ideal."""

    label: str
    exponent: Exponent
    ideal: IdealHandle
    support: IdealHandle | None = None

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        data: dict[str, Any] = {
            ATTR_EXPONENT: self.label,
            ATTR_GENERATORS: ideal_strings(self.ideal),
        }
        if self.support is not None:
            data[ATTR_BASE] = ideal_strings(self.support)
        return data


@dataclass(frozen=True)
class LocusReport:
    """Answer of a locus computation with an optional witness element."""

    kind: str
    components: tuple[LocusComponent, ...]
    combined: IdealHandle
    contraction: IdealHandle
    witness: Polynomial | None = None
    certificate: GroebnerBasis | None = None
    everywhere: bool = False
    notes: tuple[str, ...] = ()
    generic: bool | None = None

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        data: dict[str, Any] = {
            ATTR_LOCUS: self.kind,
            ATTR_PER_VARIABLE: [c.as_dict() for c in self.components],
            ATTR_COMBINED: ideal_strings(self.combined),
            ATTR_BASE: ideal_strings(self.contraction),
            ATTR_WITNESS: None if self.witness is None else str(self.witness),
            "everywhere": self.everywhere,
            ATTR_NOTES: list(self.notes),
        }
        if self.certificate is not None:
            data[ATTR_CERTIFICATE] = [str(g) for g in self.certificate]
        if self.generic is not None:
            data["generic"] = self.generic
        return data


class Verdict(enum.StrEnum):
    """Local behavior of a coefficient ideal at a prime."""

    UNIT = "Unit"
    ZERO = "Zero"
    MIXED = "Mixed"


@dataclass(frozen=True)
class GoodPointVerdict:
    """Per leading exponent verdicts at a prime."""

    prime: PrimeSpec
    verdicts: tuple[tuple[str, Verdict], ...]
    good: bool
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            ATTR_PRIME: str(self.prime),
            ATTR_VERDICT: [
                {ATTR_EXPONENT: label, ATTR_VERDICT: verdict.value}
                for label, verdict in self.verdicts
            ],
            ATTR_GOOD: self.good,
            ATTR_NOTES: list(self.notes),
        }


@dataclass(frozen=True)
class SpecializationReport:
    """Predicted against actual fiber initial ideal at a rational point."""

    point: RationalPoint
    predicted: tuple[Exponent, ...]
    actual: tuple[Exponent, ...]
    equal: bool
    contained: bool

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        variables = self.point.family.variables
        return {
            ATTR_POINT: str(self.point),
            ATTR_PREDICTED: monomial_ideal_str(variables, self.predicted),
            ATTR_ACTUAL: monomial_ideal_str(variables, self.actual),
            ATTR_EQUAL: self.equal,
            ATTR_CONTAINED: self.contained,
        }


@dataclass(frozen=True)
class QuotientExtensionReport:
    """Coefficient ideals of I before and after adjoining I ∩ A to J0."""

    equal: bool
    details: tuple[tuple[str, IdealHandle, IdealHandle, bool], ...]

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            ATTR_EQUAL: self.equal,
            ATTR_ENTRIES: [
                {
                    ATTR_EXPONENT: label,
                    "extended": ideal_strings(left),
                    "recomputed": ideal_strings(right),
                    ATTR_EQUAL: equal,
                }
                for label, left, right, equal in self.details
            ],
        }


@dataclass(frozen=True)
class ModuleGenerators:
    """Monomials generating A[x]/I as an A-module, with their coefficient ideals."""

    family: FamilyRing
    entries: tuple[tuple[Exponent, IdealHandle], ...]

    @property
    def monomials(self) -> tuple[Exponent, ...]:
        """Return exponents of the generating monomials."""
        return tuple(e for e, _ in self.entries)

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            ATTR_MONOMIALS: [
                {
                    ATTR_EXPONENT: self.family.x_monomial(e),
                    ATTR_GENERATORS: ideal_strings(ideal),
                }
                for e, ideal in self.entries
            ]
        }


def relative_initial(ideal: FamilyIdeal) -> RelativeInitial:
    """Return (E_g, c_g) for every element g of the reduced basis."""
    family = ideal.family
    param_ring = family.param_ring
    entries = []
    for g in ideal.basis:
        leading, _ = family.split(g.leading_monomial)
        coefficient = param_ring.from_dict(
            {
                a_part: c
                for (x_part, a_part), c in ((family.split(e), c) for e, c in g.terms)
                if x_part == leading
            }
        )
        entries.append((leading, coefficient))
    _LOGGER.debug("Relative initial ideal of %s has %s terms", ideal, len(entries))
    return RelativeInitial(family, tuple(entries))


def coefficient_ideal(initial: RelativeInitial, exponent: Exponent) -> IdealHandle:
    """Return in(I)_E."""
    return initial.coefficient_ideal(exponent)


def coefficient_table(ideal: FamilyIdeal, bounds: Iterable[int]) -> CoefficientTable:
    """Return coefficient ideals over the window product(range(b)) and basis exponents."""
    bounds = tuple(bounds)
    if len(bounds) != len(ideal.family.variables):
        raise PreconditionError(
            f"Window {bounds} does not match variables {ideal.family.variables}"
        )
    initial = ideal.relative_initial
    exponents = dict.fromkeys(
        itertools.chain(
            (tuple(e) for e in itertools.product(*(range(b) for b in bounds))),
            initial.leading_exponents,
        )
    )
    key = ideal.family.main_ring.order.key
    entries = []
    for exponent in sorted(exponents, key=key):
        coefficients = initial.coefficient_ideal(exponent)
        entries.append(
            (exponent, coefficients.with_generators(coefficients.generators_mod_base()))
        )
    return CoefficientTable(ideal.family, bounds, tuple(entries))


def base_contraction(ideal: FamilyIdeal) -> IdealHandle:
    """Return I ∩ A, read off the basis elements free of x."""
    family = ideal.family
    zero = (0,) * len(family.variables)
    return family.param_ideal(
        family.param_ring.embed(g)
        for g in ideal.basis
        if family.split(g.leading_monomial)[0] == zero
    )


def minimal_exponents(ideal: FamilyIdeal) -> tuple[Exponent, ...]:
    """Return T: nonzero leading x-exponents E with in(I)_E differing from I ∩ A."""
    initial = ideal.relative_initial
    contraction = base_contraction(ideal)
    return tuple(
        sorted(
            e
            for e in initial.leading_exponents
            if any(e) and not equals_mod(initial.coefficient_ideal(e), contraction)
        )
    )


def _find_witness(
    combined: IdealHandle, contraction: IdealHandle
) -> tuple[Polynomial | None, GroebnerBasis | None]:
    """Return first generator of combined outside the radical of contraction."""
    candidates = (
        (combined.ring.one(),) if combined.is_unit() else combined.generators_mod_base()
    )
    for candidate in candidates:
        certificate = radical_certificate(candidate, contraction)
        if not certificate.is_unit():
            return candidate, certificate
    _LOGGER.warning("No generator of %s escapes the radical of %s", combined, contraction)
    return None, None


def _intersect_all(family: FamilyRing, ideals: Iterable[IdealHandle]) -> IdealHandle:
    """Return intersection of ideals of A; (1) for none."""
    ideals = list(ideals)
    if not ideals:
        return family.param_ideal((family.param_ring.one(),))
    return functools.reduce(intersect, ideals)


def _locus_notes(
    contraction: IdealHandle, witness: Polynomial | None
) -> tuple[str, ...]:
    """Return notes shared by locus reports."""
    if contraction.is_unit():
        return (NOTE_EMPTY_SUPPORT,)
    if witness is None:
        return (NOTE_NO_WITNESS,)
    return ()


def flat_locus(ideal: FamilyIdeal) -> LocusReport:
    """
    Return S = intersection over E in T of (J_E^2 + J0 : J_E) and a witness.

    A witness is a generator s of S outside the radical of I ∩ A; over the
    complement of V(s) the quotient A[x]/I is faithfully flat over
    A/(I ∩ A). The certificate is the reduced basis of I ∩ A + (1 - w*s).
    """
    family = ideal.family
    initial = ideal.relative_initial
    contraction = base_contraction(ideal)
    components = []
    for exponent in minimal_exponents(ideal):
        support = initial.coefficient_ideal(exponent)
        components.append(
            LocusComponent(
                family.x_monomial(exponent),
                exponent,
                colon_ideal(product(support, support), support),
                support,
            )
        )
    combined = _intersect_all(family, (c.ideal for c in components))
    witness, certificate = _find_witness(combined, contraction)
    _LOGGER.debug("Flat locus of %s: S = %s, witness %s", ideal, combined, witness)
    return LocusReport(
        LOCUS_FLAT,
        tuple(components),
        combined,
        contraction,
        witness,
        certificate,
        everywhere=combined.is_unit() and witness is not None,
        notes=_locus_notes(contraction, witness),
    )


def good_point(ideal: FamilyIdeal, prime: PrimeSpec) -> GoodPointVerdict:
    """
    Decide whether every coefficient ideal is locally (0) or (1) at prime.

    The verdict is conditional on the generators of prime generating a prime
    ideal; that is not verified.
    """
    if prime.family != ideal.family:
        raise PreconditionError(f"Prime {prime} belongs to another ring")
    contraction = base_contraction(ideal)
    p = prime.ideal
    if not contains_mod(p, contraction):
        return GoodPointVerdict(prime, (), True, (NOTE_EMPTY_FIBER,))
    initial = ideal.relative_initial
    verdicts = []
    for exponent in initial.leading_exponents:
        coefficients = initial.coefficient_ideal(exponent)
        if not contains_mod(p, coefficients):
            verdict = Verdict.UNIT
        elif all(
            not contains_mod(p, colon_poly(contraction, g))
            for g in coefficients.generators_mod_base()
        ):
            verdict = Verdict.ZERO
        else:
            verdict = Verdict.MIXED
        verdicts.append((ideal.family.x_monomial(exponent), verdict))
    return GoodPointVerdict(
        prime,
        tuple(verdicts),
        all(verdict != Verdict.MIXED for _, verdict in verdicts),
    )


def specialization_check(
    ideal: FamilyIdeal, point: RationalPoint
) -> SpecializationReport:
    """Compare the specialized in(I) with the initial ideal of the specialized I."""
    family = ideal.family
    if point.family != family:
        raise PreconditionError(f"Point {point} belongs to another ring")
    if violated := point.violated_relations():
        raise PreconditionError(
            f"Point {point} violates base relations {', '.join(map(str, violated))}"
        )
    domain = family.domain
    predicted = minimal_monomials(
        e
        for e, c in ideal.relative_initial.entries
        if not domain.is_zero(c.evaluate(point.values))
    )
    main_ring = family.main_ring
    fiber = groebner_basis(
        (g.substitute(point.values, main_ring) for g in ideal.generators),
        ring=main_ring,
    )
    actual = minimal_monomials(fiber.leading_monomials)
    contained = all(
        any(exponent_divides(a, e) for a in actual) for e in predicted
    )
    if not contained:
        _LOGGER.error("Specialized initial ideal at %s is not contained in the fiber", point)
    return SpecializationReport(point, predicted, actual, predicted == actual, contained)


def _per_variable_locus(
    ideal: FamilyIdeal,
    kind: str,
    components: list[LocusComponent],
    generic: bool | None = None,
) -> LocusReport:
    """Return locus report combining per-variable ideals."""
    contraction = base_contraction(ideal)
    combined = _intersect_all(ideal.family, (c.ideal for c in components))
    everywhere = all(c.ideal.is_unit() for c in components)
    witness, certificate = (
        (None, None) if everywhere else _find_witness(combined, contraction)
    )
    notes = () if everywhere else _locus_notes(contraction, witness)
    return LocusReport(
        kind,
        tuple(components),
        combined,
        contraction,
        witness,
        certificate,
        everywhere,
        notes,
        generic,
    )


def iso_locus(ideal: FamilyIdeal) -> LocusReport:
    """
    Return in(I)_{x_i} per variable and their intersection.

    A -> A[x]/I is surjective at p exactly when every in(I)_{x_i} escapes p.
    generic is set when every in(I)_{x_i} differs from I ∩ A.
    """
    family = ideal.family
    initial = ideal.relative_initial
    contraction = base_contraction(ideal)
    components = [
        LocusComponent(
            name,
            family.unit_exponent(name),
            initial.coefficient_ideal(family.unit_exponent(name)),
        )
        for name in family.variables
    ]
    generic = all(not equals_mod(c.ideal, contraction) for c in components)
    return _per_variable_locus(ideal, LOCUS_ISO, components, generic)


def _pure_power_index(exponent: Exponent) -> int | None:
    """Return i when exponent is a power of x_i, -1 for 1, None otherwise."""
    support = [i for i, e in enumerate(exponent) if e]
    if not support:
        return -1
    return support[0] if len(support) == 1 else None


def finite_locus(ideal: FamilyIdeal) -> LocusReport:
    """
    Return in(I)_{x_i^inf} per variable and their intersection.

    in(I)_{x_i^inf} is generated by c_g over basis elements whose leading
    x-exponent is a power of x_i, including the elements of I ∩ A.
    """
    family = ideal.family
    entries = ideal.relative_initial.entries
    components = []
    for index, name in enumerate(family.variables):
        generators = [c for e, c in entries if _pure_power_index(e) in (-1, index)]
        components.append(
            LocusComponent(
                f"{name}^inf",
                family.unit_exponent(name),
                family.param_ideal(generators),
            )
        )
    return _per_variable_locus(ideal, LOCUS_FINITE, components)


def localize_contract(ideal: FamilyIdeal, s: Polynomial) -> FamilyIdeal:
    """Return I A_s[x] ∩ A[x] = (I : s^inf)."""
    family = ideal.family
    s = family.ring.embed(s)
    if not s:
        raise ZeroPolynomialError("Cannot localize at zero")
    saturation = saturate(ideal.handle, s)
    _LOGGER.debug("Localized %s at %s: %s", ideal, s, saturation)
    return FamilyIdeal(family, saturation.generators_mod_base())


def quotient_extension_check(ideal: FamilyIdeal) -> QuotientExtensionReport:
    """
    Compare in(I) B[x] with in(I B[x]) for B = A/(I ∩ A).

    Both sides are read modulo J0 + I ∩ A at every leading exponent of either
    basis; they always agree.
    """
    family = ideal.family
    contraction = base_contraction(ideal)
    extended_base = (*family.base_relations, *contraction.generators_mod_base())
    quotient = FamilyIdeal(family.with_base(extended_base), ideal.generators)
    before, after = ideal.relative_initial, quotient.relative_initial
    details = []
    for exponent in dict.fromkeys((*before.leading_exponents, *after.leading_exponents)):
        left = before.coefficient_ideal(exponent).with_base(extended_base)
        right = after.coefficient_ideal(exponent)
        details.append(
            (family.x_monomial(exponent), left, right, equals_mod(left, right))
        )
    equal = all(d[3] for d in details)
    if not equal:
        _LOGGER.error("Coefficient ideals of %s change over A/(I ∩ A)", ideal)
    return QuotientExtensionReport(equal, tuple(details))


def module_generators(ideal: FamilyIdeal) -> ModuleGenerators:
    """
    Return monomials x^E whose coefficient ideal is not (1).

    Requires the family to be finite everywhere; the listed monomials then
    generate A[x]/I as an A-module.
    """
    report = finite_locus(ideal)
    if not report.everywhere:
        raise PreconditionError(f"{ideal} is not finite over every point of the base")
    family = ideal.family
    initial = ideal.relative_initial
    bounds = []
    for index in range(len(family.variables)):
        powers = [e[index] for e, _ in initial.entries if _pure_power_index(e) == index]
        bounds.append(max(powers, default=0) + 1)
    key = family.main_ring.order.key
    entries = []
    for exponent in sorted(itertools.product(*(range(b) for b in bounds)), key=key):
        coefficients = initial.coefficient_ideal(exponent)
        if not coefficients.is_unit():
            entries.append((exponent, coefficients))
    return ModuleGenerators(family, tuple(entries))
