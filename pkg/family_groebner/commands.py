"""Command dispatcher for sessions."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from functools import wraps
import logging
from typing import Any

import voluptuous as vol

from .const import (
    ATTR_BASE,
    ATTR_BASIS,
    ATTR_COMMAND,
    ATTR_GENERATORS,
    ATTR_IDEAL,
    ATTR_MONOMIALS,
    ATTR_ORDER,
    ATTR_RING,
    COMMAND_COEFFS,
    COMMAND_CONTRACT,
    COMMAND_FINITE_LOCUS,
    COMMAND_FLAT_LOCUS,
    COMMAND_GB,
    COMMAND_GOOD_POINT,
    COMMAND_INITIAL,
    COMMAND_ISO_LOCUS,
    COMMAND_MODULE_GENS,
    COMMAND_MONO_COEFFS,
    COMMAND_MONO_DIAGRAM,
    COMMAND_MONO_FIBER,
    COMMAND_QUOLEM_CHECK,
    COMMAND_SATURATE,
    COMMAND_SPECIALIZE,
    COMMANDS,
    CONF_COMMAND,
    CONF_ELEMENT,
    CONF_FORMAT,
    CONF_IDEAL,
    CONF_MODULUS,
    CONF_POINT,
    CONF_PRIME,
    CONF_Q,
    CONF_WINDOW,
    DEFAULT_FORMAT,
    DEFAULT_IDEAL,
    DEFAULT_WINDOW,
    FORMATS,
)
from .exceptions import PreconditionError
from .families import (
    CoefficientTable,
    FamilyIdeal,
    RelativeInitial,
    base_contraction,
    coefficient_table,
    finite_locus,
    flat_locus,
    good_point,
    ideal_strings,
    iso_locus,
    localize_contract,
    module_generators,
    quotient_extension_check,
    specialization_check,
)
from .groebner import GroebnerBasis
from .helpers import parse_window
from .ideals import IdealHandle
from .monomial import (
    MonomialIdealOverPIR,
    generic_part,
    mono_base_change,
    mono_diagram,
    mono_fiber,
    mono_table,
    special_primes,
    unit_part,
)
from .polynomial import Exponent, Polynomial, monomial_ideal_str
from .session import Session

_LOGGER = logging.getLogger(__name__)

WINDOW_PATTERN = r"^\s*\d+\s*([xX×]\s*\d+)?\s*$"

COMMAND_REQUIREMENTS = {
    COMMAND_SPECIALIZE: CONF_POINT,
    COMMAND_GOOD_POINT: CONF_PRIME,
    COMMAND_SATURATE: CONF_ELEMENT,
}


def _check_requirements(options: dict[str, Any]) -> dict[str, Any]:
    """Validate that options needed by the command are present."""
    required = COMMAND_REQUIREMENTS.get(options[CONF_COMMAND])
    if required is not None and options.get(required) is None:
        raise vol.Invalid(f"{options[CONF_COMMAND]} needs --{required}")
    return options


MODULUS_SCHEMA = vol.Any(None, vol.All(vol.Coerce(int), vol.Range(min=2)))

COMMAND_SCHEMA = vol.Schema(
    vol.All(
        {
            vol.Required(CONF_COMMAND): vol.In(COMMANDS),
            vol.Optional(CONF_IDEAL, default=DEFAULT_IDEAL): str,
            vol.Optional(CONF_POINT, default=None): vol.Any(None, str),
            vol.Optional(CONF_PRIME, default=None): vol.Any(None, str),
            vol.Optional(CONF_WINDOW, default=None): vol.Any(
                None, vol.Match(WINDOW_PATTERN)
            ),
            vol.Optional(CONF_FORMAT, default=DEFAULT_FORMAT): vol.In(FORMATS),
            vol.Optional(CONF_ELEMENT, default=None): vol.Any(None, str),
            vol.Optional(CONF_MODULUS, default=None): MODULUS_SCHEMA,
            vol.Optional(CONF_Q, default=None): MODULUS_SCHEMA,
        },
        _check_requirements,
    ),
    extra=vol.REMOVE_EXTRA,
)


@dataclass(frozen=True)
class CommandReport:
    """Result of one command: the analysis payload and what it was run on."""

    command: str
    ideal: str
    payload: Any

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            ATTR_COMMAND: self.command,
            ATTR_IDEAL: self.ideal,
            **self.payload.as_dict(),
        }


@dataclass(frozen=True)
class BasisReport:
    """Reduced Groebner basis of I + J0."""

    ring: str
    order: str
    basis: GroebnerBasis

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            ATTR_RING: self.ring,
            ATTR_ORDER: self.order,
            ATTR_BASIS: [str(g) for g in self.basis],
        }


@dataclass(frozen=True)
class InitialReport:
    """Relative initial ideal."""

    initial: RelativeInitial

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        family = self.initial.family
        return {
            ATTR_GENERATORS: [str(g) for g in self.initial.generators()],
            "terms": [
                {"exponent": family.x_monomial(e), "coefficient": str(c)}
                for e, c in self.initial.entries
            ],
        }


@dataclass(frozen=True)
class ContractionReport:
    """I ∩ A."""

    contraction: IdealHandle

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            ATTR_GENERATORS: ideal_strings(self.contraction),
            ATTR_BASE: [str(g) for g in self.contraction.base],
        }


@dataclass(frozen=True)
class SaturationReport:
    """(I : s^inf) with its relative initial ideal."""

    element: Polynomial
    saturation: FamilyIdeal

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {
            "element": str(self.element),
            ATTR_GENERATORS: [str(g) for g in self.saturation.generators],
            "initial": [str(g) for g in self.saturation.relative_initial.generators()],
        }


@dataclass(frozen=True)
class MonomialReport:
    """Monomial ideal over Z or Z/n with generic part, unit part and special primes."""

    ideal: MonomialIdealOverPIR
    generic: tuple[Exponent, ...]
    unit: tuple[Exponent, ...]
    special: tuple[int, ...]

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        variables = self.ideal.variables
        return {
            ATTR_RING: str(self.ideal.domain),
            ATTR_IDEAL: str(self.ideal),
            "generic": monomial_ideal_str(variables, self.generic),
            "unit": monomial_ideal_str(variables, self.unit),
            "special_primes": list(self.special),
            ATTR_MONOMIALS: {
                str(q): str(mono_fiber(self.ideal, q)) for q in self.special
            },
        }


@dataclass(frozen=True)
class DiagramReport:
    """Text diagram of principal coefficient ideals."""

    ideal: MonomialIdealOverPIR
    diagram: str

    def as_dict(self) -> dict[str, Any]:
        """Return serializable form."""
        return {ATTR_RING: str(self.ideal.domain), "diagram": self.diagram.splitlines()}


CommandHandler = Callable[[Session, dict[str, Any]], Any]
COMMAND_HANDLERS: dict[str, CommandHandler] = {}


def register_command(name: str) -> Callable[[CommandHandler], CommandHandler]:
    """Register a command handler."""

    def decorator(func: CommandHandler) -> CommandHandler:
        COMMAND_HANDLERS[name] = func
        return func

    return decorator


def get_ideal(
    ideal_type: type,
) -> Callable[[Callable[[Session, dict[str, Any], Any], Any]], CommandHandler]:
    """Decorate command handler to resolve the ideal named in the options."""

    def decorator(
        orig_func: Callable[[Session, dict[str, Any], Any], Any],
    ) -> CommandHandler:
        @wraps(orig_func)
        def get_ideal_func(session: Session, options: dict[str, Any]) -> Any:
            """Look up the ideal and check that it suits the command."""
            ideal = session.ideal(options[CONF_IDEAL])
            if not isinstance(ideal, ideal_type):
                raise PreconditionError(
                    f"{options[CONF_COMMAND]} does not apply to ideal {options[CONF_IDEAL]}"
                )
            return orig_func(session, options, ideal)

        return get_ideal_func

    return decorator


def _window(options: dict[str, Any], nvars: int) -> tuple[int, ...]:
    """Return per-variable bounds from the window option."""
    if options[CONF_WINDOW] is None:
        return (DEFAULT_WINDOW,) * nvars
    try:
        return parse_window(options[CONF_WINDOW], nvars)
    except ValueError as err:
        raise vol.Invalid(str(err)) from err


def _monomial(options: dict[str, Any], ideal: MonomialIdealOverPIR) -> MonomialIdealOverPIR:
    """Return ideal after the optional base change."""
    if options[CONF_MODULUS] is None:
        return ideal
    return mono_base_change(ideal, options[CONF_MODULUS])


@register_command(COMMAND_GB)
@get_ideal(FamilyIdeal)
def command_gb(session: Session, options: dict[str, Any], ideal: FamilyIdeal) -> BasisReport:
    """Return reduced basis of I + J0 under the product order."""
    family = ideal.family
    order = (
        f"{family.variable_order}({', '.join(family.variables)}), "
        f"{family.parameter_order}({', '.join(family.parameters)})"
    )
    return BasisReport(str(family), order, ideal.basis)


@register_command(COMMAND_INITIAL)
@get_ideal(FamilyIdeal)
def command_initial(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> InitialReport:
    """Return in(I)."""
    return InitialReport(ideal.relative_initial)


@register_command(COMMAND_COEFFS)
@get_ideal(FamilyIdeal)
def command_coeffs(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> CoefficientTable:
    """Return coefficient ideals over the window."""
    bounds = _window(options, len(ideal.family.variables))
    return coefficient_table(ideal, bounds)


@register_command(COMMAND_CONTRACT)
@get_ideal(FamilyIdeal)
def command_contract(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> ContractionReport:
    """Return I ∩ A."""
    return ContractionReport(base_contraction(ideal))


@register_command(COMMAND_FLAT_LOCUS)
@get_ideal(FamilyIdeal)
def command_flat_locus(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> Any:
    """Return flat locus report."""
    return flat_locus(ideal)


@register_command(COMMAND_GOOD_POINT)
@get_ideal(FamilyIdeal)
def command_good_point(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> Any:
    """Return good-prime verdicts; --prime is a prime name or `(gens)`."""
    text = options[CONF_PRIME]
    prime = (
        session.prime(text) if text in session.primes else session.parse_prime(text)
    )
    return good_point(ideal, prime)


@register_command(COMMAND_SPECIALIZE)
@get_ideal(FamilyIdeal)
def command_specialize(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> Any:
    """Return specialization report; --point is a point name or `a=v, ...`."""
    text = options[CONF_POINT]
    point = (
        session.point(text) if text in session.points else session.parse_point(text)
    )
    return specialization_check(ideal, point)


@register_command(COMMAND_ISO_LOCUS)
@get_ideal(FamilyIdeal)
def command_iso_locus(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> Any:
    """Return isomorphism locus report."""
    return iso_locus(ideal)


@register_command(COMMAND_FINITE_LOCUS)
@get_ideal(FamilyIdeal)
def command_finite_locus(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> Any:
    """Return finite locus report."""
    return finite_locus(ideal)


@register_command(COMMAND_SATURATE)
@get_ideal(FamilyIdeal)
def command_saturate(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> SaturationReport:
    """Return (I : s^inf) for the parameter polynomial given by --element."""
    element = session.parse_polynomial(options[CONF_ELEMENT], parameters_only=True)
    return SaturationReport(element, localize_contract(ideal, element))


@register_command(COMMAND_QUOLEM_CHECK)
@get_ideal(FamilyIdeal)
def command_quolem_check(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> Any:
    """Return comparison of in(I) over A/(I ∩ A) with the recomputed one."""
    return quotient_extension_check(ideal)


@register_command(COMMAND_MODULE_GENS)
@get_ideal(FamilyIdeal)
def command_module_gens(
    session: Session, options: dict[str, Any], ideal: FamilyIdeal
) -> Any:
    """Return monomial module generators of A[x]/I."""
    return module_generators(ideal)


@register_command(COMMAND_MONO_COEFFS)
@get_ideal(MonomialIdealOverPIR)
def command_mono_coeffs(
    session: Session, options: dict[str, Any], ideal: MonomialIdealOverPIR
) -> Any:
    """Return principal coefficient ideals over the window."""
    ideal = _monomial(options, ideal)
    return mono_table(ideal, _window(options, len(ideal.variables)))


@register_command(COMMAND_MONO_FIBER)
@get_ideal(MonomialIdealOverPIR)
def command_mono_fiber(
    session: Session, options: dict[str, Any], ideal: MonomialIdealOverPIR
) -> Any:
    """Return the fiber at --q, or the generic and special fibers without it."""
    ideal = _monomial(options, ideal)
    if options[CONF_Q] is not None:
        return mono_fiber(ideal, options[CONF_Q])
    return MonomialReport(
        ideal, generic_part(ideal), unit_part(ideal), special_primes(ideal)
    )


@register_command(COMMAND_MONO_DIAGRAM)
@get_ideal(MonomialIdealOverPIR)
def command_mono_diagram(
    session: Session, options: dict[str, Any], ideal: MonomialIdealOverPIR
) -> DiagramReport:
    """Return the coefficient diagram."""
    ideal = _monomial(options, ideal)
    return DiagramReport(
        ideal, mono_diagram(ideal, _window(options, len(ideal.variables)))
    )


def execute_command(session: Session, options: dict[str, Any]) -> CommandReport:
    """Validate options and run the command on the session."""
    options = COMMAND_SCHEMA(options)
    command = options[CONF_COMMAND]
    _LOGGER.debug("Running %s on ideal %s", command, options[CONF_IDEAL])
    payload = COMMAND_HANDLERS[command](session, options)
    return CommandReport(command, options[CONF_IDEAL], payload)
