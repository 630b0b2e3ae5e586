"""
Session files: ring, base relations, orders, named ideals, points and primes.

Example:

    ring Q[a,b][x];
    base (a*b);
    ideal I = (a*x + 1);
    point P: a=0, b=3;
    prime p = (a);
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import logging
from typing import Any

from lark import Lark, Token, Transformer, Tree, v_args
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
    VisitError,
)

from .const import DEFAULT_ORDER, ORDER_ALIASES, PRIMITIVE_ORDERS
from .domains import IntegerRing
from .exceptions import (
    CoefficientError,
    ExponentOverflowError,
    FamilyGroebnerError,
    PointViolatesBaseError,
    PreconditionError,
    SessionParseError,
    UnknownVariableError,
)
from .families import FamilyIdeal, FamilyRing, PrimeSpec, RationalPoint
from .helpers import create_domain
from .monomial import MonomialIdealOverPIR
from .polynomial import Polynomial, PolyRing

_LOGGER = logging.getLogger(__name__)

GRAMMAR = r"""
    start: _statement*
    _statement: ring_stmt | base_stmt | order_stmt | ideal_stmt | point_stmt | prime_stmt

    ring_stmt: "ring" field "[" [names] "]" "[" [names] "]" ";"
    field: FIELD ["(" INT ")"]
    names: NAME ("," NAME)*

    base_stmt: "base" ideal_body ";"
    order_stmt: "order" order_block ("," order_block)* ";"
    order_block: NAME "(" names ")"
    ideal_stmt: "ideal" NAME "=" ideal_body ";"
    point_stmt: "point" NAME ":" assignments ";"
    prime_stmt: "prime" NAME "=" ideal_body ";"

    ideal_body: "(" [poly ("," poly)*] ")"
    assignments: assignment ("," assignment)*
    assignment: NAME "=" VALUE

    ?poly: term
         | poly "+" term -> add
         | poly "-" term -> sub
    ?term: factor
         | term "*" factor -> mul
    ?factor: power
           | "-" factor -> neg
    ?power: atom
          | atom "^" INT -> pow
    ?atom: INT -> integer
         | RATIONAL -> rational
         | NAME -> var
         | "(" poly ")"

    poly_text: poly
    ideal_text: ideal_body
    point_text: assignments

    FIELD: /Zmod|Fp|Q|Z/
    RATIONAL.2: /\d+\/\d+/
    VALUE: /-?\d+(\/\d+)?/
    %import common.CNAME -> NAME
    %import common.INT
    %import common.WS
    %import common.SH_COMMENT
    %ignore WS
    %ignore SH_COMMENT
"""

_PARSER = Lark(
    GRAMMAR,
    parser="lalr",
    start=["start", "poly_text", "ideal_text", "point_text"],
    propagate_positions=True,
)


def _position(item: Tree | Token | None) -> tuple[int | None, int | None]:
    """Return (line, column) of a tree or token."""
    if isinstance(item, Token):
        return item.line, item.column
    if isinstance(item, Tree) and not item.meta.empty:
        return item.meta.line, item.meta.column
    return None, None


def _parse(text: str, start: str) -> Tree:
    """Parse text from a start symbol, mapping lark errors to SessionParseError."""
    try:
        return _PARSER.parse(text, start=start)
    except UnexpectedEOF as err:
        raise SessionParseError("Unexpected end of input") from err
    except UnexpectedCharacters as err:
        raise SessionParseError(
            f"Unexpected character {text[err.pos_in_stream]!r}", err.line, err.column
        ) from err
    except UnexpectedToken as err:
        raise SessionParseError(
            f"Unexpected token {str(err.token)!r}", err.line, err.column
        ) from err
    except UnexpectedInput as err:
        raise SessionParseError(str(err), err.line, err.column) from err


@v_args(inline=True)
class PolynomialBuilder(Transformer):
    """Build polynomials of a ring from parse trees."""

    def __init__(self, ring: PolyRing):
        """Initialize the builder."""
        super().__init__()
        self.ring = ring

    def integer(self, token: Token) -> Polynomial:
        """Return integer constant."""
        return self._constant(token, int(token))

    def rational(self, token: Token) -> Polynomial:
        """Return rational constant."""
        return self._constant(token, _fraction(token))

    def _constant(self, token: Token, value: int | Fraction) -> Polynomial:
        """Return constant, reporting literals outside the coefficient domain."""
        try:
            return self.ring.constant(value)
        except (CoefficientError, ZeroDivisionError) as err:
            raise SessionParseError(
                f"{token} is not an element of {self.ring.domain}",
                token.line,
                token.column,
            ) from err

    def var(self, token: Token) -> Polynomial:
        """Return a variable of the ring."""
        if not self.ring.has_variable(str(token)):
            raise UnknownVariableError(
                f"Unknown variable {token} in {self.ring}", token.line, token.column
            )
        return self.ring.gen(str(token))

    def add(self, left: Polynomial, right: Polynomial) -> Polynomial:
        """Return left + right."""
        return left + right

    def sub(self, left: Polynomial, right: Polynomial) -> Polynomial:
        """Return left - right."""
        return left - right

    def mul(self, left: Polynomial, right: Polynomial) -> Polynomial:
        """Return left * right."""
        return left * right

    def neg(self, value: Polynomial) -> Polynomial:
        """Return -value."""
        return -value

    def pow(self, base: Polynomial, exponent: Token) -> Polynomial:
        """Return base ** exponent."""
        try:
            return base ** int(exponent)
        except ExponentOverflowError as err:
            raise SessionParseError(str(err), exponent.line, exponent.column) from err

    def build(self, tree: Tree) -> Polynomial:
        """Return polynomial of a parse tree."""
        try:
            return self.transform(tree)
        except VisitError as err:
            if isinstance(err.orig_exc, FamilyGroebnerError):
                raise err.orig_exc from None
            raise


def _ideal_polynomials(ring: PolyRing, body: Tree) -> tuple[Polynomial, ...]:
    """Return polynomials listed in an ideal body."""
    builder = PolynomialBuilder(ring)
    return tuple(builder.build(child) for child in body.children if child is not None)


def _fraction(token: Token) -> Fraction:
    """Return rational literal of token."""
    try:
        return Fraction(str(token))
    except ZeroDivisionError as err:
        raise SessionParseError(
            f"Zero denominator in {token}", token.line, token.column
        ) from err


def _assignments(tree: Tree) -> list[tuple[Token, Fraction]]:
    """Return (name token, value) pairs of an assignment list."""
    return [
        (assignment.children[0], _fraction(assignment.children[1]))
        for assignment in tree.children
    ]


def _names(tree: Tree | None) -> tuple[str, ...]:
    """Return names of an optional name list."""
    return () if tree is None else tuple(str(token) for token in tree.children)


@dataclass
class Session:
    """Parsed session: a family or a monomial-ideal ring plus named objects."""

    family: FamilyRing | None = None
    monomial_ring: PolyRing | None = None
    ideals: dict[str, FamilyIdeal | MonomialIdealOverPIR] = field(default_factory=dict)
    points: dict[str, RationalPoint] = field(default_factory=dict)
    primes: dict[str, tuple[Polynomial, ...]] = field(default_factory=dict)

    @property
    def is_monomial(self) -> bool:
        """Return whether the session declares a ring over Z or Z/n."""
        return self.monomial_ring is not None

    def ideal(self, name: str) -> FamilyIdeal | MonomialIdealOverPIR:
        """Return ideal called name."""
        try:
            return self.ideals[name]
        except KeyError:
            raise PreconditionError(f"Unknown ideal {name}") from None

    def point(self, name: str) -> RationalPoint:
        """Return point called name."""
        try:
            return self.points[name]
        except KeyError:
            raise PreconditionError(f"Unknown point {name}") from None

    def prime(self, name: str) -> PrimeSpec:
        """Return prime called name, checking that it contains the base relations."""
        if self.family is None:
            raise PreconditionError("Primes need a family session")
        try:
            return PrimeSpec(self.family, self.primes[name])
        except KeyError:
            raise PreconditionError(f"Unknown prime {name}") from None

    def parse_polynomial(self, text: str, parameters_only: bool = False) -> Polynomial:
        """Parse a polynomial of k[a, x], or of k[a] when parameters_only."""
        ring = self._ring(parameters_only)
        tree = _parse(text, "poly_text")
        return PolynomialBuilder(ring).build(tree.children[0])

    def parse_prime(self, text: str) -> PrimeSpec:
        """Parse `(g1, g2, ...)` as a prime of k[a]."""
        if self.family is None:
            raise PreconditionError("Primes need a family session")
        tree = _parse(text.strip(), "ideal_text")
        return PrimeSpec(
            self.family, _ideal_polynomials(self.family.param_ring, tree.children[0])
        )

    def parse_point(self, text: str) -> RationalPoint:
        """Parse `a=1, b=-1/2` as a rational point of the base."""
        if self.family is None:
            raise PreconditionError("Points need a family session")
        tree = _parse(text, "point_text")
        return _build_point(self.family, "--point", tree.children[0])

    def _ring(self, parameters_only: bool) -> PolyRing:
        """Return ring polynomials of the session are parsed in."""
        if self.monomial_ring is not None:
            return self.monomial_ring
        assert self.family is not None
        return self.family.param_ring if parameters_only else self.family.ring


def _build_point(family: FamilyRing, name: str, tree: Tree) -> RationalPoint:
    """Return point from an assignment list, validated against the base."""
    values: dict[str, Fraction] = {}
    for token, value in _assignments(tree):
        if str(token) not in family.parameters:
            raise UnknownVariableError(
                f"Unknown parameter {token} in point {name}", token.line, token.column
            )
        values[str(token)] = value
    line, column = _position(tree)
    if missing := [p for p in family.parameters if p not in values]:
        raise SessionParseError(
            f"Point {name} does not assign {', '.join(missing)}", line, column
        )
    try:
        point = RationalPoint(family, values)
        violated = point.violated_relations()
    except CoefficientError as err:
        raise SessionParseError(f"Point {name}: {err}", line, column) from err
    if violated:
        raise PointViolatesBaseError(
            f"Point {name} violates base relations {', '.join(map(str, violated))}",
            line,
            column,
        )
    return point


class _SessionReader:
    """Resolve the statements of a parse tree into a Session."""

    def __init__(self, tree: Tree):
        """Initialize the reader."""
        self.statements: list[Tree] = list(tree.children)
        self.session = Session()

    def _only(self, kind: str) -> Tree | None:
        """Return the single statement of a kind, if any."""
        found = [s for s in self.statements if s.data == kind]
        if len(found) > 1:
            raise SessionParseError(
                f"Duplicate {kind.removesuffix('_stmt')} declaration",
                *_position(found[1]),
            )
        return found[0] if found else None

    def read(self) -> Session:
        """Return the resolved session."""
        ring = self._only("ring_stmt")
        if ring is None:
            raise SessionParseError("Missing ring declaration", 1, 1)
        field_tree, parameter_tree, variable_tree = ring.children
        field_token, argument = field_tree.children
        try:
            domain = create_domain(
                str(field_token), None if argument is None else int(argument)
            )
        except (CoefficientError, KeyError) as err:
            raise SessionParseError(str(err), *_position(field_token)) from err
        parameters, variables = _names(parameter_tree), _names(variable_tree)
        if len(set(parameters + variables)) != len(parameters + variables):
            raise SessionParseError("Duplicate variable names", *_position(ring))

        if isinstance(domain, IntegerRing):
            if parameters:
                raise SessionParseError(
                    f"Parameters need a coefficient field, not {domain}",
                    *_position(ring),
                )
            self.session.monomial_ring = PolyRing.create(domain, variables)
        else:
            self.session.family = self._family(domain, parameters, variables)

        for statement in self.statements:
            handler = getattr(self, f"_read_{statement.data}", None)
            if handler is not None:
                handler(statement)
        _LOGGER.debug(
            "Parsed session with %s ideals, %s points, %s primes",
            len(self.session.ideals),
            len(self.session.points),
            len(self.session.primes),
        )
        return self.session

    def _family(
        self, domain: Any, parameters: tuple[str, ...], variables: tuple[str, ...]
    ) -> FamilyRing:
        """Return the family ring, applying order and base statements."""
        variable_order = parameter_order = DEFAULT_ORDER
        if (order := self._only("order_stmt")) is not None:
            seen_variables = seen_parameters = False
            for block in order.children:
                name, names_tree = block.children
                names = _names(names_tree)
                primitive = ORDER_ALIASES.get(str(name), str(name))
                if primitive not in PRIMITIVE_ORDERS:
                    raise SessionParseError(
                        f"Unknown monomial order {name}", *_position(name)
                    )
                if set(names) == set(variables) and not seen_variables:
                    variables, variable_order = names, primitive
                    seen_variables = True
                elif set(names) == set(parameters) and not seen_parameters:
                    parameters, parameter_order = names, primitive
                    seen_parameters = True
                else:
                    raise SessionParseError(
                        f"Order block {name}({', '.join(names)}) must list exactly "
                        "the variables or exactly the parameters",
                        *_position(block),
                    )
        family = FamilyRing(
            domain, parameters, variables, variable_order, parameter_order
        )
        relations: list[Polynomial] = []
        for statement in self.statements:
            if statement.data == "base_stmt":
                relations.extend(
                    _ideal_polynomials(family.param_ring, statement.children[0])
                )
        return family.with_base(relations) if relations else family

    def _claim(self, token: Token, table: dict[str, Any]) -> str:
        """Return name, raising if it is already used."""
        name = str(token)
        if name in table:
            raise SessionParseError(f"Duplicate name {name}", token.line, token.column)
        return name

    def _read_ideal_stmt(self, statement: Tree) -> None:
        """Record a named ideal."""
        token, body = statement.children
        name = self._claim(token, self.session.ideals)
        session = self.session
        if session.monomial_ring is not None:
            session.ideals[name] = self._monomial_ideal(session.monomial_ring, body)
        else:
            assert session.family is not None
            session.ideals[name] = FamilyIdeal(
                session.family, _ideal_polynomials(session.family.ring, body)
            )

    def _monomial_ideal(self, ring: PolyRing, body: Tree) -> MonomialIdealOverPIR:
        """Return monomial ideal from single-term generators."""
        terms = []
        for child, polynomial in zip(
            (c for c in body.children if c is not None), _ideal_polynomials(ring, body)
        ):
            if len(polynomial) > 1:
                raise SessionParseError(
                    f"Generator {polynomial} is not a single term", *_position(child)
                )
            terms.extend((c, e) for e, c in polynomial.terms)
        return MonomialIdealOverPIR.create(ring.domain, ring.variables, terms)

    def _read_base_stmt(self, statement: Tree) -> None:
        """Reject base relations outside a family session."""
        if self.session.family is None:
            raise SessionParseError(
                "Base relations need a family session", *_position(statement)
            )

    def _read_point_stmt(self, statement: Tree) -> None:
        """Record a named point."""
        token, assignments = statement.children
        name = self._claim(token, self.session.points)
        if self.session.family is None:
            raise SessionParseError(
                "Points need a family session", token.line, token.column
            )
        self.session.points[name] = _build_point(self.session.family, name, assignments)

    def _read_prime_stmt(self, statement: Tree) -> None:
        """Record a named prime."""
        token, body = statement.children
        name = self._claim(token, self.session.primes)
        if self.session.family is None:
            raise SessionParseError(
                "Primes need a family session", token.line, token.column
            )
        self.session.primes[name] = _ideal_polynomials(
            self.session.family.param_ring, body
        )


def parse_session(text: str) -> Session:
    """Parse and resolve a session file."""
    return _SessionReader(_parse(text, "start")).read()


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse a polynomial of ring in canonical text form."""
    tree = _parse(text, "poly_text")
    return PolynomialBuilder(ring).build(tree.children[0])


def parse_generators(ring: PolyRing, text: str) -> tuple[Polynomial, ...]:
    """Parse `(g1, g2, ...)` as polynomials of ring."""
    tree = _parse(text.strip(), "ideal_text")
    return _ideal_polynomials(ring, tree.children[0])
