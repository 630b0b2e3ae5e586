"""Exponents, block monomial orders, polynomial rings and polynomials."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
import enum
from fractions import Fraction
import functools
from itertools import chain
import logging
from typing import Any

from .const import (
    MAX_EXPONENT,
    ORDER_ALIASES,
    ORDER_GREVLEX,
    ORDER_GRLEX,
    ORDER_LEX,
    PRIMITIVE_ORDERS,
)
from .domains import BaseDomain
from .exceptions import (
    ExactDivisionError,
    ExponentOverflowError,
    MissingAssignmentError,
    RingMismatchError,
    StructuralError,
    ZeroPolynomialError,
)

_LOGGER = logging.getLogger(__name__)

Exponent = tuple[int, ...]


def exponent_divides(small: Exponent, large: Exponent) -> bool:
    """Return whether small <= large componentwise, i.e. x^small divides x^large."""
    return all(s <= b for s, b in zip(small, large))


def exponent_add(left: Exponent, right: Exponent) -> Exponent:
    """Return exponent of the product of two monomials."""
    return tuple(a + b for a, b in zip(left, right))


def exponent_sub(left: Exponent, right: Exponent) -> Exponent:
    """Return exponent of x^left / x^right; right must divide left."""
    return tuple(a - b for a, b in zip(left, right))


def exponent_lcm(left: Exponent, right: Exponent) -> Exponent:
    """Return exponent of the lcm of two monomials."""
    return tuple(max(a, b) for a, b in zip(left, right))


def exponents_coprime(left: Exponent, right: Exponent) -> bool:
    """Return whether two monomials share no variable."""
    return not any(a and b for a, b in zip(left, right))


def minimal_exponents(exponents: Iterable[Exponent]) -> tuple[Exponent, ...]:
    """Return the divisibility-minimal elements, sorted."""
    unique = sorted(set(exponents), key=lambda e: (sum(e), e))
    minimal: list[Exponent] = []
    for exponent in unique:
        if not any(exponent_divides(kept, exponent) for kept in minimal):
            minimal.append(exponent)
    return tuple(sorted(minimal))


def monomial_str(variables: Sequence[str], exponent: Exponent) -> str:
    """Return text for x^exponent, e.g. `x^2*y`, or `1`."""
    factors = [
        name if power == 1 else f"{name}^{power}"
        for name, power in zip(variables, exponent)
        if power
    ]
    return "*".join(factors) or "1"


def monomial_ideal_str(variables: Sequence[str], exponents: Iterable[Exponent]) -> str:
    """Return text of the monomial ideal generated by exponents, e.g. `(x, y^2)`."""
    monomials = [
        monomial_str(variables, e) for e in sorted(set(exponents), reverse=True)
    ]
    return f"({', '.join(monomials)})" if monomials else "(0)"


class Ordering(enum.IntEnum):
    """Result of comparing two monomials."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class OrderBlock:
    """A block of variable indices compared with one primitive order."""

    indices: tuple[int, ...]
    order: str = ORDER_LEX

    def __post_init__(self) -> None:
        """Post initialization."""
        order = ORDER_ALIASES.get(self.order, self.order)
        if order not in PRIMITIVE_ORDERS:
            raise StructuralError(f"Unknown monomial order {self.order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "indices", tuple(self.indices))

    def key(self, exponent: Exponent) -> tuple[int, ...]:
        """Return sort key of exponent restricted to this block."""
        values = [exponent[i] for i in self.indices]
        if self.order == ORDER_LEX:
            return tuple(values)
        if self.order == ORDER_GRLEX:
            return (sum(values), *values)
        # grevlex: among equal degrees the larger last exponent loses
        return (sum(values), *(-v for v in reversed(values)))


@dataclass(frozen=True)
class OrderSpec:
    """
    Block (product) monomial order.

    Blocks are compared in sequence and earlier blocks dominate; within a block
    the primitive order decides. Every such order is total, multiplicative and
    has x_i > 1.
    """

    blocks: tuple[OrderBlock, ...]
    nvars: int

    def __post_init__(self) -> None:
        """Post initialization."""
        object.__setattr__(self, "blocks", tuple(self.blocks))
        indices = sorted(i for block in self.blocks for i in block.indices)
        if indices != list(range(self.nvars)):
            raise StructuralError(
                f"Order blocks {[b.indices for b in self.blocks]} do not partition "
                f"{self.nvars} variables"
            )
        if any(not block.indices for block in self.blocks):
            raise StructuralError("Order blocks must be nonempty")

    @classmethod
    def single(cls, nvars: int, order: str = ORDER_LEX) -> OrderSpec:
        """Return order using one primitive order on all variables."""
        if not nvars:
            return cls((), 0)
        return cls((OrderBlock(tuple(range(nvars)), order),), nvars)

    @classmethod
    def from_blocks(
        cls, blocks: Iterable[tuple[Iterable[int], str]], nvars: int
    ) -> OrderSpec:
        """Return block order from (indices, primitive order) pairs."""
        return cls(
            tuple(
                OrderBlock(tuple(indices), order)
                for indices, order in blocks
                if tuple(indices)
            ),
            nvars,
        )

    @functools.lru_cache(maxsize=1 << 16)
    def key(self, exponent: Exponent) -> tuple[int, ...]:
        """Return sort key; larger keys are greater monomials."""
        if len(exponent) != self.nvars:
            raise StructuralError(
                f"Exponent {exponent} has {len(exponent)} slots, order expects "
                f"{self.nvars}"
            )
        return tuple(chain.from_iterable(block.key(exponent) for block in self.blocks))

    def compare(self, left: Exponent, right: Exponent) -> Ordering:
        """Compare two monomials."""
        left_key, right_key = self.key(left), self.key(right)
        if left_key == right_key:
            return Ordering.EQUAL
        return Ordering.GREATER if left_key > right_key else Ordering.LESS

    def restrict(self, keep: Sequence[int]) -> OrderSpec:
        """Return the order induced on the variables at positions keep."""
        position = {old: new for new, old in enumerate(keep)}
        return OrderSpec.from_blocks(
            (
                (tuple(position[i] for i in block.indices if i in position), block.order)
                for block in self.blocks
            ),
            len(keep),
        )


def compare_monomials(order: OrderSpec, left: Exponent, right: Exponent) -> Ordering:
    """Compare two monomials under order."""
    if len(left) != len(right):
        raise StructuralError(f"Cannot compare {left} with {right}")
    return order.compare(left, right)


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring over a coefficient domain with interned variable names."""

    domain: BaseDomain
    variables: tuple[str, ...]
    order: OrderSpec

    def __post_init__(self) -> None:
        """Post initialization."""
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise StructuralError(f"Duplicate variable names in {self.variables}")
        if self.order.nvars != len(self.variables):
            raise StructuralError(
                f"Order covers {self.order.nvars} variables, ring has "
                f"{len(self.variables)}"
            )

    @classmethod
    def create(
        cls, domain: BaseDomain, variables: Iterable[str], order: str = ORDER_LEX
    ) -> PolyRing:
        """Create ring with a single primitive order."""
        variables = tuple(variables)
        return cls(domain, variables, OrderSpec.single(len(variables), order))

    def __str__(self) -> str:
        """Return string representation of self."""
        return f"{self.domain}[{', '.join(self.variables)}]"

    @functools.cached_property
    def _positions(self) -> dict[str, int]:
        """Return map of variable name to index."""
        return {name: i for i, name in enumerate(self.variables)}

    @property
    def ngens(self) -> int:
        """Return number of variables."""
        return len(self.variables)

    def index(self, name: str) -> int:
        """Return index of a variable."""
        try:
            return self._positions[name]
        except KeyError:
            raise StructuralError(f"Unknown variable {name} in {self}") from None

    def has_variable(self, name: str) -> bool:
        """Return whether name is a variable of self."""
        return name in self._positions

    @property
    def zero_exponent(self) -> Exponent:
        """Return the exponent of 1."""
        return (0,) * self.ngens

    def zero(self) -> Polynomial:
        """Return the zero polynomial."""
        return Polynomial(self, ())

    def one(self) -> Polynomial:
        """Return the constant 1."""
        return self.constant(1)

    def constant(self, value: Any) -> Polynomial:
        """Return constant polynomial for an int, Fraction or domain element."""
        return self.monomial(self.zero_exponent, value)

    def gen(self, name: str) -> Polynomial:
        """Return the variable called name."""
        exponent = [0] * self.ngens
        exponent[self.index(name)] = 1
        return self.monomial(tuple(exponent))

    def gens(self) -> tuple[Polynomial, ...]:
        """Return all variables."""
        return tuple(self.gen(name) for name in self.variables)

    def monomial(self, exponent: Iterable[int], coefficient: Any = 1) -> Polynomial:
        """Return coefficient * x^exponent."""
        exponent = tuple(exponent)
        if len(exponent) != self.ngens:
            raise StructuralError(
                f"Exponent {exponent} does not fit {self.ngens} variables"
            )
        if any(e < 0 for e in exponent):
            raise StructuralError(f"Negative exponent {exponent}")
        if any(e > MAX_EXPONENT for e in exponent):
            raise ExponentOverflowError(f"Exponent {exponent} exceeds {MAX_EXPONENT}")
        if isinstance(coefficient, (int, Fraction)):
            coefficient = self.domain.convert(coefficient)
        return self.from_dict({exponent: coefficient})

    def from_dict(self, terms: Mapping[Exponent, Any]) -> Polynomial:
        """Return polynomial from {exponent: coefficient}, dropping zero terms."""
        is_zero = self.domain.is_zero
        key = self.order.key
        return Polynomial(
            self,
            tuple(
                sorted(
                    ((e, c) for e, c in terms.items() if not is_zero(c)),
                    key=lambda term: key(term[0]),
                    reverse=True,
                )
            ),
        )

    def from_terms(self, terms: Iterable[tuple[Exponent, Any]]) -> Polynomial:
        """Return polynomial summing possibly repeated (exponent, coefficient)."""
        add = self.domain.add
        accumulated: dict[Exponent, Any] = {}
        for exponent, coefficient in terms:
            if exponent in accumulated:
                accumulated[exponent] = add(accumulated[exponent], coefficient)
            else:
                accumulated[exponent] = coefficient
        return self.from_dict(accumulated)

    def with_order(self, order: OrderSpec) -> PolyRing:
        """Return same ring under another order."""
        return PolyRing(self.domain, self.variables, order)

    def extend(self, names: Sequence[str], order: str = ORDER_LEX) -> PolyRing:
        """Return ring with new variables in a new dominant block."""
        shift = len(names)
        blocks = [(tuple(range(shift)), order)] + [
            (tuple(i + shift for i in block.indices), block.order)
            for block in self.order.blocks
        ]
        return PolyRing(
            self.domain,
            tuple(names) + self.variables,
            OrderSpec.from_blocks(blocks, shift + self.ngens),
        )

    def restrict(self, names: Iterable[str]) -> PolyRing:
        """Return subring on names (kept in ring order) with the induced order."""
        wanted = set(names)
        for name in wanted:
            self.index(name)
        keep = [i for i, name in enumerate(self.variables) if name in wanted]
        return PolyRing(
            self.domain,
            tuple(self.variables[i] for i in keep),
            self.order.restrict(keep),
        )

    def elimination_ring(self, drop: Iterable[str]) -> PolyRing:
        """Return same ring with drop moved into a fresh dominant grevlex block."""
        dropped = {self.index(name) for name in drop}
        blocks = [(tuple(sorted(dropped)), ORDER_GREVLEX)] + [
            (tuple(i for i in block.indices if i not in dropped), block.order)
            for block in self.order.blocks
        ]
        return self.with_order(OrderSpec.from_blocks(blocks, self.ngens))

    def embed(self, f: Polynomial) -> Polynomial:
        """Map f into self by variable names."""
        if f.ring == self:
            return f
        if f.ring.domain != self.domain:
            raise RingMismatchError(f.ring, self)
        mapping = []
        for i, name in enumerate(f.ring.variables):
            if self.has_variable(name):
                mapping.append((i, self.index(name)))
            elif i in f.support():
                raise RingMismatchError(f.ring, self)
        terms = {}
        for exponent, coefficient in f.terms:
            target = [0] * self.ngens
            for source, destination in mapping:
                target[destination] = exponent[source]
            terms[tuple(target)] = coefficient
        return self.from_dict(terms)


class Polynomial:
    """
    Immutable polynomial.

    Terms are (exponent, coefficient) pairs strictly decreasing in the ring
    order, with no zero coefficients; the empty tuple is 0.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: tuple[tuple[Exponent, Any], ...]):
        """Initialize from already normalized terms."""
        self.ring = ring
        self.terms = terms
        self._hash: int | None = None

    def __repr__(self) -> str:
        """Return representation of self."""
        return f"Polynomial({self})"

    def __str__(self) -> str:
        """Return canonical text, e.g. `a*x^2 - 1/2*y`."""
        if not self.terms:
            return "0"
        parts = []
        for position, (exponent, coefficient) in enumerate(self.terms):
            negative, magnitude = self.ring.domain.signed(coefficient)
            monomial = monomial_str(self.ring.variables, exponent)
            if monomial == "1":
                body = magnitude
            elif magnitude == "1":
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if not position:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __eq__(self, other: Any) -> bool:
        """Return whether self is equal to other."""
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        """Return hash of self."""
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __bool__(self) -> bool:
        """Return whether self is nonzero."""
        return bool(self.terms)

    def __len__(self) -> int:
        """Return number of terms."""
        return len(self.terms)

    def _coerce(self, other: Any) -> Polynomial:
        """Return other as a polynomial of the same ring."""
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(self.ring, other.ring)
            return other
        return self.ring.constant(other)

    def __add__(self, other: Any) -> Polynomial:
        """Return self + other."""
        other = self._coerce(other)
        return self.ring.from_terms(chain(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        """Return -self."""
        neg = self.ring.domain.neg
        return Polynomial(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def __sub__(self, other: Any) -> Polynomial:
        """Return self - other."""
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> Polynomial:
        """Return other - self."""
        return self._coerce(other) + (-self)

    def __mul__(self, other: Any) -> Polynomial:
        """Return self * other."""
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        if self.max_component() + other.max_component() > MAX_EXPONENT:
            raise ExponentOverflowError(f"Product of {self} and {other} overflows")
        mul = self.ring.domain.mul
        return self.ring.from_terms(
            (exponent_add(e, f), mul(c, d))
            for e, c in self.terms
            for f, d in other.terms
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        """Return self ** exponent."""
        if exponent < 0:
            raise StructuralError("Negative powers of polynomials are not defined")
        if self.max_component() * exponent > MAX_EXPONENT:
            raise ExponentOverflowError(f"{self} ** {exponent} overflows")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def max_component(self) -> int:
        """Return the largest exponent component of any term."""
        return max((max(e, default=0) for e, _ in self.terms), default=0)

    def degree(self) -> int:
        """Return total degree, -1 for the zero polynomial."""
        return max((sum(e) for e, _ in self.terms), default=-1)

    def support(self) -> set[int]:
        """Return indices of variables that occur."""
        return {i for e, _ in self.terms for i, power in enumerate(e) if power}

    def is_constant(self) -> bool:
        """Return whether self lies in the coefficient domain."""
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def leading_term(self) -> tuple[Any, Exponent]:
        """Return (coefficient, exponent) of the greatest term."""
        if not self.terms:
            raise ZeroPolynomialError("The zero polynomial has no leading term")
        exponent, coefficient = self.terms[0]
        return coefficient, exponent

    @property
    def leading_monomial(self) -> Exponent:
        """Return exponent of the greatest term."""
        return self.leading_term()[1]

    @property
    def leading_coefficient(self) -> Any:
        """Return coefficient of the greatest term."""
        return self.leading_term()[0]

    def coefficient(self, exponent: Exponent) -> Any:
        """Return coefficient of x^exponent."""
        for e, c in self.terms:
            if e == exponent:
                return c
        return self.ring.domain.zero

    def mul_term(self, coefficient: Any, exponent: Exponent) -> Polynomial:
        """Return coefficient * x^exponent * self; order is preserved by shifting."""
        domain = self.ring.domain
        if domain.is_zero(coefficient):
            return self.ring.zero()
        mul, is_zero = domain.mul, domain.is_zero
        return Polynomial(
            self.ring,
            tuple(
                (exponent_add(e, exponent), product)
                for e, c in self.terms
                if not is_zero(product := mul(c, coefficient))
            ),
        )

    def monic(self) -> Polynomial:
        """Return self divided by its leading coefficient."""
        if not self.terms:
            return self
        return self.mul_term(
            self.ring.domain.inv(self.leading_coefficient), self.ring.zero_exponent
        )

    def exact_quotient(self, divisor: Polynomial) -> Polynomial:
        """Return q with self == q * divisor, raising if divisor does not divide."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroPolynomialError("Division by the zero polynomial")
        domain = self.ring.domain
        divisor_coefficient, divisor_exponent = divisor.leading_term()
        quotient: list[tuple[Exponent, Any]] = []
        remainder = self
        while remainder:
            coefficient, exponent = remainder.leading_term()
            if not exponent_divides(divisor_exponent, exponent):
                raise ExactDivisionError(self, divisor)
            shift = exponent_sub(exponent, divisor_exponent)
            factor = domain.div(coefficient, divisor_coefficient)
            quotient.append((shift, factor))
            remainder = remainder - divisor.mul_term(factor, shift)
        return self.ring.from_terms(quotient)

    def substitute(
        self, assignment: Mapping[str, Any], target: PolyRing | None = None
    ) -> Polynomial:
        """
        Replace variables by values and return the result in target.

        target defaults to the subring of unassigned variables. Every variable
        of self that target lacks must be assigned.
        """
        domain = self.ring.domain
        if target is None:
            target = self.ring.restrict(
                name for name in self.ring.variables if name not in assignment
            )
        missing = [
            name
            for name in self.ring.variables
            if name not in assignment and not target.has_variable(name)
        ]
        if missing:
            raise MissingAssignmentError(missing)
        values = {
            self.ring.index(name): domain.convert(value)
            if isinstance(value, (int, Fraction))
            else value
            for name, value in assignment.items()
            if self.ring.has_variable(name)
        }
        kept = [
            (i, target.index(name))
            for i, name in enumerate(self.ring.variables)
            if i not in values
        ]
        terms = []
        for exponent, coefficient in self.terms:
            for i, value in values.items():
                if exponent[i]:
                    coefficient = domain.mul(coefficient, domain.power(value, exponent[i]))
            reduced = [0] * target.ngens
            for source, destination in kept:
                reduced[destination] = exponent[source]
            terms.append((tuple(reduced), coefficient))
        return target.from_terms(terms)

    def evaluate(self, assignment: Mapping[str, Any]) -> Any:
        """Return the value of self when every variable is assigned."""
        constant = self.substitute(assignment, self.ring.restrict(()))
        return constant.coefficient(())


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return f + g."""
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return f * g."""
    return f * g


def leading_term(f: Polynomial, order: OrderSpec | None = None) -> tuple[Any, Exponent]:
    """Return (coefficient, exponent) of the greatest term of f under order."""
    if order is not None and order != f.ring.order:
        f = f.ring.with_order(order).from_dict(dict(f.terms))
    return f.leading_term()


def substitute_point(
    f: Polynomial,
    assignment: Mapping[str, Any],
    target: PolyRing | None = None,
    parameters: Iterable[str] | None = None,
) -> Polynomial:
    """
    Substitute values for variables of f; see Polynomial.substitute.

    With parameters given, each of them that the ring of f has must be
    assigned, and target defaults to the ring of the other variables.
    """
    if parameters is not None:
        names = set(parameters)
        missing = [
            name for name in f.ring.variables if name in names and name not in assignment
        ]
        if missing:
            raise MissingAssignmentError(missing)
        if target is None:
            target = f.ring.restrict(
                name for name in f.ring.variables if name not in names
            )
    return f.substitute(assignment, target)
