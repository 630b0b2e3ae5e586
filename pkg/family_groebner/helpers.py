"""Helpers for family_groebner."""

from __future__ import annotations

from collections.abc import Callable, Mapping
import logging
import os
import re

from sympy import isprime
import voluptuous as vol

from .const import (
    DEFAULT_PRIME,
    ENV_DEFAULT_PRIME,
    FIELD_PRIME,
    RING_INTEGER_MOD,
)
from .domains import DOMAIN_CLASS_MAP, BaseDomain
from .exceptions import CoefficientError
from .polynomial import Exponent

_LOGGER = logging.getLogger(__name__)

_WINDOW_RE = re.compile(r"^\s*(\d+)\s*(?:[xX×]\s*(\d+))?\s*$")


def prime_number(value: int) -> int:
    """Validate that value is a prime number."""
    if not isprime(value):
        raise vol.Invalid(f"{value} is not prime")
    return value


PRIME_SCHEMA = vol.Schema(vol.All(vol.Coerce(int), prime_number))


def default_prime(environ: Mapping[str, str] | None = None) -> int:
    """Return characteristic used for `Fp` without an argument."""
    environ = os.environ if environ is None else environ
    if (raw := environ.get(ENV_DEFAULT_PRIME)) is None:
        return DEFAULT_PRIME
    try:
        return PRIME_SCHEMA(raw)
    except vol.Invalid as err:
        raise CoefficientError(f"{ENV_DEFAULT_PRIME}={raw!r}: {err}") from err


def create_domain(name: str, argument: int | None = None) -> BaseDomain:
    """Generate coefficient domain from its session name and optional argument."""
    domain_class = DOMAIN_CLASS_MAP[name]
    if name == FIELD_PRIME:
        domain = domain_class(default_prime() if argument is None else argument)
    elif name == RING_INTEGER_MOD:
        if argument is None:
            raise CoefficientError("Zmod needs a modulus, e.g. Zmod(18)")
        domain = domain_class(argument)
    else:
        if argument is not None:
            raise CoefficientError(f"{name} takes no argument")
        domain = domain_class()
    _LOGGER.debug("Created coefficient domain %s", domain)
    return domain


def parse_window(value: str, nvars: int) -> tuple[int, ...]:
    """
    Return per-variable exclusive bounds for a window.

    `RxC` is R rows (powers of the second variable) by C columns (powers of the
    first); a single number N bounds every variable by N.
    """
    if not (match := _WINDOW_RE.match(str(value))):
        raise ValueError(f"Invalid window {value!r}, expected RxC or N")
    first, second = int(match.group(1)), match.group(2)
    if second is None:
        bounds = (first,) * nvars
    elif nvars == 2:
        bounds = (int(second), first)
    elif nvars == 1:
        bounds = (int(second),)
    else:
        raise ValueError(f"Window {value!r} needs exactly two variables, got {nvars}")
    if any(b < 1 for b in bounds):
        raise ValueError(f"Window {value!r} must be at least 1x1")
    return bounds


def staircase_rows(
    bounds: tuple[int, ...],
    label: Callable[[Exponent], str],
    is_unit: Callable[[Exponent], bool],
) -> list[list[str]]:
    """
    Return rows of a coefficient diagram, highest power of the second variable first.

    Each row stops at its first unit entry; the diagram is read with x to the
    right and y upward.
    """
    if len(bounds) == 1:
        columns, rows = bounds[0], 1
    else:
        columns, rows = bounds
    grid = []
    for j in reversed(range(rows)):
        row = []
        for i in range(columns):
            exponent = (i,) if len(bounds) == 1 else (i, j)
            row.append(label(exponent))
            if is_unit(exponent):
                break
        grid.append(row)
    return grid


def format_grid(rows: list[list[str]]) -> str:
    """Return rows as left-aligned columns."""
    widths: dict[int, int] = {}
    for row in rows:
        for index, cell in enumerate(row):
            widths[index] = max(widths.get(index, 0), len(cell))
    return "\n".join(
        "  ".join(cell.ljust(widths[index]) for index, cell in enumerate(row)).rstrip()
        for row in rows
    )
