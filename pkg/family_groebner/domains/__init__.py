"""
Coefficient domains module.

There should be one file per domain, named after the domain.
"""

from __future__ import annotations

from ..const import FIELD_PRIME, FIELD_RATIONAL, RING_INTEGER, RING_INTEGER_MOD
from ._base import BaseDomain
from .integers import IntegerModRing, IntegerRing
from .prime_field import PrimeField
from .rational import RationalField

DOMAIN_CLASS_MAP: dict[str, type[BaseDomain]] = {
    FIELD_RATIONAL: RationalField,
    FIELD_PRIME: PrimeField,
    RING_INTEGER: IntegerRing,
    RING_INTEGER_MOD: IntegerModRing,
}
