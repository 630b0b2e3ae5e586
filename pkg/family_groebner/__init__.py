"""Groebner bases over k[a]/J0: coefficient ideals, loci and monomial ideals over Z."""

from __future__ import annotations

from .commands import CommandReport, execute_command
from .families import FamilyIdeal, FamilyRing
from .render import render
from .session import Session, parse_session

__all__ = [
    "CommandReport",
    "FamilyIdeal",
    "FamilyRing",
    "Session",
    "execute_command",
    "parse_session",
    "render",
]
