"""Text and JSON rendering of command reports."""

from __future__ import annotations

from functools import singledispatch
import itertools
import json
from typing import Any

from .commands import (
    BasisReport,
    CommandReport,
    ContractionReport,
    DiagramReport,
    InitialReport,
    MonomialReport,
    SaturationReport,
)
from .const import FORMAT_JSON
from .families import (
    LOCUS_FLAT,
    CoefficientTable,
    GoodPointVerdict,
    LocusReport,
    ModuleGenerators,
    QuotientExtensionReport,
    SpecializationReport,
)
from .helpers import format_grid, staircase_rows
from .ideals import IdealHandle
from .monomial import MonomialFiber, MonomialTable, mono_fiber
from .polynomial import monomial_ideal_str, monomial_str


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def _mod_base(ideal: IdealHandle) -> str:
    """Return ideal text, marked when read modulo base relations."""
    return f"{ideal} mod base" if ideal.base else str(ideal)


def render(report: CommandReport | None, output_format: str) -> str:
    """Return report as text or JSON; an empty report renders as nothing."""
    if output_format == FORMAT_JSON:
        data: dict[str, Any] = {} if report is None else report.as_dict()
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
    if report is None:
        return ""
    return render_text(report.payload)


@singledispatch
def render_text(payload: Any) -> str:
    """Return human readable text of a payload."""
    raise TypeError(f"No text rendering for {type(payload).__name__}")


@render_text.register
def _(payload: BasisReport) -> str:
    lines = [f"ring: {payload.ring}", f"order: {payload.order}", "basis:"]
    lines.extend(f"  {g}" for g in payload.basis)
    if not len(payload.basis):
        lines.append("  0")
    return "\n".join(lines)


@render_text.register
def _(payload: InitialReport) -> str:
    initial = payload.initial
    lines = [f"in(I) = {initial}"]
    lines.extend(
        f"  {initial.family.x_monomial(e)}: {c}" for e, c in initial.entries
    )
    return "\n".join(lines)


@render_text.register
def _(payload: CoefficientTable) -> str:
    if 1 <= len(payload.bounds) <= 2:
        return format_grid(
            staircase_rows(
                payload.bounds,
                lambda e: str(payload.lookup(e)),
                lambda e: payload.lookup(e).is_unit(),
            )
        )
    window = set(itertools.product(*(range(b) for b in payload.bounds)))
    return "\n".join(
        f"{payload.family.x_monomial(e)}: {ideal}"
        for e, ideal in payload.entries
        if e in window
    )


@render_text.register
def _(payload: ContractionReport) -> str:
    return f"I ∩ A = {_mod_base(payload.contraction)}"


@render_text.register
def _(payload: LocusReport) -> str:
    lines = [f"{payload.kind} locus"]
    if payload.kind == LOCUS_FLAT:
        lines.append(f"T = {{{', '.join(c.label for c in payload.components)}}}")
    lines.extend(f"  {c.label}: {c.ideal}" for c in payload.components)
    lines.append(f"S = {_mod_base(payload.combined)}")
    lines.append(f"I ∩ A = {_mod_base(payload.contraction)}")
    if payload.witness is not None:
        lines.append(f"witness: {payload.witness}")
    lines.append(f"everywhere: {_yes_no(payload.everywhere)}")
    if payload.generic is not None:
        lines.append(f"generic: {_yes_no(payload.generic)}")
    lines.extend(f"note: {note}" for note in payload.notes)
    return "\n".join(lines)


@render_text.register
def _(payload: GoodPointVerdict) -> str:
    lines = [f"p = {payload.prime}"]
    lines.extend(f"  {label}: {verdict}" for label, verdict in payload.verdicts)
    lines.append(f"good: {_yes_no(payload.good)}")
    lines.extend(f"note: {note}" for note in payload.notes)
    return "\n".join(lines)


@render_text.register
def _(payload: SpecializationReport) -> str:
    variables = payload.point.family.variables
    verdict = "EQUAL" if payload.equal else "NOT EQUAL"
    return (
        f"at {payload.point}: predicted {monomial_ideal_str(variables, payload.predicted)}, "
        f"actual {monomial_ideal_str(variables, payload.actual)}, {verdict}"
    )


@render_text.register
def _(payload: SaturationReport) -> str:
    saturation = payload.saturation
    return "\n".join(
        (
            f"(I : ({payload.element})^inf) = {saturation}",
            f"in = {saturation.relative_initial}",
        )
    )


@render_text.register
def _(payload: QuotientExtensionReport) -> str:
    lines = [
        f"  {label}: {left} vs {right}{'' if equal else ' DIFFER'}"
        for label, left, right, equal in payload.details
    ]
    lines.append("EQUAL" if payload.equal else "NOT EQUAL")
    return "\n".join(lines)


@render_text.register
def _(payload: ModuleGenerators) -> str:
    return "\n".join(
        f"{payload.family.x_monomial(e)}: {ideal}" for e, ideal in payload.entries
    )


@render_text.register
def _(payload: MonomialTable) -> str:
    variables = payload.ideal.variables
    return "\n".join(
        f"{monomial_str(variables, e)}: ({generator})"
        for e, generator in payload.entries
    )


@render_text.register
def _(payload: MonomialFiber) -> str:
    return f"q = {payload.q}: {payload}"


@render_text.register
def _(payload: MonomialReport) -> str:
    variables = payload.ideal.variables
    lines = [
        f"I = {payload.ideal}",
        f"generic: {monomial_ideal_str(variables, payload.generic)}",
        f"unit: {monomial_ideal_str(variables, payload.unit)}",
        f"special primes: {', '.join(map(str, payload.special)) or 'none'}",
    ]
    lines.extend(f"  q = {q}: {mono_fiber(payload.ideal, q)}" for q in payload.special)
    return "\n".join(lines)


@render_text.register
def _(payload: DiagramReport) -> str:
    return payload.diagram
