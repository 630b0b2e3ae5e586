"""Test command dispatch, rendering and the command line."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import pytest
import voluptuous as vol

from family_groebner.__main__ import main
from family_groebner.commands import COMMAND_HANDLERS, CommandReport, execute_command
from family_groebner.const import (
    COMMANDS,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    FORMAT_JSON,
    FORMAT_TEXT,
)
from family_groebner.exceptions import PreconditionError
from family_groebner.render import render, render_text
from family_groebner.session import Session

from .common import EX1_SESSION, FITEX_STAIRCASE, MONO_Z_DIAGRAM, MONO_Z_SESSION


def _text(session: Session, command: str, **options: Any) -> str:
    """Run command and return its text rendering."""
    report = execute_command(session, {"command": command, **options})
    return render(report, FORMAT_TEXT)


def test_every_command_has_handler():
    """Test that the dispatcher covers all commands."""
    assert set(COMMAND_HANDLERS) == set(COMMANDS)


def test_gb(ex1: Session):
    """Test the basis command."""
    assert _text(ex1, "gb") == "\n".join(
        (
            "ring: Q[a][x, y]",
            "order: lex(x, y), lex(a)",
            "basis:",
            "  a*x - y",
        )
    )


def test_initial_json(fractex: Session):
    """Test JSON output of the initial ideal."""
    report = execute_command(fractex, {"command": "initial"})
    assert isinstance(report, CommandReport)
    data = json.loads(render(report, FORMAT_JSON))
    assert data["command"] == "initial"
    assert data["ideal"] == "I"
    assert data["generators"] == ["a*x", "b"]
    assert data["terms"] == [
        {"exponent": "x", "coefficient": "a"},
        {"exponent": "1", "coefficient": "b"},
    ]
    assert _text(fractex, "initial") == "in(I) = (a*x, b)\n  x: a\n  1: b"


def test_coeffs(fitex: Session, ex1: Session):
    """Test the coefficient staircase."""
    assert _text(fitex, "coeffs", window="4") == FITEX_STAIRCASE
    assert _text(ex1, "coeffs", window="2x2") == "(0)  (a)\n(0)  (a)"
    data = json.loads(
        render(execute_command(ex1, {"command": "coeffs", "window": "1x2"}), FORMAT_JSON)
    )
    assert {"exponent": "x", "generators": ["a"]} in data["entries"]


def test_contract(fractex: Session):
    """Test the contraction command."""
    assert _text(fractex, "contract") == "I ∩ A = (b) mod base"


def test_flat_locus(redex: Session):
    """Test text output of the flat locus."""
    assert _text(redex, "flat-locus") == "\n".join(
        (
            "flat locus",
            "T = {y, x}",
            "  y: (a, b, c)",
            "  x: (a, c, d)",
            "S = (a, c) mod base",
            "I ∩ A = (0) mod base",
            "witness: a",
            "everywhere: no",
        )
    )


def test_good_point(ex1: Session):
    """Test named and inline primes."""
    assert _text(ex1, "good-point", prime="pa") == "p = (a)\n  x: Mixed\ngood: no"
    assert _text(ex1, "good-point", prime="(a - 1)") == "p = (a - 1)\n  x: Unit\ngood: yes"


def test_specialize(ex1: Session):
    """Test named and inline points."""
    assert (
        _text(ex1, "specialize", point="P0")
        == "at a=0: predicted (0), actual (y), NOT EQUAL"
    )
    assert (
        _text(ex1, "specialize", point="a=1")
        == "at a=1: predicted (x), actual (x), EQUAL"
    )


def test_iso_and_finite_locus(isoex: Session, ex3: Session):
    """Test per-variable loci."""
    assert _text(isoex, "iso-locus") == "\n".join(
        (
            "iso locus",
            "  x: (1)",
            "  y: (1)",
            "S = (1)",
            "I ∩ A = (0)",
            "everywhere: yes",
            "generic: yes",
        )
    )
    assert _text(ex3, "finite-locus") == "\n".join(
        (
            "finite locus",
            "  x^inf: (a)",
            "S = (a)",
            "I ∩ A = (0)",
            "witness: a",
            "everywhere: no",
        )
    )


def test_saturate(gtzex: Session):
    """Test saturation by a parameter polynomial."""
    assert _text(gtzex, "saturate", element="a*(a - 1)") == "\n".join(
        ("(I : (a^2 - a)^inf) = (x, b)", "in = (x, b)")
    )


def test_quolem_and_module_gens(fractex: Session, fitex: Session):
    """Test the quotient comparison and module generators."""
    assert _text(fractex, "quolem-check").splitlines()[-1] == "EQUAL"
    assert _text(fitex, "module-gens") == "\n".join(
        ("1: (0)", "y: (0)", "y^2: (0)", "x: (a)", "x*y: (a)", "x^2: (a)")
    )


def test_monomial_commands(mono_z: Session):
    """Test commands on monomial ideals over Z."""
    assert _text(mono_z, "mono-coeffs", window="2") == "\n".join(
        ("1: (0)", "y: (2)", "x: (9)", "x*y: (1)")
    )
    assert _text(mono_z, "mono-fiber", q=5) == "q = 5: (x, y)"
    summary = _text(mono_z, "mono-fiber").splitlines()
    assert summary[0] == "I = (9*x, 2*y, x^2, y^2)"
    assert summary[1] == "generic: (x, y)"
    assert "special primes: 2, 3" in summary
    assert "  q = 2: (x, y^2)" in summary
    assert _text(mono_z, "mono-diagram", window="3") == MONO_Z_DIAGRAM
    assert _text(mono_z, "mono-coeffs", window="2", modulus=6).splitlines()[2] == "x: (3)"
    data = json.loads(
        render(execute_command(mono_z, {"command": "mono-fiber"}), FORMAT_JSON)
    )
    assert data["special_primes"] == [2, 3]
    assert data["monomials"] == {"2": "(x, y^2)", "3": "(x^2, y)"}


@pytest.mark.parametrize(
    "options",
    [
        {"command": "nope"},
        {"command": "specialize"},
        {"command": "good-point", "prime": None},
        {"command": "saturate"},
        {"command": "coeffs", "window": "x3"},
        {"command": "coeffs", "window": "0"},
        {"command": "gb", "format": "xml"},
        {"command": "mono-coeffs", "modulus": 1},
    ],
)
def test_invalid_options(ex1: Session, options: dict[str, Any]):
    """Test option validation."""
    with pytest.raises(vol.Invalid):
        execute_command(ex1, options)


def test_wrong_ideal_kind(ex1: Session, mono_z: Session):
    """Test commands applied to the wrong kind of ideal."""
    with pytest.raises(PreconditionError):
        execute_command(mono_z, {"command": "gb"})
    with pytest.raises(PreconditionError):
        execute_command(ex1, {"command": "mono-fiber"})
    with pytest.raises(PreconditionError):
        execute_command(ex1, {"command": "gb", "ideal": "J"})


def test_render_empty():
    """Test rendering of an absent report."""
    assert render(None, FORMAT_JSON) == "{}"
    assert render(None, FORMAT_TEXT) == ""
    with pytest.raises(TypeError):
        render_text(object())


@pytest.fixture(name="session_file")
def session_file_fixture(tmp_path: Path) -> Path:
    """Return path of a session file for (ax - y)."""
    path = tmp_path / "ex1.fg"
    path.write_text(EX1_SESSION, encoding="utf-8")
    return path


def test_main(session_file: Path, capsys: pytest.CaptureFixture[str]):
    """Test a successful run."""
    assert main(["gb", str(session_file)]) == EXIT_OK
    assert capsys.readouterr().out == "\n".join(
        ("ring: Q[a][x, y]", "order: lex(x, y), lex(a)", "basis:", "  a*x - y", "")
    )
    assert main(["initial", str(session_file), "--format", "json", "-v"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["generators"] == ["a*x"]
    assert main(["specialize", str(session_file), "--point", "a=0"]) == EXIT_OK
    assert "NOT EQUAL" in capsys.readouterr().out


def test_main_exit_codes(session_file: Path, tmp_path: Path):
    """Test exit codes for usage, parse and precondition errors."""
    assert main(["--version"]) == EXIT_OK
    assert main(["bogus", str(session_file)]) == EXIT_USAGE
    assert main(["specialize", str(session_file)]) == EXIT_USAGE
    assert main(["gb", str(tmp_path / "missing.fg")]) == EXIT_USAGE
    broken = tmp_path / "broken.fg"
    broken.write_text("ring Q[a][x];\nideal I = (a*x +);\n", encoding="utf-8")
    assert main(["gb", str(broken)]) == EXIT_PARSE_ERROR
    broken.write_text("ring Q[a][x];\npoint P: a=1/0;\n", encoding="utf-8")
    assert main(["gb", str(broken)]) == EXIT_PARSE_ERROR
    assert main(["module-gens", str(session_file)]) == EXIT_PRECONDITION
    monomial = tmp_path / "mono.fg"
    monomial.write_text(MONO_Z_SESSION, encoding="utf-8")
    assert main(["mono-fiber", str(monomial), "--q", "4"]) == EXIT_PRECONDITION
