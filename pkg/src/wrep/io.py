"""Serialization: deterministic JSON/LaTeX/text emitters and golden fixtures."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import jsonschema

from .report import RepReport
from .reps import MatrixRep
from .ring import LaurentPoly, MatrixLP

__all__ = ["FixtureError", "emit", "load_fixture", "dump_fixture", "fixture_path", "FIXTURE_SCHEMA",
           "BUNDLE_SCHEMA", "load_rep_bundle", "dump_rep_bundle"]

_POLY = {
    "type": "object",
    "required": ["vars", "terms"],
    "properties": {
        "vars": {"type": "array", "items": {"type": "string"}},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["c", "e"],
                "properties": {
                    "c": {"type": "string", "pattern": r"^-?[0-9]+$"},
                    "e": {"type": "array", "items": {"type": "integer"}},
                },
            },
        },
    },
}

_MATRIX = {
    "type": "object",
    "required": ["rows", "cols", "entries"],
    "properties": {
        "rows": {"type": "integer", "minimum": 1},
        "cols": {"type": "integer", "minimum": 1},
        "entries": {"type": "array", "items": {"type": "array", "items": _POLY}},
    },
}

FIXTURE_SCHEMA = {
    "type": "object",
    "required": ["provenance", "matrices"],
    "properties": {
        "provenance": {"type": "string"},
        "matrices": {"type": "array", "minItems": 1, "items": _MATRIX},
    },
}

BUNDLE_SCHEMA = {
    "type": "object",
    "required": ["name", "n", "dim", "vars", "sigma", "tau"],
    "properties": {
        "name": {"type": "string"},
        "n": {"type": "integer", "minimum": 2},
        "dim": {"type": "integer", "minimum": 1},
        "vars": {"type": "array", "items": {"type": "string"}},
        "sigma": {"type": "array", "items": _MATRIX},
        "tau": {"type": "array", "items": _MATRIX},
    },
}


class FixtureError(ValueError):
    """Fixture file missing, unreadable or not schema-valid."""


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _rep_latex(rep: MatrixRep) -> str:
    lines = []
    for label, m in rep.generators():
        sym = "\\sigma" if label.startswith("sigma") else "\\tau"
        idx = label.lstrip("sigmatau")
        lines.append(f"{sym}_{{{idx}}} \\mapsto {m.latex()}")
    return "\n".join(lines) + "\n"


def _rep_text(rep: MatrixRep) -> str:
    parts = [f"{rep.name}: wB_{rep.n}, dim {rep.dim}, vars {','.join(rep.vars)}"]
    for label, m in rep.generators():
        parts.append(f"{label} ->\n{m}")
    return "\n".join(parts) + "\n"


def emit(obj, fmt: str = "json") -> str:
    """Render a report, representation, matrix or polynomial.

    Output is deterministic: sorted keys, sorted terms.
    """
    if fmt not in ("json", "latex", "text"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, RepReport):
        return _dumps(obj.to_json()) if fmt != "text" else _report_text(obj)
    if isinstance(obj, MatrixRep):
        return {"json": lambda: _dumps(obj.to_json()), "latex": lambda: _rep_latex(obj),
                "text": lambda: _rep_text(obj)}[fmt]()
    if isinstance(obj, (MatrixLP, LaurentPoly)):
        if fmt == "json":
            return _dumps(obj.to_json())
        return (obj.latex() if fmt == "latex" else str(obj)) + "\n"
    if isinstance(obj, (list, tuple)):
        return "".join(emit(x, fmt) for x in obj) if fmt != "json" else _dumps(
            [x.to_json() for x in obj])
    raise TypeError(f"cannot emit {type(obj).__name__}")


def _report_text(r: RepReport) -> str:
    lines = [f"{r.check}: {r.status.upper()}"]
    for k, v in sorted(r.verdicts.items()):
        lines.append(f"  {k}: {v}")
    if r.matched_candidate is not None:
        lines.append(f"  matched: {r.matched_candidate}")
    for v in r.violations:
        lines.append(f"  violation: {v}")
    if r.counterexample is not None:
        lines.append(f"  counterexample: {r.counterexample}")
    return "\n".join(lines) + "\n"


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("wrep").joinpath("fixtures", name)))


def _read_json(path, schema: dict, what: str) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FixtureError(f"cannot read {what} {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{path} is not valid JSON: {exc}") from exc
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as exc:
        raise FixtureError(f"{path} violates the {what} schema: {exc.message}") from exc
    return obj


def load_fixture(path, with_provenance: bool = False):
    """Matrices stored in a fixture file (optionally with its provenance)."""
    obj = _read_json(path, FIXTURE_SCHEMA, "fixture")
    try:
        mats = [MatrixLP.from_json(m) for m in obj["matrices"]]
    except ValueError as exc:
        raise FixtureError(f"{path}: {exc}") from exc
    return (mats, obj["provenance"]) if with_provenance else mats


def dump_fixture(matrices, provenance: str) -> str:
    return _dumps({"provenance": provenance, "matrices": [m.to_json() for m in matrices]})


def load_rep_bundle(path) -> MatrixRep:
    """A representation stored as {"name", "n", "dim", "vars", "sigma", "tau"}."""
    obj = _read_json(path, BUNDLE_SCHEMA, "bundle")
    try:
        rep = MatrixRep.from_json(obj)
    except ValueError as exc:
        raise FixtureError(f"{path}: {exc}") from exc
    n, d = rep.n, obj["dim"]
    if len(rep.sigma) != n - 1 or len(rep.tau) != n - 1:
        raise FixtureError(f"{path}: expected {n - 1} sigma and tau matrices")
    if any(m.shape != (d, d) for m in (*rep.sigma, *rep.tau)):
        raise FixtureError(f"{path}: every matrix must be {d}x{d}")
    return rep


def dump_rep_bundle(rep: MatrixRep) -> str:
    return _dumps(rep.to_json())
