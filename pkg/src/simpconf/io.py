"""JSON documents for complexes and actions."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .actions import SimplicialAction, action_from_generators
from .complex import ComplexError, SimplicialComplex, build_from_facets, closure
from .labels import VertexLabel, as_label, parse_label, sort_key, to_json


class DocumentError(ValueError):
    """Malformed JSON document (schema violation)."""


def decode_label(x: Any) -> VertexLabel:
    # strings are read in canonical text form, so "(0,1)" is a tuple label
    try:
        if isinstance(x, str):
            return parse_label(x)
        return as_label(x)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad vertex label {x!r}: {exc}") from exc


def _label_list(data: Any, what: str) -> list[VertexLabel]:
    if not isinstance(data, list):
        raise DocumentError(f"{what} must be a list")
    return [decode_label(x) for x in data]


def complex_from_doc(doc: Any) -> SimplicialComplex:
    """Build a complex from {"vertices": [...], "facets": [[...], ...]}.

    ``"simplices"`` may be given instead of ``"facets"``; it is closed
    downward as well.
    """
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise DocumentError('complex document needs a "vertices" list')
    verts = _label_list(doc["vertices"], "vertices")
    raw = doc.get("facets", doc.get("simplices", []))
    if not isinstance(raw, list):
        raise DocumentError("facets must be a list of lists")
    facets = [_label_list(f, "a facet") for f in raw]
    try:
        return build_from_facets(verts, facets)
    except ComplexError as exc:
        raise DocumentError(str(exc)) from exc


def complex_to_doc(K: SimplicialComplex) -> dict:
    """Vertices in the complex's order; facets with members in that order,
    listed in canonical order."""
    facets = sorted(K.facets(), key=lambda s: sorted(sort_key(v) for v in s))
    return {"vertices": [to_json(v) for v in K.vertices],
            "facets": [[to_json(v) for v in f] for f in facets]}


def action_from_doc(K: SimplicialComplex, doc: Any) -> SimplicialAction:
    """Complete {"generators": [{"map": {label: label}}, ...]} to a group."""
    if not isinstance(doc, dict) or not isinstance(doc.get("generators"), list):
        raise DocumentError('action document needs a "generators" list')
    gens, names = [], []
    for i, g in enumerate(doc["generators"]):
        if not isinstance(g, dict) or not isinstance(g.get("map"), dict):
            raise DocumentError('each generator needs a "map" object')
        gens.append({decode_label(k): decode_label(v) for k, v in g["map"].items()})
        names.append(str(g.get("name", f"g{i}")))
    return action_from_generators(K, gens, names)


def action_to_doc(act: SimplicialAction) -> dict:
    """Every non-identity element as a generator; reloading gives the same group."""
    out = []
    for gi in range(1, act.order):
        m = act.label_map(gi)
        out.append({"name": act.names[gi],
                    "map": {str(k): to_json(v) for k, v in m.items() if k != v}})
    return {"generators": out}


def load_json(path: str | Path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def validate_document(path: str | Path) -> list[dict]:
    """Schema and closure diagnostics for a complex document; never mutates it.

    Raises OSError if the file cannot be read.
    """
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        return [{"level": "error", "message": f"invalid JSON: {exc}"}]
    diags: list[dict] = []
    if not isinstance(doc, dict):
        return [{"level": "error", "message": "document must be a JSON object"}]
    if "vertices" not in doc:
        diags.append({"level": "error", "message": 'missing "vertices"'})
        return diags
    try:
        verts = _label_list(doc["vertices"], "vertices")
    except DocumentError as exc:
        return [{"level": "error", "message": str(exc)}]
    seen = set()
    for v in verts:
        if v in seen:
            diags.append({"level": "error", "message": f"duplicate vertex {v}"})
        seen.add(v)
    key = "facets" if "facets" in doc else "simplices" if "simplices" in doc else None
    rows = doc.get(key, []) if key else []
    if not isinstance(rows, list):
        return diags + [{"level": "error", "message": f"{key} must be a list"}]
    given = set()
    for row in rows:
        try:
            labels = _label_list(row, "a simplex")
        except DocumentError as exc:
            diags.append({"level": "error", "message": str(exc)})
            continue
        if len(set(labels)) != len(labels):
            diags.append({"level": "error",
                          "message": f"simplex {[str(x) for x in labels]} repeats a vertex"})
        for v in labels:
            if v not in seen:
                diags.append({"level": "error", "message": f"unknown vertex {v}"})
        if labels:
            given.add(frozenset(labels))
    if key == "simplices":
        missing = closure(given) - given - {frozenset((v,)) for v in seen}
        if missing:
            names = sorted("{" + ",".join(sorted(map(str, m))) + "}" for m in missing)
            diags.append({"level": "warning",
                          "message": "simplex list is not closed; missing faces: " + ", ".join(names)})
    return diags
