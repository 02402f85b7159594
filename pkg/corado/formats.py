"""JSON specs for matroids, set systems, bipartite graphs and monomials.

Subsets are written as arrays of labels; labels may be given as strings or
integers and are always read as strings.  The hat marker ``^`` is reserved
and rejected in input labels.
"""

from __future__ import annotations

import json
import sys
from typing import Any

from .chow import SimplicialMonomial
from .core import HAT, GroundSet, Matroid, direct_sum, dual, free, from_bases, graphic, hyperplane_matroid, relabel, uniform
from .errors import GroundSetMismatch, JsonSyntax, MatroidError, ReservedLabel, SpecError, UnknownType, ValidationFailed
from .rado import BipartiteGraph, SetSystem

MATROID_TYPES = ("bases", "uniform", "free", "graphic", "hyperplane", "dual", "sum", "relabel")


# ---------------------------------------------------------------------------
# Reading
# ---------------------------------------------------------------------------


def load_text(source: str) -> str:
    """Resolve a CLI argument: ``-`` for stdin, inline JSON, or a file path."""
    if source == "-":
        return sys.stdin.read()
    if source.lstrip().startswith(("{", "[")):
        return source
    with open(source, encoding="utf-8") as f:
        return f.read()


def _decode(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise JsonSyntax(exc.msg, exc.lineno, exc.colno) from None


def _fail(where: str, message: str) -> ValidationFailed:
    return ValidationFailed(SpecError(message), where)


def _label(value: Any, where: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise _fail(where, f"labels must be strings or integers, got {value!r}")
    label = str(value)
    if HAT in label:
        raise ValidationFailed(ReservedLabel(f"{HAT!r} is reserved and may not appear in {label!r}"), where)
    return label


def _labels(value: Any, where: str) -> list[str]:
    if not isinstance(value, list):
        raise _fail(where, f"expected an array of labels, got {type(value).__name__}")
    return [_label(v, f"{where}[{i}]") for i, v in enumerate(value)]


def _field(obj: dict, key: str, where: str) -> Any:
    if key not in obj:
        raise _fail(where, f"missing field {key!r}")
    return obj[key]


def matroid_from_spec(obj: Any, where: str = "$") -> Matroid:
    """Build a matroid from a decoded spec object."""
    if not isinstance(obj, dict):
        raise _fail(where, "a matroid spec must be an object")
    kind = obj.get("type")
    if kind not in MATROID_TYPES:
        raise UnknownType(f"{where}: unknown matroid type {kind!r}; expected one of {', '.join(MATROID_TYPES)}")
    try:
        if kind == "bases":
            ground = _labels(_field(obj, "ground", where), f"{where}.ground")
            bases = _field(obj, "bases", where)
            if not isinstance(bases, list):
                raise _fail(f"{where}.bases", "expected an array of bases")
            return from_bases(ground, [_labels(b, f"{where}.bases[{i}]") for i, b in enumerate(bases)])
        if kind == "uniform":
            k = _field(obj, "k", where)
            if isinstance(k, bool) or not isinstance(k, int):
                raise _fail(f"{where}.k", "rank must be an integer")
            return uniform(k, _labels(_field(obj, "ground", where), f"{where}.ground"))
        if kind == "free":
            return free(_labels(_field(obj, "ground", where), f"{where}.ground"))
        if kind == "graphic":
            vertices = _field(obj, "vertices", where)
            edges = _field(obj, "edges", where)
            if not isinstance(vertices, list) or not isinstance(edges, list):
                raise _fail(where, "vertices and edges must be arrays")
            triples = []
            for i, edge in enumerate(edges):
                if not isinstance(edge, list) or len(edge) != 3:
                    raise _fail(f"{where}.edges[{i}]", "an edge is [u, v, label]")
                u, v, label = edge
                triples.append((str(u), str(v), _label(label, f"{where}.edges[{i}][2]")))
            return graphic([str(v) for v in vertices], triples)
        if kind == "hyperplane":
            ground = _labels(_field(obj, "ground", where), f"{where}.ground")
            return hyperplane_matroid(ground, _labels(_field(obj, "support", where), f"{where}.support"))
        if kind == "dual":
            return dual(matroid_from_spec(_field(obj, "of", where), f"{where}.of"))
        if kind == "sum":
            parts = _field(obj, "summands", where)
            if not isinstance(parts, list) or not parts:
                raise _fail(f"{where}.summands", "expected a nonempty array of specs")
            total = matroid_from_spec(parts[0], f"{where}.summands[0]")
            for i, part in enumerate(parts[1:], start=1):
                total = direct_sum(total, matroid_from_spec(part, f"{where}.summands[{i}]"))
            return total
        # relabel
        inner = matroid_from_spec(_field(obj, "of", where), f"{where}.of")
        mapping = _field(obj, "mapping", where)
        if not isinstance(mapping, dict):
            raise _fail(f"{where}.mapping", "expected an object from old to new labels")
        return relabel(inner, {str(k): _label(v, f"{where}.mapping.{k}") for k, v in mapping.items()})
    except SpecError:
        raise
    except MatroidError as exc:
        raise ValidationFailed(exc, where) from exc


def parse_matroid(text: str) -> Matroid:
    return matroid_from_spec(_decode(text))


def parse_system(text: str, ground: GroundSet | None = None) -> SetSystem:
    """Read a set system: a bare array of subsets, or ``{"members": [...], "ground": [...]}``.

    Without a matroid to refer to, the object form with ``ground`` is required.
    """
    obj = _decode(text)
    declared = None
    if isinstance(obj, dict):
        if "ground" in obj:
            declared = _labels(obj["ground"], "$.ground")
        members = _field(obj, "members", "$")
    else:
        members = obj
    if not isinstance(members, list):
        raise _fail("$.members", "expected an array of subsets")
    try:
        if ground is None:
            if declared is None:
                raise _fail("$", "a set system on its own needs a 'ground' array")
            ground = GroundSet(tuple(declared))
        elif declared is not None and set(declared) != set(ground.labels):
            raise GroundSetMismatch("declared ground differs from the matroid's ground set")
        return SetSystem.of(ground, [_labels(m, f"$.members[{i}]") for i, m in enumerate(members)])
    except SpecError:
        raise
    except MatroidError as exc:
        raise ValidationFailed(exc, "$") from exc


def parse_subset(text: str, ground: GroundSet) -> int:
    """A subset as a JSON array, or as comma-separated labels."""
    stripped = text.strip()
    if stripped.startswith("["):
        labels = _labels(_decode(stripped), "$")
    else:
        labels = [part.strip() for part in stripped.split(",") if part.strip()]
    try:
        return ground.mask(labels)
    except MatroidError as exc:
        raise ValidationFailed(exc, "$") from exc


def parse_graph(text: str) -> BipartiteGraph:
    """``{"left": [...], "right": [...], "edges": [[l, r], ...]}``."""
    obj = _decode(text)
    if not isinstance(obj, dict):
        raise _fail("$", "a graph spec must be an object")
    left = _labels(_field(obj, "left", "$"), "$.left")
    right = _labels(_field(obj, "right", "$"), "$.right")
    edges = _field(obj, "edges", "$")
    if not isinstance(edges, list):
        raise _fail("$.edges", "expected an array of [left, right] pairs")
    pairs = []
    for i, edge in enumerate(edges):
        if not isinstance(edge, list) or len(edge) != 2:
            raise _fail(f"$.edges[{i}]", "an edge is [left, right]")
        pairs.append((_label(edge[0], f"$.edges[{i}][0]"), _label(edge[1], f"$.edges[{i}][1]")))
    try:
        return BipartiteGraph(tuple(left), tuple(right), frozenset(pairs))
    except MatroidError as exc:
        raise ValidationFailed(exc, "$") from exc


def parse_monomial(text: str, m: Matroid) -> SimplicialMonomial:
    """``{"flats": [[...], ...], "exponents": [a1, ...]}``."""
    obj = _decode(text)
    if not isinstance(obj, dict):
        raise _fail("$", "a monomial spec must be an object")
    flats = _field(obj, "flats", "$")
    exponents = _field(obj, "exponents", "$")
    if not isinstance(flats, list) or not isinstance(exponents, list):
        raise _fail("$", "flats and exponents must be arrays")
    if any(isinstance(a, bool) or not isinstance(a, int) for a in exponents):
        raise _fail("$.exponents", "exponents must be integers")
    try:
        masks = tuple(m.ground.mask(_labels(f, f"$.flats[{i}]")) for i, f in enumerate(flats))
    except SpecError:
        raise
    except MatroidError as exc:
        raise ValidationFailed(exc, "$.flats") from exc
    return SimplicialMonomial(masks, tuple(exponents))


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------


def subset_labels(ground: GroundSet, mask: int) -> list[str]:
    return list(ground.labels_of(mask))


def matroid_payload(m: Matroid) -> dict[str, Any]:
    return {
        "type": "bases",
        "ground": list(m.ground.labels),
        "bases": [subset_labels(m.ground, b) for b in m.bases],
    }


def render_matroid(m: Matroid) -> str:
    """Canonical bases-form spec; one basis per line, byte-for-byte deterministic."""
    lines = [
        "{",
        '  "type": "bases",',
        f'  "ground": {json.dumps(list(m.ground.labels), ensure_ascii=False)},',
        '  "bases": [',
    ]
    rows = [f"    {json.dumps(subset_labels(m.ground, b), ensure_ascii=False)}" for b in m.bases]
    lines.append(",\n".join(rows))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def system_payload(system: SetSystem) -> dict[str, Any]:
    return {
        "ground": list(system.ground.labels),
        "members": [subset_labels(system.ground, a) for a in system.members],
    }


def render_system(system: SetSystem) -> str:
    return json.dumps(system_payload(system), ensure_ascii=False) + "\n"
