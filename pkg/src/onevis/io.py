"""Versioned JSON documents for graphs, embeddings and layouts.

Every number crossing this boundary is an integer; layout x-coordinates are
quarter units.
"""

from __future__ import annotations

import json
from typing import Any

from .embedding import OnePlanarEmbedding
from .graph import Graph, build_graph
from .layout import EdgeSegment, VertexSegment, VisibilityLayout

SCHEMA = "onevis/1"


class SchemaError(ValueError):
    pass


def _int(obj: Any, what: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(f"{what} must be an integer, got {obj!r}")
    return obj


def _check(doc: Any, kind: str) -> dict:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise SchemaError(f"expected schema {SCHEMA!r}, got {doc.get('schema')!r}")
    if doc.get("type", kind) != kind:
        raise SchemaError(f"expected a {kind} document, got {doc.get('type')!r}")
    return doc


def _edges_doc(g: Graph) -> list[dict]:
    return [{"u": e.u, "v": e.v, "kind": e.kind.value} for e in g.edges]


def _graph_from(doc: dict) -> Graph:
    try:
        n = _int(doc["n"], "n")
        edges = [(_int(e["u"], "u"), _int(e["v"], "v"), e.get("kind", "original")) for e in doc["edges"]]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed edge list: {exc}") from exc
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def graph_to_dict(g: Graph) -> dict:
    return {"schema": SCHEMA, "type": "graph", "n": g.n, "edges": _edges_doc(g)}


def graph_from_dict(doc: Any) -> Graph:
    """Accepts graph documents and, for convenience, embedding documents."""
    if isinstance(doc, dict) and doc.get("type") == "embedding":
        return _graph_from(_check(doc, "embedding"))
    return _graph_from(_check(doc, "graph"))


def embedding_to_dict(emb: OnePlanarEmbedding) -> dict:
    return {
        "schema": SCHEMA,
        "type": "embedding",
        "n": emb.graph.n,
        "edges": _edges_doc(emb.graph),
        "rotation": [list(r) for r in emb.rotation],
        "crossings": [list(p) for p in emb.crossings],
        "outer_dart": emb.outer_dart,
    }


def embedding_from_dict(doc: Any) -> OnePlanarEmbedding:
    doc = _check(doc, "embedding")
    g = _graph_from(doc)
    try:
        rotation = [[_int(e, "rotation entry") for e in r] for r in doc["rotation"]]
        crossings = [tuple(_int(e, "crossing edge") for e in p) for p in doc.get("crossings", [])]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed embedding: {exc}") from exc
    if any(len(p) != 2 for p in crossings):
        raise SchemaError("crossings must be pairs of edge ids")
    outer = doc.get("outer_dart")
    if outer is not None:
        outer = _int(outer, "outer_dart")
    return OnePlanarEmbedding.create(g, rotation, crossings, outer)


def layout_to_dict(layout: VisibilityLayout) -> dict:
    return {
        "schema": SCHEMA,
        "type": "layout",
        "unit": "quarter",
        "vertices": [{"id": b.vertex, "y": b.y, "x_lo": b.x_lo, "x_hi": b.x_hi} for b in layout.vertices],
        "edges": [
            {"id": e.edge, "u": e.u, "v": e.v, "x": e.x, "y_lo": e.y_lo, "y_hi": e.y_hi, "hidden": e.hidden}
            for e in layout.edges
        ],
        "crossings": [{"edge": a, "vertex": v} for a, v in layout.crossings],
    }


def layout_from_dict(doc: Any) -> VisibilityLayout:
    doc = _check(doc, "layout")
    if doc.get("unit", "quarter") != "quarter":
        raise SchemaError("only quarter-unit layouts are supported")
    try:
        vertices = [
            VertexSegment(_int(b["id"], "id"), _int(b["y"], "y"), _int(b["x_lo"], "x_lo"), _int(b["x_hi"], "x_hi"))
            for b in doc["vertices"]
        ]
        edges = [
            EdgeSegment(
                _int(e["id"], "id"),
                _int(e["u"], "u"),
                _int(e["v"], "v"),
                _int(e["x"], "x"),
                _int(e["y_lo"], "y_lo"),
                _int(e["y_hi"], "y_hi"),
                bool(e.get("hidden", False)),
            )
            for e in doc["edges"]
        ]
        crossings = [(_int(c["edge"], "edge"), _int(c["vertex"], "vertex")) for c in doc.get("crossings", [])]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed layout: {exc}") from exc
    return VisibilityLayout(vertices, edges, crossings)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc


def read(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


__all__ = [
    "SCHEMA",
    "SchemaError",
    "dumps",
    "embedding_from_dict",
    "embedding_to_dict",
    "graph_from_dict",
    "graph_to_dict",
    "layout_from_dict",
    "layout_to_dict",
    "loads",
    "read",
    "write",
]
