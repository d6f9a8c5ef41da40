"""1-planar embeddings given as rotation systems plus crossing pairs.

An embedding stores, for each vertex, the counter-clockwise cyclic order of
its incident edge ids, and a list of ordered crossing pairs ``(e1, e2)``.
The order inside a pair fixes the rotation at the crossing point: counter-
clockwise around it the half-edges lead to ``e1.u, e2.u, e1.v, e2.v``.

Darts are encoded as ``2*edge_id + side`` where side 0 leaves ``edge.u`` and
side 1 leaves ``edge.v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .graph import Graph, is_biconnected
from .planemap import InconsistentRotation, PlaneMap


class InvalidEmbedding(ValueError):
    def __init__(self, violations: list[str]) -> None:
        super().__init__("; ".join(violations))
        self.violations = violations


def dart_code(g: Graph, eid: int, v: int) -> int:
    e = g.edges[eid]
    if v == e.u:
        return 2 * eid
    if v == e.v:
        return 2 * eid + 1
    raise ValueError(f"vertex {v} not on edge {eid}")


@dataclass(frozen=True)
class OnePlanarEmbedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    crossings: tuple[tuple[int, int], ...] = ()
    outer_dart: int | None = None

    @classmethod
    def create(cls, graph: Graph, rotation, crossings=(), outer_dart=None) -> "OnePlanarEmbedding":
        return cls(
            graph,
            tuple(tuple(int(e) for e in r) for r in rotation),
            tuple((int(a), int(b)) for a, b in crossings),
            None if outer_dart is None else int(outer_dart),
        )

    @cached_property
    def crossing_partner(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.crossings:
            out[a] = b
            out[b] = a
        return out

    def is_crossed(self, eid: int) -> bool:
        return eid in self.crossing_partner


@dataclass
class Planarization:
    """Plane map with one degree-4 dummy vertex per crossing pair."""

    embedding: OnePlanarEmbedding
    pm: PlaneMap
    dummy_of: list[int]  # crossing index -> dummy vertex
    dart_of: dict[int, int]  # embedding dart code -> map dart leaving that endpoint
    faces: list[list[int]] = field(default_factory=list)
    face_of: dict[int, int] = field(default_factory=dict)
    outer: int = -1

    @property
    def n_vertices(self) -> int:
        return self.pm.n

    @property
    def n_edges(self) -> int:
        return sum(1 for _ in self.pm.alive_edges())

    def pair_of(self, dummy: int) -> tuple[int, int]:
        return self.embedding.crossings[self.dummy_of.index(dummy)]

    def face_vertices(self, f: int) -> list[int]:
        return [self.pm.origin(d) for d in self.faces[f]]

    def contracted_edges(self) -> list[tuple[int, int, int]]:
        """Graph edges recovered by contracting dummies: ``(eid, u, v)``."""
        ends: dict[int, list[int]] = {}
        for i in self.pm.alive_edges():
            me = self.pm.edges[i]
            for x in (me.tail, me.head):
                if not self.pm.dummy[x]:
                    ends.setdefault(me.owner, []).append(x)
        return sorted((eid, *sorted(vs)) for eid, vs in ends.items())


def _build_map(emb: OnePlanarEmbedding) -> Planarization:
    g = emb.graph
    pm = PlaneMap(g.n)
    dart_of: dict[int, int] = {}
    dummy_of: list[int] = []
    partner = emb.crossing_partner
    for e in g.edges:
        if e.id in partner:
            continue
        i = pm.new_edge(e.u, e.v, e.id)
        dart_of[2 * e.id] = 2 * i
        dart_of[2 * e.id + 1] = 2 * i + 1
    for e1, e2 in emb.crossings:
        p = pm.add_vertex(dummy=True)
        dummy_of.append(p)
        around = []
        for eid in (e1, e2):
            e = g.edges[eid]
            a = pm.new_edge(e.u, p, eid)
            b = pm.new_edge(e.v, p, eid)
            dart_of[2 * eid] = 2 * a
            dart_of[2 * eid + 1] = 2 * b
            around.append((2 * a + 1, 2 * b + 1))
        (u1, v1), (u2, v2) = around
        pm.set_rotation(p, [u1, u2, v1, v2])
    for v in range(g.n):
        pm.set_rotation(v, [dart_of[dart_code(g, eid, v)] for eid in emb.rotation[v]])
    return Planarization(emb, pm, dummy_of, dart_of)


def faces(p: Planarization) -> list[list[int]]:
    """Face list of a planarization (recomputed from its rotation)."""
    fs, face_of = p.pm.faces()
    p.faces, p.face_of = fs, face_of
    return fs


def _rotation_violations(emb: OnePlanarEmbedding) -> list[str]:
    g = emb.graph
    out = []
    if len(emb.rotation) != g.n:
        return [f"rotation lists {len(emb.rotation)} vertices, graph has {g.n}"]
    for v in range(g.n):
        if sorted(emb.rotation[v]) != sorted(g.adjacency[v]):
            out.append(f"rotation at vertex {v} does not list exactly its incident edges")
    return out


def _crossing_violations(emb: OnePlanarEmbedding) -> list[str]:
    g = emb.graph
    out = []
    count: dict[int, int] = {}
    for a, b in emb.crossings:
        if not (0 <= a < g.m and 0 <= b < g.m):
            out.append(f"crossing ({a}, {b}) names an unknown edge")
            continue
        if a == b:
            out.append(f"edge {a} crosses itself")
            continue
        for x in (a, b):
            count[x] = count.get(x, 0) + 1
        ea, eb = g.edges[a], g.edges[b]
        if {ea.u, ea.v} & {eb.u, eb.v}:
            out.append(f"adjacent edges cross: {a} and {b}")
    for eid, c in sorted(count.items()):
        if c > 1:
            out.append(f"edge crossed twice: {eid}")
    return out


@dataclass
class EmbeddingReport:
    violations: list[str]
    warnings: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_embedding(emb: OnePlanarEmbedding) -> EmbeddingReport:
    violations = _rotation_violations(emb) + _crossing_violations(emb)
    warnings: list[str] = []
    if emb.outer_dart is not None and not 0 <= emb.outer_dart < 2 * emb.graph.m:
        violations.append(f"outer dart {emb.outer_dart} out of range")
    if violations:
        return EmbeddingReport(violations, warnings)
    try:
        p = _build_map(emb)
        p.pm.faces()
        if not p.pm.euler_ok():
            violations.append("rotation system is not planar (Euler characteristic)")
        for x in p.dummy_of:
            if p.pm.degree(x) != 4:
                violations.append(f"dummy vertex {x} has degree {p.pm.degree(x)}")
    except InconsistentRotation as exc:
        violations.append(f"inconsistent rotation: {exc}")
    if not violations and emb.graph.n >= 3 and not is_biconnected(emb.graph):
        warnings.append("graph is not 2-connected")
    return EmbeddingReport(violations, warnings)


def planarize(emb: OnePlanarEmbedding, check: bool = True) -> Planarization:
    if check:
        report = validate_embedding(emb)
        if not report.ok:
            raise InvalidEmbedding(report.violations)
    p = _build_map(emb)
    faces(p)
    if emb.outer_dart is not None:
        p.outer = p.face_of[p.dart_of[emb.outer_dart]]
    elif p.faces:
        p.outer = max(range(len(p.faces)), key=lambda f: (len(p.faces[f]), -f))
    return p


def embedding_from_map(
    graph: Graph, pm: PlaneMap, crossings_by_dummy: dict[int, tuple[int, int]], outer_dart: int | None
) -> OnePlanarEmbedding:
    """Read an embedding back from a plane map over ``graph``.

    ``outer_dart`` is a map dart on the outer face; it is translated to an
    embedding dart code leaving an original vertex.
    """
    rotation = []
    for v in range(graph.n):
        rotation.append(tuple(pm.owner(d) for d in pm.darts_at(v)))
    crossings = []
    for p, (e1, e2) in sorted(crossings_by_dummy.items()):
        darts = list(pm.darts_at(p))
        ends = [pm.target(d) for d in darts]
        owners = [pm.owner(d) for d in darts]
        ea, eb = graph.edges[e1], graph.edges[e2]
        k = next(i for i in range(4) if owners[i] == e1 and ends[i] == ea.u)
        nxt = ends[(k + 1) % 4]
        crossings.append((e1, e2) if nxt == eb.u else (e2, e1))
    code = None
    if outer_dart is not None:
        for d in pm.face_walk(outer_dart):
            v = pm.origin(d)
            if not pm.dummy[v]:
                code = dart_code(graph, pm.owner(d), v)
                break
    return OnePlanarEmbedding.create(graph, rotation, crossings, code)
