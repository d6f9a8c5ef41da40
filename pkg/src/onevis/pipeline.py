"""End-to-end 1-visibility layout of a 1-planar embedding."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .augmentation import (
    SeparationStructure,
    insert_separation_edges,
    normalize,
    planar_maximal_augment,
)
from .crossing import classify_face, finalize, insert_crossing, match_crossed_vertices
from .embedding import InvalidEmbedding, OnePlanarEmbedding, planarize, validate_embedding
from .graph import EdgeKind, build_graph, check_density, connected_components
from .layout import EdgeSegment, VertexSegment, VisibilityLayout
from .planar_layout import build_skeleton, dual_distances, planar_visibility, st_number

# one empty whole-unit column between side-by-side parts
PART_GAP = 8


class DensityViolation(ValueError):
    pass


@dataclass
class PipelineReport:
    n: int
    m: int
    augmented: int = 0
    separation: int = 0
    crossing_faces: int = 0
    width: int = 0  # quarter units, i.e. the x-extent after the final x4 scaling
    height: int = 0  # levels
    timings: dict[str, float] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def width_bound(self) -> int:
        return 8 * self.n - 20

    @property
    def height_bound(self) -> int:
        return self.n - 1

    @property
    def within_bounds(self) -> bool:
        return self.width <= self.width_bound and self.height <= self.height_bound


class _Clock:
    def __init__(self, report: PipelineReport) -> None:
        self.report = report
        self.last = time.perf_counter()

    def lap(self, name: str) -> None:
        now = time.perf_counter()
        self.report.timings[name] = self.report.timings.get(name, 0.0) + now - self.last
        self.last = now


def one_visibility(emb: OnePlanarEmbedding) -> tuple[VisibilityLayout, PipelineReport]:
    """Compute a 1-visibility representation of ``emb``'s graph.

    Helper edges introduced along the way keep their segments but are
    flagged hidden.  Raises ``InvalidEmbedding`` or ``DensityViolation``.
    """
    g = emb.graph
    report = PipelineReport(g.n, g.m)
    clock = _Clock(report)
    # too many edges rules out any 1-visible graph, whatever the rotation says
    density = check_density(g)
    if not density.passed:
        raise DensityViolation(f"{density.m} edges exceed the 1-visibility bound 4n-8 = {density.bound}")
    check = validate_embedding(emb)
    if not check.ok:
        raise InvalidEmbedding(check.violations)
    report.warnings.extend(check.warnings)
    clock.lap("validate")

    comps = _drawn_components(emb)
    if len(comps) == 1:
        parts = [_layout_component(emb, report, clock)]
    else:
        parts = [_layout_component(sub, report, clock, back) for sub, back in _split(emb, comps)]
    layout = layout_blocks(parts)
    report.width, report.height = layout.extent()
    clock.lap("compose")
    return layout, report


def _drawn_components(emb: OnePlanarEmbedding) -> list[list[int]]:
    """Connected parts of the drawing: a crossing ties its two edges together."""
    g = emb.graph
    if not emb.crossings:
        return connected_components(g)
    ties = [(g.edges[a].u, g.edges[b].u, EdgeKind.SEPARATION) for a, b in emb.crossings]
    return connected_components(g.with_edges(ties))


def _split(emb: OnePlanarEmbedding, comps: list[list[int]]):
    g = emb.graph
    for comp in comps:
        vmap = {v: i for i, v in enumerate(sorted(comp))}
        eids = sorted({eid for v in comp for eid in g.adjacency[v]})
        emap = {eid: i for i, eid in enumerate(eids)}
        sub_g = build_graph(len(vmap), [(vmap[g.edges[e].u], vmap[g.edges[e].v], g.edges[e].kind) for e in eids])
        rotation = [[emap[e] for e in emb.rotation[v]] for v in sorted(comp)]
        crossings = [(emap[a], emap[b]) for a, b in emb.crossings if a in emap]
        outer = None
        if emb.outer_dart is not None and emb.outer_dart >> 1 in emap:
            outer = 2 * emap[emb.outer_dart >> 1] + (emb.outer_dart & 1)
        sub = OnePlanarEmbedding.create(sub_g, rotation, crossings, outer)
        yield sub, (sorted(comp), eids)


def _layout_component(
    emb: OnePlanarEmbedding, report: PipelineReport, clock: _Clock, back=None
) -> VisibilityLayout:
    g = emb.graph
    if g.n <= 2:
        layout = _tiny_layout(g)
    else:
        aug = planar_maximal_augment(emb)
        aug = normalize(aug)
        aug = insert_separation_edges(aug, SeparationStructure([]))
        clock.lap("augment")
        kinds = [e.kind for e in aug.graph.edges[g.m:]]
        report.augmented += kinds.count(EdgeKind.AUGMENTED)
        report.separation += kinds.count(EdgeKind.SEPARATION)
        skel = build_skeleton(planarize(aug, check=False))
        st = st_number(skel)
        dist = dual_distances(skel, st)
        layout = planar_visibility(skel, dist)
        clock.lap("planar")
        shapes = [classify_face(skel, dist, f) for f in sorted(skel.crossing_faces)]
        match = match_crossed_vertices(shapes)
        for shape in shapes:
            insert_crossing(layout, shape, match.crossed[shape.face], aug.graph, in_place=True)
        report.crossing_faces += len(shapes)
        layout = finalize(layout, aug.graph)
        clock.lap("crossings")
    if back is not None:
        layout = _relabel(layout, *back)
    return layout


def _tiny_layout(g) -> VisibilityLayout:
    vertices = [VertexSegment(v, v, 0, 0) for v in range(g.n)]
    edges = [EdgeSegment(e.id, e.u, e.v, 0, 0, 1) for e in g.edges]
    return finalize(VisibilityLayout(vertices, edges, []), g)


def _relabel(layout: VisibilityLayout, verts: list[int], eids: list[int]) -> VisibilityLayout:
    for b in layout.vertices:
        b.vertex = verts[b.vertex]
    extra = max(eids, default=-1) + 1
    for e in layout.edges:
        e.u, e.v = verts[e.u], verts[e.v]
        # helper edges get ids past the original ones; they are renumbered at composition
        e.edge = eids[e.edge] if e.edge < len(eids) else -(extra + e.edge)
    layout.crossings = [(eids[a], verts[v]) for a, v in layout.crossings]
    return layout


def layout_blocks(parts: list[VisibilityLayout]) -> VisibilityLayout:
    """Place independently drawn parts side by side.

    Each part starts at level 0 and one empty whole-unit column separates
    consecutive parts.  Helper edges of later parts are renumbered so that
    ids stay unique.
    """
    if len(parts) == 1:
        return parts[0]
    vertices: list[VertexSegment] = []
    edges: list[EdgeSegment] = []
    crossings: list[tuple[int, int]] = []
    cursor = 0
    helpers: list[EdgeSegment] = []
    for part in parts:
        if not part.vertices:
            continue
        lo = min(b.x_lo for b in part.vertices)
        hi = max(b.x_hi for b in part.vertices)
        ylo = min(b.y for b in part.vertices)
        moved = part.shifted(cursor - lo, -ylo)
        vertices.extend(moved.vertices)
        for e in moved.edges:
            (helpers if e.edge < 0 else edges).append(e)
        crossings.extend(moved.crossings)
        cursor += hi - lo + PART_GAP
    top = max((e.edge for e in edges), default=-1)
    for k, e in enumerate(helpers):
        e.edge = top + 1 + k
    vertices.sort(key=lambda b: b.vertex)
    edges = sorted(edges + helpers, key=lambda e: e.edge)
    return VisibilityLayout(vertices, edges, sorted(crossings))
