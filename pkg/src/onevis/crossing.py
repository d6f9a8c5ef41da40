"""Re-inserting crossing pairs into their quadrangles.

Coordinates are quarter units.  ``X`` below is the column of a crossing
face, ``4 * delta_star(f)``.  The open strip ``(X - 4, X)`` at the levels of
the face is empty in the planar layout, which leaves three free quarter
columns for the two crossing edges.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass

from .graph import EdgeKind, Graph
from .layout import EdgeSegment, VertexSegment, VisibilityLayout
from .planar_layout import DistanceMaps, NotQuadrangle, Skeleton


class HallViolation(RuntimeError):
    pass


class ShapeKind(str, enum.Enum):
    LEFT_WING = "left_wing"
    RIGHT_WING = "right_wing"
    DIAMOND = "diamond"


@dataclass(frozen=True)
class FaceShape:
    """Roles inside a crossing quadrangle.

    ``first``/``second`` are the middle vertices: lower and upper for a
    wing, left and right for a diamond.
    """

    face: int
    kind: ShapeKind
    bottom: int
    top: int
    first: int
    second: int
    column: int
    pair: tuple[int, int]

    @property
    def middles(self) -> tuple[int, int]:
        return self.first, self.second


@dataclass
class MatchingAssignment:
    crossed: dict[int, int]  # face -> crossed middle vertex

    def is_injective(self) -> bool:
        return len(set(self.crossed.values())) == len(self.crossed)


def classify_face(skel: Skeleton, dist: DistanceMaps, f: int) -> FaceShape:
    pm = skel.pm
    walk = skel.faces[f]
    if len(walk) != 4 or f not in skel.crossing_faces:
        raise NotQuadrangle(f"face {f} is not a crossing quadrangle")
    st = dist.st
    fwd = [st.forward(pm, d) for d in walk]
    k = sum(fwd)
    column = 4 * dist.delta_star[f]
    pair = skel.crossing_faces[f]
    if k in (1, 3):
        # start at the lone dart against the majority direction
        i = fwd.index(k == 1)
        rest = [pm.origin(walk[(i + j) % 4]) for j in range(1, 4)]
        if k == 1:
            top, upper, lower = rest
            bottom = pm.origin(walk[i])
            kind = ShapeKind.LEFT_WING
        else:
            bottom, lower, upper = rest
            top = pm.origin(walk[i])
            kind = ShapeKind.RIGHT_WING
        return FaceShape(f, kind, bottom, top, lower, upper, column, pair)
    if k == 2:
        verts = [pm.origin(d) for d in walk]
        b = min(range(4), key=lambda j: st.number[verts[j]])
        bottom, right, top, left = (verts[(b + j) % 4] for j in range(4))
        return FaceShape(f, ShapeKind.DIAMOND, bottom, top, left, right, column, pair)
    raise NotQuadrangle(f"face {f} has {k} forward darts")


def match_crossed_vertices(shapes: list[FaceShape]) -> MatchingAssignment:
    """Pick one middle vertex per face, never the same vertex twice.

    Forced choices go first (a vertex wanted by one face only, or a face
    with a single remaining candidate), smallest face id first.  What is
    left decomposes into alternating cycles, each started at its lowest
    vertex.
    """
    cand = {s.face: s.middles for s in shapes}
    faces_of: dict[int, list[int]] = {}
    for f, ms in cand.items():
        for v in ms:
            faces_of.setdefault(v, []).append(f)
    used: set[int] = set()
    done: dict[int, int] = {}

    def avail(f: int) -> list[int]:
        return [v for v in cand[f] if v not in used]

    def deg(v: int) -> int:
        return sum(1 for g in faces_of[v] if g not in done)

    def forced(f: int) -> bool:
        a = avail(f)
        return len(a) <= 1 or any(deg(v) == 1 for v in a)

    heap = [f for f in sorted(cand) if forced(f)]
    heapq.heapify(heap)

    def assign(f: int, v: int) -> None:
        done[f] = v
        used.add(v)
        for x in cand[f]:
            for g in faces_of[x]:
                if g not in done and forced(g):
                    heapq.heappush(heap, g)

    def drain() -> None:
        while heap:
            f = heapq.heappop(heap)
            if f in done:
                continue
            a = avail(f)
            if not a:
                raise HallViolation(f"face {f} has no free middle vertex")
            ones = [v for v in a if deg(v) == 1]
            assign(f, min(ones) if ones else min(a))

    drain()
    # a vertex once used or left without open faces stays so; one pass suffices
    for v in sorted(faces_of):
        if v in used:
            continue
        open_faces = [g for g in faces_of[v] if g not in done]
        if open_faces:
            assign(min(open_faces), v)
            drain()
    if len(done) < len(cand):
        raise HallViolation("some crossing face has no free middle vertex")
    return MatchingAssignment(done)


def _bar(layout: VisibilityLayout, v: int) -> VertexSegment:
    vs = layout.vertices
    if v < len(vs) and vs[v].vertex == v:
        return vs[v]
    return next(b for b in vs if b.vertex == v)


def _edge_between(g: Graph, pair: tuple[int, int], a: int, b: int) -> int:
    for eid in pair:
        e = g.edges[eid]
        if {e.u, e.v} == {a, b}:
            return eid
    raise NotQuadrangle(f"crossing pair {pair} has no edge ({a}, {b})")


def insert_crossing(
    layout: VisibilityLayout,
    shape: FaceShape,
    crossed: int,
    graph: Graph,
    in_place: bool = False,
) -> VisibilityLayout:
    """Draw the crossing pair of ``shape`` with the diagonal piercing ``crossed``."""
    out = layout if in_place else layout.copy()
    X = shape.column
    s = shape
    first, second = _bar(out, s.first), _bar(out, s.second)
    if s.kind is ShapeKind.DIAMOND:
        diagonals = ((s.bottom, s.top), (s.first, s.second))
        first.x_hi = max(first.x_hi, X - 2)
        second.x_lo = min(second.x_lo, X - 2)
        cols = (X - 3 if crossed == s.first else X - 1, X - 2)
    else:
        diagonals = ((s.bottom, s.second), (s.first, s.top))
        if s.kind is ShapeKind.LEFT_WING:
            near, far = (X - 2, X - 3) if crossed == s.first else (X - 3, X - 2)
            first.x_hi = max(first.x_hi, near)
            second.x_hi = max(second.x_hi, far)
            cols = (far, near)
        else:
            near, far = (X - 2, X - 1) if crossed == s.first else (X - 1, X - 2)
            first.x_lo = min(first.x_lo, near)
            second.x_lo = min(second.x_lo, far)
            cols = (far, near)
    through = None
    for (a, b), x in zip(diagonals, cols):
        eid = _edge_between(graph, s.pair, a, b)
        e = graph.edges[eid]
        ya, yb = _bar(out, e.u).y, _bar(out, e.v).y
        out.edges.append(EdgeSegment(eid, e.u, e.v, x, min(ya, yb), max(ya, yb)))
        if crossed not in (a, b):
            through = eid
    out.crossings.append((through, crossed))
    return out


def finalize(layout: VisibilityLayout, graph: Graph) -> VisibilityLayout:
    """Hide helper edges and order segments by edge id."""
    for e in layout.edges:
        e.hidden = graph.edges[e.edge].kind is not EdgeKind.ORIGINAL
    layout.edges.sort(key=lambda e: e.edge)
    layout.crossings.sort()
    return layout
