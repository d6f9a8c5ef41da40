"""Instance families: XQ double wheels, B/W/X gadgets, random 1-planar
embeddings and the non-1-planar K7-e / G_n witnesses with hand layouts.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .embedding import OnePlanarEmbedding, dart_code, embedding_from_map
from .graph import EdgeKind, Graph, build_graph, is_biconnected
from .layout import EdgeSegment, VertexSegment, VisibilityLayout
from .planemap import PlaneMap


class BadRim(ValueError):
    pass


class TooSmall(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    param: int | str | None
    n: int
    m: int


def family_counts(family: str, param: int) -> FamilySpec:
    """Expected vertex and edge counts of the optimal families."""
    if family == "XQ":
        n = param + 2
    elif family in ("K7_minus_e", "Gn"):
        n = 7 if family == "K7_minus_e" else param
    else:
        raise ValueError(f"no closed-form counts for {family}")
    return FamilySpec(family, param, n, 4 * n - 8)


# -- geometry -------------------------------------------------------------------


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _half(d) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _angle_cmp(a, b) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _segments_cross(p1, p2, q1, q2) -> bool:
    d1, d2 = _cross(p1, p2, q1), _cross(p1, p2, q2)
    d3, d4 = _cross(q1, q2, p1), _cross(q1, q2, p2)
    return d1 * d2 < 0 and d3 * d4 < 0


def embedding_from_drawing(
    n: int,
    edges: Sequence[tuple],
    pos: Sequence[tuple[int, int]],
    crossings: Sequence[tuple[int, int]] | None = None,
    outer_dart: int | None = None,
) -> OnePlanarEmbedding:
    """Read the rotation system and crossing orientation off a straight-line drawing.

    ``crossings`` lists unordered crossing edge pairs; when omitted all
    proper crossings are detected (quadratic, meant for small drawings).
    """
    g = build_graph(n, edges)
    rotation = []
    for v in range(n):
        def direction(eid: int, v=v):
            w = g.edges[eid].other(v)
            return (pos[w][0] - pos[v][0], pos[w][1] - pos[v][1])

        rotation.append(sorted(g.adjacency[v], key=functools.cmp_to_key(lambda a, b: _angle_cmp(direction(a), direction(b)))))
    if crossings is None:
        crossings = [
            (a.id, b.id)
            for a, b in combinations(g.edges, 2)
            if _segments_cross(pos[a.u], pos[a.v], pos[b.u], pos[b.v])
        ]
    ordered = []
    for a, b in crossings:
        ea, eb = g.edges[a], g.edges[b]
        da = (pos[ea.v][0] - pos[ea.u][0], pos[ea.v][1] - pos[ea.u][1])
        db = (pos[eb.v][0] - pos[eb.u][0], pos[eb.v][1] - pos[eb.u][1])
        ordered.append((a, b) if da[0] * db[1] - da[1] * db[0] > 0 else (b, a))
    return OnePlanarEmbedding.create(g, rotation, ordered, outer_dart)


# -- XQ ---------------------------------------------------------------------------


def gen_XQ(rim: int) -> OnePlanarEmbedding:
    """Double wheel on an even rim with both diagonals in every quadrangle."""
    if rim % 2 or rim < 6:
        raise BadRim(f"rim must be even and at least 6, got {rim}")
    p, q = rim, rim + 1
    edges: list[tuple[int, int]] = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(p, i) for i in range(0, rim, 2)]
    edges += [(q, i) for i in range(1, rim, 2)]
    pm = PlaneMap(rim + 2)
    dart: dict[tuple[int, int], int] = {}
    for gid, (a, b) in enumerate(edges):
        i = pm.new_edge(a, b, gid)
        dart[a, b], dart[b, a] = 2 * i, 2 * i + 1
    for i in range(rim):
        nxt, prv = (i + 1) % rim, (i - 1) % rim
        if i % 2:
            pm.set_rotation(i, [dart[i, q], dart[i, nxt], dart[i, prv]])
        else:
            pm.set_rotation(i, [dart[i, nxt], dart[i, p], dart[i, prv]])
    pm.set_rotation(p, [dart[p, i] for i in range(0, rim, 2)])
    pm.set_rotation(q, [dart[q, i] for i in reversed(range(1, rim, 2))])
    outer_ref = dart[1, 0]
    quads, _ = pm.faces()
    by_dummy: dict[int, tuple[int, int]] = {}
    for walk in sorted(quads, key=lambda w: min(w)):
        corners = [pm.origin(d) for d in walk]
        e1, e2 = len(edges), len(edges) + 1
        edges += [(corners[0], corners[2]), (corners[1], corners[3])]
        x = pm.add_vertex(dummy=True)
        prev = None
        for k, d in enumerate(walk):
            i = pm.insert_edge(corners[k], x, e1 if k % 2 == 0 else e2, d, prev)
            prev = 2 * i + 1
        by_dummy[x] = (e1, e2)
    g = build_graph(rim + 2, edges)
    return embedding_from_map(g, pm, by_dummy, outer_ref)


# -- configuration gadgets --------------------------------------------------------


def gen_config(kind: str, augmented: bool = True) -> OnePlanarEmbedding:
    """Smallest B, W or X configuration, optionally with its kite edges."""
    kind = kind.upper()
    aug = EdgeKind.AUGMENTED
    if kind in ("X", "B"):
        pos = [(0, 0), (4, 0), (4, 4), (0, 4)]
        edges: list[tuple] = [(0, 1), (0, 2), (1, 3)]
        if augmented:
            edges += [(1, 2, aug), (2, 3, aug), (3, 0, aug)]
        # outer face: outside the square for X, the base wedge for B
        outer = 1 if kind == "X" else 0
        return embedding_from_drawing(4, edges, pos, outer_dart=outer)
    if kind == "W":
        pos = [(0, 0), (4, 0), (4, 4), (0, 4), (4, -4), (0, -4)]
        edges = [(0, 1), (0, 2), (1, 3), (0, 4), (1, 5)]
        if augmented:
            edges += [(1, 2, aug), (2, 3, aug), (3, 0, aug), (1, 4, aug), (4, 5, aug), (5, 0, aug)]
        return embedding_from_drawing(6, edges, pos, outer_dart=0)
    raise ValueError(f"unknown configuration {kind!r}")


# -- random ----------------------------------------------------------------------


def gen_random_1planar(n: int, seed: int, cross_rate: float = 0.6, drop_rate: float = 0.1) -> OnePlanarEmbedding:
    """Delaunay triangulation with some adjacent triangle pairs turned into crossings."""
    from scipy.spatial import Delaunay

    if n < 4:
        raise TooSmall("need at least 4 vertices")
    rng = random.Random(seed)
    span = 1 << 20
    pts = set()
    while len(pts) < n:
        pts.add((rng.randrange(span), rng.randrange(span)))
    pos = sorted(pts)
    tri = Delaunay(pos)
    faces = [tuple(int(x) for x in s) for s in tri.simplices]
    at_edge: dict[tuple[int, int], list[int]] = {}
    for k, (a, b, c) in enumerate(faces):
        for x, y in ((a, b), (b, c), (c, a)):
            at_edge.setdefault((min(x, y), max(x, y)), []).append(k)
    present = set(at_edge)
    used: set[int] = set()
    extra: list[tuple[int, int]] = []
    pairs: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for key in sorted(at_edge):
        ts = at_edge[key]
        if len(ts) != 2 or ts[0] in used or ts[1] in used or rng.random() >= cross_rate:
            continue
        a, c = key
        b, d = (next(x for x in faces[t] if x not in key) for t in ts)
        other = (min(b, d), max(b, d))
        if other in present or not _segments_cross(pos[a], pos[c], pos[b], pos[d]):
            continue
        used.update(ts)
        present.add(other)
        extra.append(other)
        pairs.append((key, other))
    edge_list = sorted(at_edge) + extra
    crossed = {e for pair in pairs for e in pair}
    for key in sorted(at_edge):
        if key in crossed or rng.random() >= drop_rate:
            continue
        trial = [e for e in edge_list if e != key]
        if is_biconnected(build_graph(n, trial)):
            edge_list = trial
    index = {e: i for i, e in enumerate(edge_list)}
    crossings = [(index[a], index[b]) for a, b in pairs]
    hull = {(min(a, b), max(a, b)) for a, b in tri.convex_hull}
    outer = None
    for e in edge_list:
        if e in hull:
            a, b = e
            third = next(x for x in faces[at_edge[e][0]] if x not in e)
            # outside of the hull lies left of the dart whose triangle is on its right
            side = 0 if _cross(pos[a], pos[b], pos[third]) < 0 else 1
            outer = 2 * index[e] + side
            break
    return embedding_from_drawing(n, edge_list, pos, crossings, outer)


# -- K7-e and G_n -------------------------------------------------------------------

# Hand-built 1-visibility layout of K7-e (labels 1..7, edge (2,7) missing).
# Whole-unit columns; vertex 7 lies at the bottom and vertex 3 spans the top.
_K7_LEVEL = {7: 0, 6: 1, 1: 2, 2: 3, 4: 4, 5: 5, 3: 6}
_K7_BAR = {1: (11, 15), 2: (7, 11), 3: (2, 15), 4: (10, 14), 5: (5, 12), 6: (4, 11), 7: (3, 13)}
_K7_EDGE_X = {
    (1, 2): 11, (1, 3): 15, (1, 4): 14, (1, 5): 12, (1, 6): 11, (1, 7): 12, (2, 3): 7,
    (2, 4): 11, (2, 5): 9, (2, 6): 8, (3, 4): 13, (3, 5): 9, (3, 6): 4, (3, 7): 3,
    (4, 5): 11, (4, 6): 10, (4, 7): 13, (5, 6): 6, (5, 7): 5, (6, 7): 7,
}
_K7_CROSSINGS = [((1, 5), 4), ((2, 3), 5), ((4, 6), 2), ((4, 7), 1), ((5, 7), 6)]
# free columns inside bar 7 for the edges of added vertices: X and Y carry
# the edge that skips one vertex (even / odd index), Z the edge to v_{i-1}
_COL_X, _COL_Y, _COL_Z = 8, 3, 6


def _k7_edges() -> list[tuple[int, int]]:
    return [(a, b) for a, b in combinations(range(1, 8), 2) if (a, b) != (2, 7)]


def gen_K7_minus_e() -> tuple[Graph, VisibilityLayout]:
    return gen_Gn(7)


def gen_Gn(n: int) -> tuple[Graph, VisibilityLayout]:
    """K7-e grown by vertices 8..n, each below the previous one.

    Vertex ``i`` sees 3 on the far left, 1 on the far right, ``i-1`` right
    above it, and ``i-2`` through the bar of ``i-1``.
    """
    if n < 7:
        raise TooSmall("G_n needs n >= 7")
    labelled = _k7_edges()
    x_of = dict(_K7_EDGE_X)
    level = dict(_K7_LEVEL)
    bar = dict(_K7_BAR)
    crossing_labels = list(_K7_CROSSINGS)
    for i in range(8, n + 1):
        k = i - 7
        level[i] = -k
        bar[i] = (2 - k, 15 + k)
        skip = _COL_X if i % 2 == 0 else _COL_Y
        for other, x in ((3, 2 - k), (1, 15 + k), (i - 1, _COL_Z), (i - 2, skip)):
            labelled.append((i, other))
            x_of[i, other] = x
        crossing_labels.append(((i, i - 2), i - 1))
    if n > 7:
        bar[3] = (2 - (n - 7), bar[3][1])
        bar[1] = (bar[1][0], 15 + (n - 7))
    g = build_graph(n, [(a - 1, b - 1) for a, b in labelled])
    lift = max(0, n - 7)
    x0 = min(lo for lo, _ in bar.values())
    vertices = [
        VertexSegment(v - 1, level[v] + lift, 4 * (bar[v][0] - x0), 4 * (bar[v][1] - x0))
        for v in range(1, n + 1)
    ]
    edges = []
    for eid, (a, b) in enumerate(labelled):
        ya, yb = level[a] + lift, level[b] + lift
        edges.append(EdgeSegment(eid, a - 1, b - 1, 4 * (x_of[a, b] - x0), min(ya, yb), max(ya, yb)))
    index = {pair: eid for eid, pair in enumerate(labelled)}
    crossings = sorted((index[pair], w - 1) for pair, w in crossing_labels)
    return g, VisibilityLayout(vertices, edges, crossings)
