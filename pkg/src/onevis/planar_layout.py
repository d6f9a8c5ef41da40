"""Planar visibility layout of the crossing-free skeleton.

The skeleton is the augmented planarization with every crossing point and
its four half-edges removed, so each crossing pair leaves a quadrangular
face behind.  The skeleton is oriented by an st-numbering; vertex levels are
longest-path distances from ``s`` and face columns are longest-path
distances in the dual from the left part of the outer face.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .embedding import Planarization
from .graph import Graph
from .layout import EdgeSegment, VertexSegment, VisibilityLayout
from .planemap import PlaneMap


class NotBiconnected(ValueError):
    pass


class STNotOuterEdge(ValueError):
    pass


class CycleDetected(RuntimeError):
    pass


class NotQuadrangle(ValueError):
    pass


@dataclass
class Skeleton:
    graph: Graph
    pm: PlaneMap
    faces: list[list[int]]
    face_of: dict[int, int]
    outer: int
    base: int  # dart s -> t with the outer face on its left
    crossing_faces: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def s(self) -> int:
        return self.pm.origin(self.base)

    @property
    def t(self) -> int:
        return self.pm.target(self.base)

    @property
    def vertices(self) -> list[int]:
        return [v for v in range(self.graph.n) if self.pm.first[v] != -1]


def build_skeleton(p: Planarization) -> Skeleton:
    """Drop crossing points from an augmented planarization."""
    pm = p.pm.copy()
    anchors: dict[int, int] = {}
    for k, x in enumerate(p.dummy_of):
        h = pm.first[x]
        walk = pm.face_walk(h)
        if len(walk) != 3:
            raise NotQuadrangle(f"crossing {p.embedding.crossings[k]} is not enclosed by kite edges")
        anchors[k] = walk[1]
    for x in p.dummy_of:
        for d in list(pm.darts_at(x)):
            pm.remove_edge(d >> 1)
    faces, face_of = pm.faces()
    crossing_faces: dict[int, tuple[int, int]] = {}
    for k, d in anchors.items():
        f = face_of[d]
        if len(faces[f]) != 4 or f in crossing_faces:
            raise NotQuadrangle(f"crossing {p.embedding.crossings[k]} does not own a quadrangle")
        crossing_faces[f] = p.embedding.crossings[k]
    base = _choose_base(p, pm, faces, face_of)
    outer = face_of[base]
    if outer in crossing_faces:
        raise NotQuadrangle("a crossing lies in the outer face")
    return Skeleton(p.embedding.graph, pm, faces, face_of, outer, base, crossing_faces)


def _choose_base(p: Planarization, pm: PlaneMap, faces, face_of) -> int:
    emb = p.embedding
    if emb.outer_dart is not None:
        d = p.dart_of[emb.outer_dart]
        if d in face_of and not (pm.dummy[pm.origin(d)] or pm.dummy[pm.target(d)]):
            return d
        # the outer face of the planarization may still be identified
        walk = p.faces[p.outer]
        for x in walk:
            if x in face_of:
                return min(faces[face_of[x]], key=lambda y: _edge_key(pm, y))
    outer = max(range(len(faces)), key=lambda f: (len(faces[f]), -f))
    return min(faces[outer], key=lambda y: _edge_key(pm, y))


def _edge_key(pm: PlaneMap, d: int) -> tuple[int, int, int]:
    u, v = pm.origin(d), pm.target(d)
    return (min(u, v), max(u, v), d)


# -- st-numbering --------------------------------------------------------------


@dataclass
class StNumbering:
    s: int
    t: int
    number: dict[int, int]  # vertex -> 0..n-1

    @property
    def order(self) -> list[int]:
        return sorted(self.number, key=self.number.__getitem__)

    def forward(self, pm: PlaneMap, d: int) -> bool:
        return self.number[pm.origin(d)] < self.number[pm.target(d)]


def st_number(skel: Skeleton, s: int | None = None, t: int | None = None) -> StNumbering:
    """Lowpoint-based st-numbering with the DFS entering ``t`` first."""
    pm = skel.pm
    s = skel.s if s is None else s
    t = skel.t if t is None else t
    st_dart = next((d for d in skel.faces[skel.outer] if {pm.origin(d), pm.target(d)} == {s, t}), None)
    if st_dart is None:
        raise STNotOuterEdge(f"({s}, {t}) is not an edge of the outer face")
    verts = skel.vertices
    pre: dict[int, int] = {s: 0}
    parent: dict[int, int] = {s: -1}
    low: dict[int, int] = {s: 0}
    preorder = [s]

    def nbrs(v: int) -> list[int]:
        out = [pm.target(d) for d in pm.darts_at(v)]
        if v == s:
            out.remove(t)
            out.insert(0, t)
        return out

    stack = [(s, iter(nbrs(s)))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w not in pre:
                pre[w] = low[w] = len(preorder)
                parent[w] = v
                preorder.append(w)
                stack.append((w, iter(nbrs(w))))
                advanced = True
                break
            if w != parent[v]:
                low[v] = min(low[v], pre[w])
        if not advanced:
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
    if len(preorder) != len(verts):
        raise NotBiconnected("skeleton is disconnected")
    nxt: dict[int, int | None] = {s: t, t: None}
    prv: dict[int, int | None] = {s: None, t: s}
    minus = {s: True}
    for v in preorder[2:]:
        par = parent[v]
        if minus.get(preorder[low[v]], False):
            a, b = prv[par], par
            minus[par] = False
        else:
            a, b = par, nxt[par]
            minus[par] = True
        prv[v], nxt[v] = a, b
        if a is not None:
            nxt[a] = v
        if b is not None:
            prv[b] = v
    head = s
    while prv[head] is not None:
        head = prv[head]
    number: dict[int, int] = {}
    x: int | None = head
    while x is not None:
        number[x] = len(number)
        x = nxt[x]
    st = StNumbering(s, t, number)
    if number[s] != 0 or number[t] != len(number) - 1:
        raise NotBiconnected("st-numbering does not run from s to t")
    for v in verts:
        if v in (s, t):
            continue
        ks = [number[pm.target(d)] for d in pm.darts_at(v)]
        if not (min(ks) < number[v] < max(ks)):
            raise NotBiconnected(f"vertex {v} has no lower or no higher neighbour")
    return st


# -- distances -----------------------------------------------------------------


@dataclass
class DistanceMaps:
    st: StNumbering
    delta: dict[int, int]
    delta_star: list[int]  # per face; index len(faces) is the right outer part
    s_face: int
    t_face: int

    @property
    def h(self) -> int:
        return max(self.delta.values()) + 1

    @property
    def w(self) -> int:
        return self.delta_star[self.t_face] + 1


def _diamond_middles(skel: Skeleton, st: StNumbering, f: int) -> tuple[int, int] | None:
    walk = skel.faces[f]
    if sum(st.forward(skel.pm, d) for d in walk) != 2:
        return None
    vs = sorted((skel.pm.origin(d) for d in walk), key=st.number.__getitem__)
    return vs[1], vs[2]


def dual_distances(skel: Skeleton, st: StNumbering) -> DistanceMaps:
    """Longest-path levels and dual columns.

    The two middle vertices of a diamond-shaped crossing face are joined by
    an extra arc so that they never share a level.
    """
    pm = skel.pm
    num = st.number
    extra: dict[int, list[int]] = {}
    for f in skel.crossing_faces:
        mid = _diamond_middles(skel, st, f)
        if mid is not None:
            extra.setdefault(mid[1], []).append(mid[0])
    delta: dict[int, int] = {}
    for v in st.order:
        best = 0
        for d in pm.darts_at(v):
            u = pm.target(d)
            if num[u] < num[v]:
                best = max(best, delta[u] + 1)
        for u in extra.get(v, ()):
            best = max(best, delta[u] + 1)
        delta[v] = best

    nf = len(skel.faces)
    s_face, t_face = skel.outer, nf
    succ: list[list[int]] = [[] for _ in range(nf + 1)]
    indeg = [0] * (nf + 1)
    for i in pm.alive_edges():
        d = 2 * i if st.forward(pm, 2 * i) else 2 * i + 1
        a, b = skel.face_of[d], skel.face_of[d ^ 1]
        if b == skel.outer:
            b = t_face
        succ[a].append(b)
        indeg[b] += 1
    dist = [0] * (nf + 1)
    queue = deque(f for f in range(nf + 1) if indeg[f] == 0)
    seen = 0
    while queue:
        f = queue.popleft()
        seen += 1
        for g in succ[f]:
            dist[g] = max(dist[g], dist[f] + 1)
            indeg[g] -= 1
            if indeg[g] == 0:
                queue.append(g)
    if seen != nf + 1:
        raise CycleDetected("dual graph is not acyclic")
    return DistanceMaps(st, delta, dist, s_face, t_face)


# -- visibility ------------------------------------------------------------------


def vertex_faces(skel: Skeleton, st: StNumbering, v: int) -> tuple[int, int]:
    """Faces left and right of ``v`` (outer parts mapped to s* and t*)."""
    pm = skel.pm
    left = right = None
    for d in pm.darts_at(v):
        out_d = st.forward(pm, d)
        out_n = st.forward(pm, pm.ccw_next[d])
        if out_d and not out_n:
            left = skel.face_of[d]
        elif not out_d and out_n:
            right = skel.face_of[d]
    if left is None or right is None:
        raise NotBiconnected(f"vertex {v} is not bimodal")
    if right == skel.outer:
        right = len(skel.faces)
    return left, right


def planar_visibility(skel: Skeleton, dist: DistanceMaps) -> VisibilityLayout:
    """Bars at their levels spanning the dual columns of their side faces."""
    pm = skel.pm
    st = dist.st
    ds = dist.delta_star
    # no edge uses the column of t*, so s and t stop one column short of it
    full = 4 * max(dist.w - 2, 0)
    vertices = []
    for v in sorted(dist.delta):
        if v in (st.s, st.t):
            lo, hi = 0, full
        else:
            lf, rf = vertex_faces(skel, st, v)
            lo, hi = 4 * ds[lf], 4 * (ds[rf] - 1)
        vertices.append(VertexSegment(v, dist.delta[v], lo, hi))
    edges = []
    for i in pm.alive_edges():
        d = 2 * i if st.forward(pm, 2 * i) else 2 * i + 1
        e = skel.graph.edges[pm.owner(d)]
        y0, y1 = dist.delta[e.u], dist.delta[e.v]
        edges.append(EdgeSegment(e.id, e.u, e.v, 4 * ds[skel.face_of[d]], min(y0, y1), max(y0, y1)))
    edges.sort(key=lambda s: s.edge)
    return VisibilityLayout(vertices, edges, [])
