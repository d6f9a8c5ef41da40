"""Planar-maximal augmentation, configuration analysis and separation edges.

The augmentation works on the planarization.  Around every crossing point
the four "kite" edges between consecutive end vertices are routed directly
along the crossing half-edges.  An already present copy elsewhere is moved
there (the older routing is dropped) unless that copy is crossed or already
serves another crossing, in which case a parallel separation copy is used.
Afterwards every face without a crossing point is triangulated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .embedding import (
    InvalidEmbedding,
    OnePlanarEmbedding,
    Planarization,
    embedding_from_map,
    planarize,
)
from .graph import EdgeKind, build_graph, blocks
from .planemap import PlaneMap


class NotBiconnected(ValueError):
    pass


class NotTriconnected(ValueError):
    pass


class ConfigKind(str, enum.Enum):
    B = "B"
    W = "W"
    X = "X"


class _Work:
    """Mutable planarization plus the growing edge list of the supergraph."""

    def __init__(self, emb: OnePlanarEmbedding) -> None:
        p = planarize(emb)
        self.n = emb.graph.n
        self.pm: PlaneMap = p.pm.copy()
        self.edges: list[tuple[int, int, EdgeKind]] = [(e.u, e.v, e.kind) for e in emb.graph.edges]
        self.crossed: dict[int, int] = dict(emb.crossing_partner)
        self.dummies: dict[int, tuple[int, int]] = {
            d: pair for d, pair in zip(p.dummy_of, emb.crossings)
        }
        self.outer_ref: int = p.faces[p.outer][0] if p.faces else -1
        self.pairs: dict[tuple[int, int], list[int]] = {}
        for gid, (u, v, _) in enumerate(self.edges):
            self.pairs.setdefault(_key(u, v), []).append(gid)
        self.map_edge: dict[int, int] = {}
        for i in self.pm.alive_edges():
            me = self.pm.edges[i]
            if not (self.pm.dummy[me.tail] or self.pm.dummy[me.head]):
                self.map_edge[me.owner] = i

    # -- edits -------------------------------------------------------------

    def add_edge(self, u: int, v: int, kind: EdgeKind, after_u: int, after_v: int) -> tuple[int, int]:
        gid = len(self.edges)
        self.edges.append((u, v, kind))
        self.pairs.setdefault(_key(u, v), []).append(gid)
        i = self.pm.insert_edge(u, v, gid, after_u, after_v)
        self.map_edge[gid] = i
        return gid, i

    def detach(self, gid: int) -> None:
        """Remove the (uncrossed) graph edge's routing from the map."""
        i = self.map_edge.pop(gid)
        if self.outer_ref >> 1 == i:
            walk = self.pm.face_walk(self.outer_ref)
            self.outer_ref = next(d for d in walk if d >> 1 != i)
        self.pm.remove_edge(i)

    def attach(self, gid: int, u: int, v: int, after_u: int, after_v: int) -> int:
        i = self.pm.insert_edge(u, v, gid, after_u, after_v)
        self.map_edge[gid] = i
        return i

    def embedding(self, outer_ref: int | None = None) -> OnePlanarEmbedding:
        g = build_graph(self.n, self.edges)
        ref = self.outer_ref if outer_ref is None else outer_ref
        return embedding_from_map(g, self.pm, self.dummies, ref if ref >= 0 else None)

    # -- queries -----------------------------------------------------------

    def face_has_dummy(self, d: int) -> bool:
        return any(self.pm.dummy[self.pm.origin(x)] for x in self.pm.face_walk(d))

    def outer_walk(self) -> list[int]:
        return self.pm.face_walk(self.outer_ref)


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# -- kite insertion ------------------------------------------------------------


def _kite_wedges(w: _Work, p: int) -> list[tuple[int, int, int]]:
    """``(h_i, x_i, x_next)`` for the four wedges around crossing point ``p``."""
    hs = list(w.pm.darts_at(p))
    return [(hs[i], w.pm.target(hs[i]), w.pm.target(hs[(i + 1) % 4])) for i in range(4)]


def _along_edge(w: _Work, h: int, x_next: int) -> int | None:
    """Graph edge closing the wedge face of ``h`` into a triangle, if any."""
    walk = w.pm.face_walk(h)
    if len(walk) == 3 and w.pm.target(walk[1]) == x_next and not w.pm.dummy[x_next]:
        return w.pm.owner(walk[1])
    return None


def _insert_kites(w: _Work) -> None:
    claimed: set[int] = set()
    for p in sorted(w.dummies):
        for h, _, x_next in _kite_wedges(w, p):
            gid = _along_edge(w, h, x_next)
            if gid is not None:
                claimed.add(gid)
    for p in sorted(w.dummies):
        for h, x, x_next in _kite_wedges(w, p):
            if _along_edge(w, h, x_next) is not None:
                continue
            existing = w.pairs.get(_key(x, x_next), [])
            movable = [g for g in existing if g not in w.crossed and g not in claimed]
            if movable:
                gid = min(movable)
                w.detach(gid)
            else:
                gid = None
            corner_x = w.pm.face_next(h)
            # the dart leaving x_next on this face precedes h
            corner_next = w.pm.ccw_next[h] ^ 1
            if gid is None:
                kind = EdgeKind.SEPARATION if existing else EdgeKind.AUGMENTED
                gid, i = w.add_edge(x, x_next, kind, corner_x, corner_next)
            else:
                i = w.attach(gid, x, x_next, corner_x, corner_next)
            claimed.add(gid)
            if w.outer_ref in (h, corner_next):
                # keep the outer face away from the new kite triangle
                w.outer_ref = 2 * i + 1


# -- triangulation -------------------------------------------------------------


def _find_chord(w: _Work, verts: list[int], allow_parallel: bool) -> tuple[int, int] | None:
    k = len(verts)

    def ok(i: int, j: int) -> bool:
        a, b = verts[i], verts[j]
        if a == b:
            return False
        return allow_parallel or not w.pairs.get(_key(a, b))

    for i in range(k):
        j = (i + 2) % k
        if ok(i, j):
            return i, j
    for i in range(k):
        for j in range(i + 3, k):
            if (j - i) % k in (1, k - 1):
                continue
            if ok(i, j):
                return i, j
    return None


def _triangulate(w: _Work, allow_parallel: bool = False) -> None:
    todo = []
    seen: set[int] = set()
    for d in list(w.pm.alive_darts()):
        if d in seen:
            continue
        walk = w.pm.face_walk(d)
        seen.update(walk)
        todo.append(d)
    while todo:
        d = todo.pop()
        walk = w.pm.face_walk(d)
        if len(walk) <= 3 or w.face_has_dummy(d):
            continue
        verts = [w.pm.origin(x) for x in walk]
        if allow_parallel and len(set(verts)) == len(verts):
            continue
        chord = _find_chord(w, verts, allow_parallel)
        if chord is None:
            continue
        i, j = chord
        u, v = verts[i], verts[j]
        kind = EdgeKind.SEPARATION if w.pairs.get(_key(u, v)) else EdgeKind.AUGMENTED
        _, mi = w.add_edge(u, v, kind, walk[i], walk[j])
        todo.append(2 * mi)
        todo.append(2 * mi + 1)


def planar_maximal_augment(emb: OnePlanarEmbedding) -> OnePlanarEmbedding:
    """Kite edges around every crossing, then triangulate the planar faces."""
    w = _Work(emb)
    _insert_kites(w)
    _triangulate(w)
    # a face that still repeats a vertex would leave a cut vertex behind
    _triangulate(w, allow_parallel=True)
    return w.embedding()


# -- configurations ------------------------------------------------------------


def _pair_index(emb: OnePlanarEmbedding, pair) -> int:
    a, b = pair
    for k, (x, y) in enumerate(emb.crossings):
        if {x, y} == {a, b}:
            return k
    raise KeyError(f"({a}, {b}) is not a crossing pair")


def classify_configuration(pair, emb: OnePlanarEmbedding) -> ConfigKind:
    """B, W or X for a crossing pair of an augmented embedding.

    The crossing sits in the outer face for B and W; it is a W when the base
    edge closing that outer wedge has a kite wedge of another crossing on its
    far side.
    """
    p = planarize(emb)
    dummy = p.dummy_of[_pair_index(emb, pair)]
    pm = p.pm
    for h in pm.darts_at(dummy):
        if p.face_of[h] != p.outer:
            walk = pm.face_walk(h)
            if len(walk) == 3:
                far = walk[1] ^ 1
                if p.face_of[far] == p.outer and any(pm.dummy[pm.origin(x)] for x in pm.face_walk(far)):
                    # partner of an outer wedge across a shared base
                    return ConfigKind.W
            continue
        walk = pm.face_walk(h)
        if len(walk) != 3:
            return ConfigKind.B
        base = walk[1]
        far = pm.face_walk(base ^ 1)
        if any(pm.dummy[pm.origin(x)] and pm.origin(x) != dummy for x in far):
            return ConfigKind.W
        return ConfigKind.B
    return ConfigKind.X


def normalize(emb: OnePlanarEmbedding) -> OnePlanarEmbedding:
    """Turn an outer B-configuration into an X by rerouting its base.

    Rerouting the base around the other side exchanges the roles of the two
    faces the base separates, so the face beyond the base becomes the outer
    face.  A W-configuration in the outer face is left in place.
    """
    w = _Work(emb)
    walk = w.outer_walk()
    if not any(w.pm.dummy[w.pm.origin(d)] for d in walk):
        return emb
    bases = [d for d in walk if not (w.pm.dummy[w.pm.origin(d)] or w.pm.dummy[w.pm.target(d)])]
    for base in bases:
        if not w.face_has_dummy(base ^ 1):
            return w.embedding(outer_ref=base ^ 1)
    return emb


# -- decomposition -------------------------------------------------------------


@dataclass
class SeparationPair:
    u: int
    v: int
    components: list[list[int]]
    separation_edges: list[int] = field(default_factory=list)


@dataclass
class SeparationStructure:
    pairs: list[SeparationPair]

    @property
    def triconnected(self) -> bool:
        return not self.pairs


def triconnected_components(emb: OnePlanarEmbedding) -> SeparationStructure:
    """Separation pairs with the components hanging at each.

    Uses one articulation-point search per removed vertex (O(n*m)).
    Components are listed in the counter-clockwise rotation order at the
    lower-id vertex of the pair.
    """
    g = emb.graph
    simple = sorted(g.simple_edges())
    if g.n >= 3 and len(blocks(g).blocks) != 1:
        raise NotBiconnected("graph is not 2-connected")
    found: list[tuple[int, int]] = []
    for u in range(g.n):
        keep = [x for x in range(g.n) if x != u]
        index = {x: i for i, x in enumerate(keep)}
        sub = build_graph(len(keep), [(index[a], index[b]) for a, b in simple if u not in (a, b)])
        for c in blocks(sub).cut_vertices:
            v = keep[c]
            if u < v:
                found.append((u, v))
    pairs = []
    for u, v in found:
        comps = _components_without(g, u, v)
        order = _rotation_order(emb, u, v, comps)
        pairs.append(SeparationPair(u, v, [comps[i] for i in order], _copies(g, u, v)))
    return SeparationStructure(pairs)


def _components_without(g, u: int, v: int) -> list[list[int]]:
    label = {u: -1, v: -1}
    comps: list[list[int]] = []
    for s in range(g.n):
        if s in label:
            continue
        label[s] = len(comps)
        comp, todo = [s], [s]
        while todo:
            x = todo.pop()
            for y in g.neighbors(x):
                if y not in label:
                    label[y] = len(comps)
                    comp.append(y)
                    todo.append(y)
        comps.append(sorted(comp))
    return comps


def _rotation_order(emb: OnePlanarEmbedding, u: int, v: int, comps: list[list[int]]) -> list[int]:
    where = {x: i for i, c in enumerate(comps) for x in c}
    order: list[int] = []
    for eid in emb.rotation[u]:
        x = emb.graph.edges[eid].other(u)
        if x != v and where[x] not in order:
            order.append(where[x])
    order += [i for i in range(len(comps)) if i not in order]
    return order


def _copies(g, u: int, v: int) -> list[int]:
    return [e.id for e in g.edges if e.key == _key(u, v) and e.kind is EdgeKind.SEPARATION]


def insert_separation_edges(emb: OnePlanarEmbedding, s: SeparationStructure) -> OnePlanarEmbedding:
    """Separation copies between adjacent components and over an outer crossing.

    Between two consecutive components at ``u`` a copy of ``(u, v)`` is routed
    through the face separating them unless an edge ``(u, v)`` already does
    the job.  The outermost gap is skipped when the outer face carries no
    crossing.  If the outer face holds a crossing, a copy of its base edge
    is drawn around it so that the crossing becomes interior.
    """
    w = _Work(emb)
    pm = w.pm
    for sp in s.pairs:
        where = {x: i for i, c in enumerate(sp.components) for x in c}
        for u, v in ((sp.u, sp.v),):
            darts = list(pm.darts_at(u))
            labels = []
            for d in darts:
                x = w.edges[pm.owner(d)]
                far = x[1] if x[0] == u else x[0]
                labels.append(None if far == v else where.get(far))
            labelled = [i for i, lab in enumerate(labels) if lab is not None]
            k = len(darts)
            for pos, i in enumerate(labelled):
                j = labelled[(pos + 1) % len(labelled)]
                if labels[i] == labels[j]:
                    continue
                between = [darts[(i + t) % k] for t in range(1, (j - i) % k)]
                if any(pm.target(d) == v for d in between):
                    continue
                corner_u = darts[(j - 1) % k]
                walk = pm.face_walk(corner_u)
                if walk == w.outer_walk() and not w.face_has_dummy(corner_u):
                    continue
                corner_v = next((d for d in walk if pm.origin(d) == v), None)
                if corner_v is None:
                    continue
                gid, _ = w.add_edge(u, v, EdgeKind.SEPARATION, corner_u, corner_v)
                sp.separation_edges.append(gid)
    walk = w.outer_walk()
    if any(pm.dummy[pm.origin(d)] for d in walk) and len(walk) == 3:
        base = next(d for d in walk if not (pm.dummy[pm.origin(d)] or pm.dummy[pm.target(d)]))
        a, b = pm.origin(base), pm.target(base)
        _, mi = w.add_edge(a, b, EdgeKind.SEPARATION, base, pm.face_next(base))
        # outer face is now the 2-gon between base and its copy
        return w.embedding(outer_ref=base)
    return w.embedding()
