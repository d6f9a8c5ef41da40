"""Multi-edge capable undirected graphs with provenance-tagged edges."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoop(GraphError):
    pass


class EndpointOutOfRange(GraphError):
    pass


class IllegalParallelEdge(GraphError):
    pass


class EdgeKind(str, enum.Enum):
    ORIGINAL = "original"
    AUGMENTED = "augmented"
    SEPARATION = "separation"


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    kind: EdgeKind = EdgeKind.ORIGINAL

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError(f"vertex {w} is not an endpoint of edge {self.id}")

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices ``0..n-1``.

    Edges are identified by id, never by endpoint pair: parallel copies of an
    edge are legal as long as one of the two is of kind ``separation``.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge(self, eid: int) -> Edge:
        return self.edges[eid]

    def neighbors(self, v: int) -> list[int]:
        return [self.edges[e].other(v) for e in self.adjacency[v]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def simple_edges(self, kinds: Iterable[EdgeKind] | None = None) -> set[tuple[int, int]]:
        """Distinct endpoint pairs, optionally restricted to some kinds."""
        allowed = set(kinds) if kinds is not None else None
        return {e.key for e in self.edges if allowed is None or e.kind in allowed}

    def with_edges(self, extra: Sequence[tuple[int, int, EdgeKind]]) -> "Graph":
        """A new graph with ``extra`` edges appended (ids continue from m)."""
        pairs = [(e.u, e.v, e.kind) for e in self.edges] + list(extra)
        return build_graph(self.n, pairs)


def _parse_kind(kind: EdgeKind | str) -> EdgeKind:
    return kind if isinstance(kind, EdgeKind) else EdgeKind(kind)


def build_graph(n: int, edge_list: Iterable[Sequence]) -> Graph:
    """Build a graph from ``(u, v)`` or ``(u, v, kind)`` tuples.

    Edge ids follow input order.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    edges: list[Edge] = []
    adjacency: list[list[int]] = [[] for _ in range(n)]
    seen: dict[tuple[int, int], list[EdgeKind]] = {}
    for eid, item in enumerate(edge_list):
        u, v = int(item[0]), int(item[1])
        kind = _parse_kind(item[2]) if len(item) > 2 else EdgeKind.ORIGINAL
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge {eid}: ({u}, {v}) with n={n}")
        if u == v:
            raise SelfLoop(f"edge {eid}: self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        kinds = seen.setdefault(key, [])
        if kinds and kind is not EdgeKind.SEPARATION and any(
            k is not EdgeKind.SEPARATION for k in kinds
        ):
            raise IllegalParallelEdge(f"edge {eid}: parallel ({u}, {v}) without a separation copy")
        kinds.append(kind)
        edges.append(Edge(eid, u, v, kind))
        adjacency[u].append(eid)
        adjacency[v].append(eid)
    return Graph(n, tuple(edges), tuple(tuple(a) for a in adjacency))


@dataclass(frozen=True)
class DensityReport:
    n: int
    m: int
    bound: int | None
    passed: bool
    tight: bool

    def __str__(self) -> str:
        if self.bound is None:
            return f"n={self.n} m={self.m}: {'pass' if self.passed else 'fail'} (small graph)"
        rel = "<=" if self.passed else ">"
        return f"n={self.n} m={self.m} {rel} 4n-8={self.bound}: {'pass' if self.passed else 'fail'}"


def check_density(g: Graph) -> DensityReport:
    """Compare the number of distinct non-separation edges with ``4n - 8``."""
    simple = g.simple_edges([EdgeKind.ORIGINAL, EdgeKind.AUGMENTED])
    m = len(simple)
    if g.n < 3:
        # 4n-8 is negative here; any simple graph is fine
        return DensityReport(g.n, m, None, True, False)
    bound = 4 * g.n - 8
    return DensityReport(g.n, m, bound, m <= bound, m == bound)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[list[int]]  # edge ids per block
    cut_vertices: list[int]

    def block_vertices(self, g: Graph) -> list[set[int]]:
        return [{x for e in b for x in (g.edges[e].u, g.edges[e].v)} for b in self.blocks]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components (by edge) and articulation points.

    Iterative Hopcroft-Tarjan; parallel edges stay in the same block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    out: list[list[int]] = []
    stack: list[int] = []
    time = 0
    for root in range(n):
        if disc[root] != -1 or not g.adjacency[root]:
            continue
        disc[root] = low[root] = time
        time += 1
        root_children = 0
        # frames: (vertex, parent edge id, iterator position)
        frames: list[list[int]] = [[root, -1, 0]]
        while frames:
            frame = frames[-1]
            v, pe, i = frame
            adj = g.adjacency[v]
            if i < len(adj):
                frame[2] += 1
                eid = adj[i]
                if eid == pe:
                    continue
                w = g.edges[eid].other(v)
                if disc[w] == -1:
                    stack.append(eid)
                    disc[w] = low[w] = time
                    time += 1
                    if v == root:
                        root_children += 1
                    frames.append([w, eid, 0])
                elif disc[w] < disc[v]:
                    stack.append(eid)
                    low[v] = min(low[v], disc[w])
                continue
            frames.pop()
            if not frames:
                break
            parent = frames[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    is_cut[parent] = True
                comp: list[int] = []
                while True:
                    e = stack.pop()
                    comp.append(e)
                    if e == pe:
                        break
                out.append(sorted(comp))
        if root_children > 1:
            is_cut[root] = True
    out.sort()
    return BlockDecomposition(out, [v for v in range(n) if is_cut[v]])


def is_biconnected(g: Graph) -> bool:
    if g.n < 3:
        return g.n == 2 and g.m >= 1 or g.n == 1
    if any(not a for a in g.adjacency):
        return False
    dec = blocks(g)
    return len(dec.blocks) == 1


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, todo = [s], [s]
        while todo:
            v = todo.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    todo.append(w)
        comps.append(sorted(comp))
    return comps
