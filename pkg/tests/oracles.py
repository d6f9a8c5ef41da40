"""Independent reference computations used by the tests.

Nothing here calls into the construction code; oracles only read plain
attributes of the data types.
"""

from __future__ import annotations

import itertools
from collections import defaultdict


# -- O1: pairwise segment intersection ----------------------------------------------


def o1_hits(layout) -> set[tuple[str, int, int]]:
    """Every intersecting pair by direct comparison of all segments.

    Bars are closed; edge segments are open at both ends.
    """
    hits = set()
    bars = list(layout.vertices)
    segs = list(layout.edges)
    for a, b in itertools.combinations(bars, 2):
        if a.y == b.y and max(a.x_lo, b.x_lo) <= min(a.x_hi, b.x_hi):
            hits.add(("vv", min(a.vertex, b.vertex), max(a.vertex, b.vertex)))
    for a, b in itertools.combinations(segs, 2):
        if a.x == b.x and max(a.y_lo, b.y_lo) < min(a.y_hi, b.y_hi):
            hits.add(("ee", min(a.edge, b.edge), max(a.edge, b.edge)))
    for e in segs:
        for bar in bars:
            if e.y_lo < bar.y < e.y_hi and bar.x_lo <= e.x <= bar.x_hi:
                hits.add(("ve", e.edge, bar.vertex))
    return hits


def o1_counts(layout) -> tuple[dict[int, int], dict[int, int]]:
    """Crossings per vertex and per edge according to O1."""
    per_v: dict[int, int] = defaultdict(int)
    per_e: dict[int, int] = defaultdict(int)
    for kind, a, b in o1_hits(layout):
        if kind == "ve":
            per_e[a] += 1
            per_v[b] += 1
    return per_v, per_e


# -- O2: Euler count -------------------------------------------------------------------


def o2_faces(n_vertices: int, n_edges: int, components: int = 1) -> int:
    return n_edges - n_vertices + 1 + components


# -- O3: brute force -------------------------------------------------------------------


def connected_after_removal(n: int, edges, removed: set[int]) -> bool:
    keep = [v for v in range(n) if v not in removed]
    if not keep:
        return True
    adj = defaultdict(set)
    for u, v in edges:
        if u not in removed and v not in removed:
            adj[u].add(v)
            adj[v].add(u)
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    return len(seen) == len(keep)


def separation_pairs(n: int, edges) -> list[tuple[int, int]]:
    return [
        (u, v) for u, v in itertools.combinations(range(n), 2) if not connected_after_removal(n, edges, {u, v})
    ]


def cut_vertices(n: int, edges) -> set[int]:
    return {v for v in range(n) if not connected_after_removal(n, edges, {v})}


def all_matchings(cands: dict[int, tuple[int, ...]]) -> list[dict[int, int]]:
    """All injective choices of one candidate per key."""
    keys = sorted(cands)
    out = []
    for pick in itertools.product(*(cands[k] for k in keys)):
        if len(set(pick)) == len(pick):
            out.append(dict(zip(keys, pick)))
    return out


def is_st_numbering(number: dict[int, int], edges, s: int, t: int) -> bool:
    nb = defaultdict(list)
    for u, v in edges:
        nb[u].append(v)
        nb[v].append(u)
    if number[s] != 0 or number[t] != len(number) - 1:
        return False
    for v, k in number.items():
        if v in (s, t):
            continue
        ks = [number[w] for w in nb[v]]
        if not (min(ks) < k < max(ks)):
            return False
    return True


def longest_path_levels(vertices, arcs) -> dict[int, int]:
    """Longest path length into each vertex by enumerating every path."""
    succ = defaultdict(list)
    for a, b in arcs:
        succ[a].append(b)
    best = {v: 0 for v in vertices}

    def walk(v: int, length: int) -> None:
        best[v] = max(best[v], length)
        for w in succ[v]:
            walk(w, length + 1)

    for v in vertices:
        walk(v, 0)
    return best


# -- O4: family edge counts ---------------------------------------------------------------


def xq_counts(rim: int) -> tuple[int, int]:
    n = rim + 2
    quad_edges = 2 * n - 4
    quad_faces = quad_edges - n + 2
    return n, quad_edges + 2 * quad_faces
