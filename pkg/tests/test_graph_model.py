from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onevis.generators import gen_Gn, gen_K7_minus_e, gen_XQ
from onevis.graph import (
    EdgeKind,
    EndpointOutOfRange,
    IllegalParallelEdge,
    SelfLoop,
    blocks,
    build_graph,
    check_density,
)
from oracles import connected_after_removal, cut_vertices


def k7_minus(missing):
    return build_graph(7, [p for p in itertools.combinations(range(7), 2) if p != missing])


def test_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3
    assert [g.degree(v) for v in range(3)] == [2, 2, 2]


def test_parallel_original_edges_rejected():
    with pytest.raises(IllegalParallelEdge):
        build_graph(2, [(0, 1), (0, 1)])


def test_parallel_helper_copy_allowed():
    g = build_graph(2, [(0, 1), (1, 0, EdgeKind.SEPARATION)])
    assert g.m == 2
    assert g.simple_edges() == {(0, 1)}


@pytest.mark.parametrize("edges, exc", [([(1, 1)], SelfLoop), ([(0, 5)], EndpointOutOfRange)])
def test_bad_edges(edges, exc):
    with pytest.raises(exc):
        build_graph(3, edges)


def test_k7_minus_one_edge():
    # vertices 2 and 7 in one-based numbering
    g = k7_minus((1, 6))
    assert g.m == 20


def test_density():
    r = check_density(k7_minus((1, 6)))
    assert r.passed and r.tight and r.bound == 20
    k7 = build_graph(7, list(itertools.combinations(range(7), 2)))
    r = check_density(k7)
    assert not r.passed and r.m == 21
    assert check_density(build_graph(2, [(0, 1)])).passed


def test_density_ignores_helper_copies():
    g = k7_minus((1, 6)).with_edges([(0, 1, EdgeKind.SEPARATION)])
    assert check_density(g).passed


@pytest.mark.parametrize("rim", [6, 8, 12])
def test_optimal_families_are_tight(rim):
    assert check_density(gen_XQ(rim).graph).tight
    assert check_density(gen_K7_minus_e()[0]).tight
    assert check_density(gen_Gn(rim + 3)[0]).tight


def test_bowtie_blocks():
    d = blocks(build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]))
    assert len(d.blocks) == 2
    assert set(d.cut_vertices) == {2}


def test_cycle_is_one_block():
    d = blocks(build_graph(5, [(i, (i + 1) % 5) for i in range(5)]))
    assert len(d.blocks) == 1 and not d.cut_vertices


def test_path_blocks_match_oracle():
    edges = [(0, 1), (1, 2), (2, 3)]
    d = blocks(build_graph(4, edges))
    assert len(d.blocks) == 3
    assert all(len(b) == 1 for b in d.blocks)
    assert set(d.cut_vertices) == cut_vertices(4, edges)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(2, 10))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return n, chosen


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_blocks_partition_edges_and_cut_vertices(data):
    n, edges = data
    g = build_graph(n, edges)
    d = blocks(g)
    flat = sorted(e for b in d.blocks for e in b)
    assert flat == list(range(g.m))
    # brute-force cut vertices, restricted to the vertex's own component
    expected = set()
    for v in range(n):
        if g.degree(v) < 2:
            continue
        nb = g.neighbors(v)
        # v is a cut vertex iff two of its neighbours get separated
        keep = [w for w in range(n) if w != v]
        adj = {w: set() for w in keep}
        for a, b in edges:
            if v not in (a, b):
                adj[a].add(b)
                adj[b].add(a)
        seen = {nb[0]}
        stack = [nb[0]]
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        if any(w not in seen for w in nb):
            expected.add(v)
    assert set(d.cut_vertices) == expected
    # removing a non-cut vertex keeps each block connected
    for verts in d.block_vertices(g):
        for v in verts - expected:
            inner = [(a, b) for a, b in edges if a in verts and b in verts]
            relabel = {w: i for i, w in enumerate(sorted(verts))}
            if len(verts) > 2:
                assert connected_after_removal(
                    len(verts), [(relabel[a], relabel[b]) for a, b in inner], {relabel[v]}
                )
