from __future__ import annotations

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from onevis.augmentation import SeparationStructure, insert_separation_edges, normalize, planar_maximal_augment
from onevis.embedding import planarize
from onevis.generators import gen_random_1planar, gen_XQ
from onevis.planar_layout import build_skeleton, dual_distances, planar_visibility, st_number
from oracles import is_st_numbering, longest_path_levels, o1_hits


def skeleton_of(emb, augment=False):
    if augment:
        emb = insert_separation_edges(normalize(planar_maximal_augment(emb)), SeparationStructure([]))
    return build_skeleton(planarize(emb))


def edges_of(skel):
    pm = skel.pm
    return [(pm.origin(2 * i), pm.target(2 * i)) for i in pm.alive_edges()]


def test_triangle_numbering(triangle):
    skel = skeleton_of(triangle)
    st = st_number(skel)
    (x,) = set(range(3)) - {st.s, st.t}
    assert st.number[x] == 1


def test_c4_numbering(c4):
    skel = skeleton_of(c4)
    st = st_number(skel)
    assert is_st_numbering(st.number, edges_of(skel), st.s, st.t)
    assert sorted(st.number.values()) == [0, 1, 2, 3]


def test_k4_numbering_among_valid_orders(k4):
    skel = skeleton_of(k4)
    st = st_number(skel)
    edges = edges_of(skel)
    middle = [v for v in range(4) if v not in (st.s, st.t)]
    valid = []
    for order in itertools.permutations(middle):
        number = {st.s: 0, st.t: 3, order[0]: 1, order[1]: 2}
        if is_st_numbering(number, edges, st.s, st.t):
            valid.append(number)
    assert len(valid) == 2
    assert st.number in valid


def test_triangle_distances(triangle):
    skel = skeleton_of(triangle)
    d = dual_distances(skel, st_number(skel))
    assert sorted(d.delta.values()) == [0, 1, 2]
    assert d.h == 3
    # two columns left of t*, one of which carries the (s, t) edge
    assert d.w == 3


def test_c4_levels(c4):
    skel = skeleton_of(c4)
    d = dual_distances(skel, st_number(skel))
    assert d.h == 4  # no chord: the cycle is a single path from s to t


def test_xq8_skeleton_sizes():
    skel = skeleton_of(gen_XQ(8), augment=True)
    d = dual_distances(skel, st_number(skel))
    n = 10
    assert d.h <= n
    assert d.w - 2 <= 2 * n - 5


def test_triangle_layout(triangle):
    skel = skeleton_of(triangle)
    layout = planar_visibility(skel, dual_distances(skel, st_number(skel)))
    assert len(layout.vertices) == 3 and len(layout.edges) == 3
    assert not layout.crossings
    assert o1_hits(layout) == set()


def test_k4_layout_fits(k4):
    skel = skeleton_of(k4)
    layout = planar_visibility(skel, dual_distances(skel, st_number(skel)))
    width, height = layout.extent()
    assert height <= 3 and width <= 4 * 4
    assert o1_hits(layout) == set()


def _check_planar_properties(skel):
    st = st_number(skel)
    d = dual_distances(skel, st)
    edges = edges_of(skel)
    assert is_st_numbering(st.number, edges, st.s, st.t)
    arcs = [(u, v) if st.number[u] < st.number[v] else (v, u) for u, v in edges]
    for u, v in arcs:
        assert d.delta[u] < d.delta[v]
    layout = planar_visibility(skel, d)
    for b in layout.vertices:
        if b.vertex not in (st.s, st.t):
            assert b.x_lo <= b.x_hi
    return st, d, arcs, layout


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 14), st.integers(0, 100_000))
def test_levels_match_path_enumeration(n, seed):
    emb = gen_random_1planar(max(n, 4), seed, cross_rate=0.0)
    skel = skeleton_of(emb, augment=True)
    st, d, arcs, layout = _check_planar_properties(skel)
    assert d.delta == longest_path_levels(list(st.number), arcs)
    assert o1_hits(layout) == set()


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 60), st.integers(0, 100_000))
def test_skeleton_properties_with_crossings(n, seed):
    skel = skeleton_of(gen_random_1planar(n, seed), augment=True)
    st, d, arcs, layout = _check_planar_properties(skel)
    # only crossing faces may hold extra arcs, so levels dominate plain paths
    plain = longest_path_levels(list(st.number), arcs) if n <= 14 else None
    if plain is not None:
        assert all(d.delta[v] >= plain[v] for v in plain)
    hits = o1_hits(layout)
    assert hits == set()


def test_kite_components_side_by_side():
    from test_augmentation import kites
    from onevis.augmentation import triconnected_components

    emb = kites(shared_edge=False)
    out = insert_separation_edges(emb, triconnected_components(emb))
    skel = build_skeleton(planarize(out))
    d = dual_distances(skel, st_number(skel))
    layout = planar_visibility(skel, d)
    cols = sorted(4 * d.delta_star[f] for f in skel.crossing_faces)
    (sep,) = [e for e in layout.edges if e.edge == emb.graph.m]
    # the separation edge is drawn strictly left of the right kite's column
    assert cols[0] < cols[1]
    assert cols[0] <= sep.x < cols[1]
