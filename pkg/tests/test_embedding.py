from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onevis.embedding import InvalidEmbedding, OnePlanarEmbedding, faces, planarize, validate_embedding
from onevis.generators import gen_config, gen_random_1planar, gen_XQ
from onevis.graph import build_graph
from oracles import o2_faces


def test_plane_k4(k4):
    p = planarize(k4)
    assert p.n_vertices == 4 and p.n_edges == 6
    assert len(p.faces) == 4 == o2_faces(4, 6)


def test_k5_one_crossing(k5_one_crossing):
    p = planarize(k5_one_crossing)
    assert len(p.dummy_of) == 1
    assert (p.n_vertices, p.n_edges, len(p.faces)) == (6, 12, 8)
    assert len(p.faces) == o2_faces(6, 12)


def test_x_gadget():
    emb = gen_config("X")
    p = planarize(emb)
    assert p.pm.degree(p.dummy_of[0]) == 4
    # K4 with one crossing pair: V=5, E=8
    assert len(p.faces) == o2_faces(5, 8)


def test_triangle_and_cube(triangle, cube):
    assert len(faces(planarize(triangle))) == 2
    assert len(faces(planarize(cube))) == 6


@pytest.mark.parametrize("rim", [6, 8, 14])
def test_xq_euler(rim):
    emb = gen_XQ(rim)
    p = planarize(emb)
    n1 = emb.graph.n + len(emb.crossings)
    m1 = emb.graph.m + 2 * len(emb.crossings)
    assert p.n_vertices == n1 and p.n_edges == m1
    assert len(p.faces) == o2_faces(n1, m1)
    assert validate_embedding(emb).ok


def test_edge_crossed_twice():
    emb = gen_XQ(8)
    a, b = emb.crossings[0]
    c, d = emb.crossings[1]
    bad = OnePlanarEmbedding.create(emb.graph, emb.rotation, list(emb.crossings) + [(a, d)], emb.outer_dart)
    report = validate_embedding(bad)
    assert any("crossed twice" in v for v in report.violations)
    with pytest.raises(InvalidEmbedding):
        planarize(bad)


def test_adjacent_edges_cross():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    emb = OnePlanarEmbedding.create(g, [(0, 2), (1, 0), (2, 1)], [(0, 1)])
    assert any("adjacent" in v for v in validate_embedding(emb).violations)


def _contract(p):
    return Counter((min(u, v), max(u, v)) for _, u, v in p.contracted_edges())


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 40), st.integers(0, 10_000))
def test_planarize_roundtrip_and_dart_cover(n, seed):
    emb = gen_random_1planar(n, seed)
    p = planarize(emb)
    assert _contract(p) == Counter(e.key for e in emb.graph.edges)
    darts = [d for walk in p.faces for d in walk]
    assert len(darts) == len(set(darts)) == 2 * p.n_edges


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 40), st.integers(0, 10_000))
def test_face_limits_after_augmentation(n, seed):
    from onevis.augmentation import planar_maximal_augment

    p = planarize(planar_maximal_augment(gen_random_1planar(n, seed)))
    for walk in p.faces:
        corners = [p.pm.origin(d) for d in walk]
        dummies = sum(p.pm.dummy[v] for v in corners)
        assert len(corners) - dummies <= 4
        assert dummies <= 4
        assert len(walk) <= 8
