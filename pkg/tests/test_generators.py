from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onevis import io
from onevis.augmentation import planar_maximal_augment, triconnected_components
from onevis.embedding import planarize, validate_embedding
from onevis.generators import (
    BadRim,
    TooSmall,
    family_counts,
    gen_config,
    gen_Gn,
    gen_K7_minus_e,
    gen_random_1planar,
    gen_XQ,
)
from onevis.graph import EdgeKind
from onevis.verification import verify_layout
from oracles import xq_counts


@pytest.mark.parametrize("rim", [6, 8, 10, 20, 64])
def test_xq_counts(rim):
    emb = gen_XQ(rim)
    n, m = xq_counts(rim)
    assert (emb.graph.n, emb.graph.m) == (n, m) == (family_counts("XQ", rim).n, family_counts("XQ", rim).m)
    assert m == 4 * n - 8
    assert validate_embedding(emb).ok
    assert len(emb.crossings) == n - 2


def test_xq8():
    emb = gen_XQ(8)
    assert (emb.graph.n, emb.graph.m) == (10, 32)


@pytest.mark.parametrize("rim", [4, 5, 7])
def test_bad_rim(rim):
    with pytest.raises(BadRim):
        gen_XQ(rim)


@pytest.mark.parametrize("rim", [6, 8, 12])
def test_xq_triconnected_and_maximal(rim):
    emb = gen_XQ(rim)
    assert triconnected_components(emb).triconnected
    assert planar_maximal_augment(emb).graph.m == emb.graph.m


def test_k7_minus_e():
    g, hint = gen_K7_minus_e()
    assert g.m == 20 == 4 * 7 - 8
    assert sorted(Counter(g.degree(v) for v in range(7)).items()) == [(5, 2), (6, 5)]
    assert verify_layout(hint, g).passed


def test_g7_is_k7_minus_e():
    a, ha = gen_K7_minus_e()
    b, hb = gen_Gn(7)
    assert a.edges == b.edges
    assert io.layout_to_dict(ha) == io.layout_to_dict(hb)


@pytest.mark.parametrize("n", [8, 9, 20, 50])
def test_gn(n):
    g, hint = gen_Gn(n)
    assert g.m == 4 * n - 8
    assert verify_layout(hint, g).passed


def test_gn_too_small():
    with pytest.raises(TooSmall):
        gen_Gn(6)


def test_x_config():
    emb = gen_config("X")
    assert emb.graph.n == 4
    assert {e.key for e in emb.graph.edges} == {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}
    assert len(emb.crossings) == 1


def test_b_config_crossing_outside():
    emb = gen_config("B")
    p = planarize(emb)
    outer = p.faces[p.outer]
    assert any(p.pm.dummy[p.pm.origin(d)] for d in outer)


def test_w_config():
    emb = gen_config("W")
    assert len(emb.crossings) == 2
    g = emb.graph
    simple = [e.key for e in g.edges]
    # the base is the pair the two kites share
    shared = {v for v in range(g.n) if g.degree(v) == max(g.degree(x) for x in range(g.n))}
    assert len(shared) == 2
    from oracles import connected_after_removal

    assert not connected_after_removal(g.n, simple, shared)


def test_plain_configs_have_no_kites():
    for kind in "BWX":
        emb = gen_config(kind, augmented=False)
        assert all(e.kind is EdgeKind.ORIGINAL for e in emb.graph.edges)
        assert validate_embedding(emb).ok


def test_random_small():
    emb = gen_random_1planar(4, 1)
    assert validate_embedding(emb).ok
    assert len(emb.crossings) <= 1


def test_random_determinism():
    a = io.dumps(io.embedding_to_dict(gen_random_1planar(60, 7)))
    b = io.dumps(io.embedding_to_dict(gen_random_1planar(60, 7)))
    assert a == b


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 120), st.integers(0, 10**6))
def test_random_valid(n, seed):
    emb = gen_random_1planar(n, seed)
    assert emb.graph.n == n
    assert validate_embedding(emb).ok


def test_random_100():
    assert validate_embedding(gen_random_1planar(100, 3)).ok
