from __future__ import annotations

import itertools
import json
import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onevis import io
from onevis.cli import embedding_stats, main
from onevis.generators import gen_config, gen_random_1planar, gen_XQ
from onevis.graph import build_graph
from onevis.pipeline import one_visibility
from onevis.svg import render_svg


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 50), st.integers(0, 10**6))
def test_json_round_trips(n, seed):
    emb = gen_random_1planar(n, seed)
    doc = io.embedding_to_dict(emb)
    back = io.embedding_from_dict(io.loads(io.dumps(doc)))
    assert back == emb
    assert io.graph_from_dict(io.loads(io.dumps(io.graph_to_dict(emb.graph)))) == emb.graph
    layout, _ = one_visibility(emb)
    assert io.layout_from_dict(io.loads(io.dumps(io.layout_to_dict(layout)))) == layout


def test_only_integers_accepted():
    doc = io.layout_to_dict(one_visibility(gen_XQ(6))[0])
    doc["vertices"][0]["x_lo"] = 0.5
    with pytest.raises(io.SchemaError):
        io.layout_from_dict(doc)


def test_schema_tag_required():
    doc = io.graph_to_dict(build_graph(2, [(0, 1)]))
    doc["schema"] = "onevis/0"
    with pytest.raises(io.SchemaError):
        io.graph_from_dict(doc)


@pytest.mark.parametrize("show_hidden", [False, True])
def test_svg_element_counts(show_hidden):
    layout, _ = one_visibility(gen_XQ(8))
    svg = render_svg(layout, show_hidden=show_hidden)
    drawn = len(layout.edges) if show_hidden else len(layout.visible_edges())
    assert len(re.findall(r"<rect ", svg)) == len(layout.vertices)
    assert len(re.findall(r"<line ", svg)) == drawn


def test_layout_command(tmp_path, capsys):
    src, out, svg = tmp_path / "xq.json", tmp_path / "l.json", tmp_path / "l.svg"
    assert run(capsys, "gen", "XQ", "--param", 8, "-o", src)[0] == 0
    code, stdout, _ = run(capsys, "layout", src, "-o", out, "--svg", svg)
    assert code == 0
    size = json.loads(stdout)
    assert size["width"] <= 60 and size["height"] <= 9
    assert svg.read_text().startswith("<svg")
    assert run(capsys, "verify", out, src)[0] == 0


def test_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _, err = run(capsys, "layout", bad, "-o", tmp_path / "x.json")
    assert code == 2 and json.loads(err)["error"] == "ParseError"


def test_k7_is_too_dense(tmp_path, capsys):
    g = build_graph(7, list(itertools.combinations(range(7), 2)))
    rotation = [[e.id for e in g.edges if v in (e.u, e.v)] for v in range(7)]
    doc = {
        "schema": io.SCHEMA,
        "type": "embedding",
        "n": 7,
        "edges": [{"u": e.u, "v": e.v} for e in g.edges],
        "rotation": rotation,
        "crossings": [[0, 20]],
        "outer_dart": 0,
    }
    path = tmp_path / "k7.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "layout", path, "-o", tmp_path / "x.json")
    assert code == 2 and json.loads(err)["error"] == "DensityViolation"
    io.write(str(tmp_path / "g.json"), io.graph_to_dict(g))
    assert run(capsys, "check-density", tmp_path / "g.json")[0] == 1


def test_verify_json_and_mismatch(tmp_path, capsys):
    emb = gen_XQ(6)
    layout, _ = one_visibility(emb)
    io.write(str(tmp_path / "l.json"), io.layout_to_dict(layout))
    io.write(str(tmp_path / "g.json"), io.graph_to_dict(emb.graph))
    code, stdout, _ = run(capsys, "verify", tmp_path / "l.json", tmp_path / "g.json", "--json")
    assert code == 0 and json.loads(stdout)["passed"]
    io.write(str(tmp_path / "small.json"), io.graph_to_dict(build_graph(3, [(0, 1)])))
    assert run(capsys, "verify", tmp_path / "l.json", tmp_path / "small.json")[0] == 2


def test_gen_hint_files(tmp_path, capsys):
    assert run(capsys, "gen", "Gn", "--param", 12, "-o", tmp_path / "g12.json")[0] == 0
    assert run(capsys, "verify", tmp_path / "g12.layout.json", tmp_path / "g12.json")[0] == 0
    assert run(capsys, "gen", "XQ", "--param", 7, "-o", tmp_path / "x.json")[0] == 2


def test_stats_xq8():
    s = embedding_stats(gen_XQ(8))
    assert s["crossed_edges"] == 16 and s["crossing_pairs"] == 8
    assert s["face_limits_hold"]


def test_stats_augmented_random():
    from onevis.augmentation import planar_maximal_augment

    for seed in range(10):
        s = embedding_stats(planar_maximal_augment(gen_random_1planar(40, seed)))
        assert s["max_half_edges_per_face"] <= 8


def test_stats_plane_triangulation():
    from onevis.augmentation import planar_maximal_augment

    # the generator triangulates a disc; augmentation closes the hull face
    disc = gen_random_1planar(30, 1, cross_rate=0.0, drop_rate=0.0)
    s = embedding_stats(planar_maximal_augment(disc))
    assert s["crossing_pairs"] == 0
    assert s["face_sizes"] == {"3": s["faces"]}


def test_stats_command(tmp_path, capsys):
    io.write(str(tmp_path / "w.json"), io.embedding_to_dict(gen_config("W", augmented=False)))
    code, stdout, _ = run(capsys, "stats", tmp_path / "w.json", "--augment")
    assert code == 0 and json.loads(stdout)["face_limits_hold"]
