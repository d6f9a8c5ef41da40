"""``onevis`` command line: layout, verify, gen, stats, check-density.

Exit codes: 0 success or pass, 1 verification/density failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections import Counter
from pathlib import Path

from . import io
from .augmentation import planar_maximal_augment
from .embedding import InvalidEmbedding, OnePlanarEmbedding, planarize
from .generators import (
    BadRim,
    TooSmall,
    gen_config,
    gen_Gn,
    gen_K7_minus_e,
    gen_random_1planar,
    gen_XQ,
)
from .graph import GraphError, check_density
from .pipeline import DensityViolation, one_visibility
from .svg import render_svg
from .verification import verify_layout

log = logging.getLogger("onevis")

FAMILIES = ("XQ", "K7_minus_e", "Gn", "config_B", "config_W", "config_X", "random_1planar")


class InputError(Exception):
    """Anything that should end the process with exit code 2."""


def _fail(kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return 2


def embedding_stats(emb: OnePlanarEmbedding) -> dict:
    """Face statistics of the planarization, with the usual limits for
    planar-maximal embeddings: at most 4 vertices, 8 half-edges and 4
    crossing points per face."""
    p = planarize(emb)
    pm = p.pm
    sizes: Counter[int] = Counter()
    points: Counter[int] = Counter()
    max_vertices = max_half = max_points = 0
    for walk in p.faces:
        corners = [pm.origin(d) for d in walk]
        dummies = sum(pm.dummy[v] for v in corners)
        half = sum(pm.dummy[pm.origin(d)] or pm.dummy[pm.target(d)] for d in walk)
        sizes[len(walk)] += 1
        points[dummies] += 1
        max_vertices = max(max_vertices, len(corners) - dummies)
        max_half = max(max_half, half)
        max_points = max(max_points, dummies)
    return {
        "n": emb.graph.n,
        "m": emb.graph.m,
        "crossing_pairs": len(emb.crossings),
        "crossed_edges": 2 * len(emb.crossings),
        "faces": len(p.faces),
        "face_sizes": {str(k): v for k, v in sorted(sizes.items())},
        "crossing_points_per_face": {str(k): v for k, v in sorted(points.items())},
        "max_vertices_per_face": max_vertices,
        "max_half_edges_per_face": max_half,
        "max_crossing_points_per_face": max_points,
        "face_limits_hold": max_vertices <= 4 and max_half <= 8 and max_points <= 4,
    }


def _load(path: str):
    try:
        return io.read(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def cmd_layout(args) -> int:
    emb = io.embedding_from_dict(_load(args.input))
    layout, report = one_visibility(emb)
    log.info("layout: %s", report)
    io.write(args.output, io.layout_to_dict(layout))
    if args.svg:
        Path(args.svg).write_text(render_svg(layout, show_hidden=args.show_hidden), encoding="utf-8")
    if args.emit_intermediate:
        io.write(args.emit_intermediate, io.embedding_to_dict(planar_maximal_augment(emb)))
    print(json.dumps({"width": report.width, "height": report.height, "n": report.n, "m": report.m}))
    return 0


def cmd_verify(args) -> int:
    layout = io.layout_from_dict(_load(args.layout))
    g = io.graph_from_dict(_load(args.graph))
    ids = sorted(b.vertex for b in layout.vertices)
    if ids != list(range(g.n)):
        raise InputError("layout vertex ids do not match the graph")
    if any(not e.hidden and not 0 <= e.edge < g.m for e in layout.edges):
        raise InputError("layout edge ids do not match the graph")
    report = verify_layout(layout, g)
    if args.json:
        print(
            json.dumps(
                {
                    "passed": report.passed,
                    "violations": [{"kind": v.kind, "ids": list(v.ids)} for v in report.violations],
                    "width": report.width,
                    "height": report.height,
                }
            )
        )
    else:
        print("PASS" if report.passed else "FAIL")
        for v in report.violations:
            print(f"  {v.kind.replace('_', ' ')}: {', '.join(map(str, v.ids))}")
    return 0 if report.passed else 1


def cmd_gen(args) -> int:
    fam = args.family
    if fam in ("K7_minus_e", "Gn"):
        g, hint = gen_K7_minus_e() if fam == "K7_minus_e" else gen_Gn(args.param or 7)
        io.write(args.output, io.graph_to_dict(g))
        hint_path = args.hint or str(Path(args.output).with_suffix("")) + ".layout.json"
        io.write(hint_path, io.layout_to_dict(hint))
        return 0
    if fam == "XQ":
        emb = gen_XQ(args.param or 8)
    elif fam.startswith("config_"):
        emb = gen_config(fam[-1], augmented=not args.plain)
    else:
        emb = gen_random_1planar(args.param or 20, args.seed)
    io.write(args.output, io.embedding_to_dict(emb))
    return 0


def cmd_stats(args) -> int:
    emb = io.embedding_from_dict(_load(args.input))
    if args.augment:
        emb = planar_maximal_augment(emb)
    print(json.dumps(embedding_stats(emb), indent=1))
    return 0


def cmd_check_density(args) -> int:
    g = io.graph_from_dict(_load(args.graph))
    r = check_density(g)
    print(json.dumps({"n": r.n, "m": r.m, "bound": r.bound, "passed": r.passed, "tight": r.tight}))
    return 0 if r.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="onevis", description="1-visibility layouts of 1-planar embeddings")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("layout", help="lay out an embedding")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--svg")
    p.add_argument("--show-hidden", action="store_true")
    p.add_argument("--emit-intermediate", metavar="PATH", help="write the augmented embedding")
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("verify", help="check a layout against a graph")
    p.add_argument("layout")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--param", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plain", action="store_true", help="configurations without kite edges")
    p.add_argument("--hint", help="where to write the layout hint of K7_minus_e / Gn")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="face statistics of an embedding")
    p.add_argument("input")
    p.add_argument("--augment", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("check-density", help="compare m against 4n-8")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check_density)
    return ap


def main(argv: list[str] | None = None) -> int:
    level = getattr(logging, os.environ.get("ONEVIS_LOG", "WARNING").upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.SchemaError, InputError) as exc:
        return _fail("ParseError", str(exc))
    except InvalidEmbedding as exc:
        return _fail("InvalidEmbedding", str(exc))
    except DensityViolation as exc:
        return _fail("DensityViolation", str(exc))
    except (GraphError, BadRim, TooSmall) as exc:
        return _fail(type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
