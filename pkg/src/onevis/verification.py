"""Geometric checker for 1-visibility representations.

Works on the raw segments only and shares nothing with the layout
construction.  Bars are closed horizontal segments; edge segments are
vertical and open at their two ends, so an edge resting on a bar is a
contact rather than a crossing.
"""

from __future__ import annotations

import bisect
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph
from .kernels import naive_pairs
from .layout import VisibilityLayout


class UnknownFamily(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str
    ids: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}: {', '.join(map(str, self.ids))}"


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)
    vertex_crossings: dict[int, int] = field(default_factory=dict)
    edge_crossings: dict[int, int] = field(default_factory=dict)
    width: int = 0
    height: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


# Intersections are reported as ("vv", a, b) for overlapping bars of vertices
# a < b, ("ee", a, b) for overlapping edge segments and ("ve", edge, vertex)
# for an edge passing through a bar.
Hit = tuple[str, int, int]


def _arrays(layout: VisibilityLayout):
    vs, es = layout.vertices, layout.edges
    bars = np.array([(b.y, b.x_lo, b.x_hi) for b in vs], dtype=np.int64).reshape(-1, 3)
    segs = np.array([(e.x, e.y_lo, e.y_hi) for e in es], dtype=np.int64).reshape(-1, 3)
    return bars, segs


def _named(layout: VisibilityLayout, vv, ee, ve) -> list[Hit]:
    vid = [b.vertex for b in layout.vertices]
    eid = [e.edge for e in layout.edges]
    out: list[Hit] = []
    for i, j in vv:
        a, b = sorted((vid[i], vid[j]))
        out.append(("vv", a, b))
    for i, j in ee:
        a, b = sorted((eid[i], eid[j]))
        out.append(("ee", a, b))
    for j, i in ve:
        out.append(("ve", eid[j], vid[i]))
    return sorted(out)


def naive_intersections(layout: VisibilityLayout) -> list[Hit]:
    """All intersecting segment pairs by exhaustive comparison."""
    bars, segs = _arrays(layout)
    vv, ee, ve = naive_pairs(bars[:, 0], bars[:, 1], bars[:, 2], segs[:, 0], segs[:, 1], segs[:, 2])
    return _named(layout, vv.tolist(), ee.tolist(), ve.tolist())


def _interval_overlaps(items) -> list[tuple[int, int]]:
    """Pairs among ``(line, lo, hi, index)`` sharing a line with overlapping closed intervals."""
    out = []
    by_line = defaultdict(list)
    for line, lo, hi, i in items:
        if lo <= hi:
            by_line[line].append((lo, hi, i))
    for group in by_line.values():
        group.sort()
        active: list[tuple[int, int]] = []  # (hi, index)
        for lo, hi, i in group:
            active = [(h, j) for h, j in active if h >= lo]
            out.extend((j, i) for _, j in active)
            active.append((hi, i))
    return out


def sweep_intersections(layout: VisibilityLayout) -> list[Hit]:
    """Same result as :func:`naive_intersections` by sorting and sweeping."""
    vs, es = layout.vertices, layout.edges
    vv = _interval_overlaps((b.y, b.x_lo, b.x_hi, i) for i, b in enumerate(vs))
    # open intervals on integer ends: doubling makes them closed ones
    ee = _interval_overlaps((e.x, 2 * e.y_lo + 1, 2 * e.y_hi - 1, j) for j, e in enumerate(es))
    # sweep upward: an edge is active at level y when y_lo < y < y_hi
    events: dict[int, list] = defaultdict(lambda: [[], [], []])  # closing, bars, opening
    for j, e in enumerate(es):
        if e.y_hi - e.y_lo >= 2:
            events[e.y_lo][2].append(j)
            events[e.y_hi][0].append(j)
    for i, b in enumerate(vs):
        events[b.y][1].append(i)
    active: list[tuple[int, int]] = []  # sorted (x, edge index)
    ve = []
    for y in sorted(events):
        closing, bars, opening = events[y]
        for j in closing:
            k = bisect.bisect_left(active, (es[j].x, j))
            del active[k]
        for i in bars:
            b = vs[i]
            lo = bisect.bisect_left(active, (b.x_lo, -1))
            hi = bisect.bisect_right(active, (b.x_hi, len(es)))
            ve.extend((j, i) for _, j in active[lo:hi])
        for j in opening:
            bisect.insort(active, (es[j].x, j))
    return _named(layout, vv, ee, ve)


def verify_layout(layout: VisibilityLayout, g: Graph, naive: bool = False) -> VerificationReport:
    """Check every clause of a 1-visibility representation of ``g``.

    Hidden segments take part in the geometry checks; only visible ones
    count as drawing edges of ``g``.
    """
    report = VerificationReport()
    bad = report.violations
    bar = {}
    for b in layout.vertices:
        if not all(isinstance(c, (int, np.integer)) for c in (b.y, b.x_lo, b.x_hi)):
            bad.append(Violation("non_integer_vertex", (b.vertex,)))
        if b.vertex in bar:
            bad.append(Violation("duplicate_vertex", (b.vertex,)))
        if b.x_lo > b.x_hi:
            bad.append(Violation("empty_bar", (b.vertex,)))
        bar[b.vertex] = b
    for v in range(g.n):
        if v not in bar:
            bad.append(Violation("missing_vertex", (v,)))
    drawn = set()
    for e in layout.edges:
        if not all(isinstance(c, (int, np.integer)) for c in (e.x, e.y_lo, e.y_hi)):
            bad.append(Violation("non_integer_edge", (e.edge,)))
        if 0 <= e.edge < g.m:
            if {g.edges[e.edge].u, g.edges[e.edge].v} != {e.u, e.v}:
                bad.append(Violation("wrong_endpoints", (e.edge,)))
            elif e.edge in drawn:
                bad.append(Violation("duplicate_edge", (e.edge,)))
            drawn.add(e.edge)
        elif not e.hidden:
            bad.append(Violation("unknown_edge", (e.edge,)))
        bu, bv = bar.get(e.u), bar.get(e.v)
        if bu is None or bv is None:
            bad.append(Violation("dangling_edge", (e.edge,)))
            continue
        ends = sorted((bu.y, bv.y))
        if ends != [e.y_lo, e.y_hi] or e.y_lo >= e.y_hi:
            bad.append(Violation("endpoint_level", (e.edge,)))
        if not (bu.x_lo <= e.x <= bu.x_hi and bv.x_lo <= e.x <= bv.x_hi):
            bad.append(Violation("endpoint_off_segment", (e.edge,)))
    for eid in range(g.m):
        if eid not in drawn:
            bad.append(Violation("missing_edge", (eid,)))

    hits = naive_intersections(layout) if naive else sweep_intersections(layout)
    found = set()
    for kind, a, b in hits:
        if kind == "vv":
            bad.append(Violation("vertex_overlap", (a, b)))
        elif kind == "ee":
            bad.append(Violation("edge_overlap", (a, b)))
        else:
            report.edge_crossings[a] = report.edge_crossings.get(a, 0) + 1
            report.vertex_crossings[b] = report.vertex_crossings.get(b, 0) + 1
            found.add((a, b))
    for v, c in sorted(report.vertex_crossings.items()):
        if c > 1:
            bad.append(Violation("vertex_crossed_twice", (v,)))
    for e, c in sorted(report.edge_crossings.items()):
        if c > 1:
            bad.append(Violation("edge_crosses_twice", (e,)))
    claimed = set(map(tuple, layout.crossings))
    for pair in sorted(claimed ^ found):
        bad.append(Violation("crossing_record", pair))
    if layout.vertices:
        xs = [b.x_lo for b in layout.vertices] + [b.x_hi for b in layout.vertices]
        ys = [b.y for b in layout.vertices]
        report.width, report.height = max(xs) - min(xs), max(ys) - min(ys)
    return report


@dataclass
class WitnessReport:
    n: int
    m: int
    optimal: bool
    family: str | None

    @property
    def flagged(self) -> bool:
        """Known to be 1-visible yet not 1-planar."""
        return self.optimal and self.family is not None


def verify_not_1planar_witness(g: Graph) -> WitnessReport:
    """Look ``g`` up among the generated K7-e / G_n witnesses.

    This is a table lookup, not a 1-planarity test.
    """
    import networkx as nx

    from .generators import gen_Gn

    if g.n < 7:
        raise UnknownFamily(f"no witness with {g.n} vertices")
    simple = g.simple_edges()
    optimal = len(simple) == 4 * g.n - 8
    ref, _ = gen_Gn(g.n)
    family = None
    if optimal:
        ours, theirs = nx.Graph(list(simple)), nx.Graph(list(ref.simple_edges()))
        if nx.is_isomorphic(ours, theirs):
            family = "K7_minus_e" if g.n == 7 else "Gn"
    return WitnessReport(g.n, len(simple), optimal, family)
