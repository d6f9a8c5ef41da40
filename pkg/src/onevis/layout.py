"""Visibility layout containers.

All x-coordinates are quarter units, so whole grid columns are multiples
of 4.  The y-coordinate of a vertex is its integer level.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace


@dataclass
class VertexSegment:
    vertex: int
    y: int
    x_lo: int
    x_hi: int


@dataclass
class EdgeSegment:
    edge: int
    u: int
    v: int
    x: int
    y_lo: int
    y_hi: int
    hidden: bool = False


@dataclass
class VisibilityLayout:
    vertices: list[VertexSegment]
    edges: list[EdgeSegment]
    crossings: list[tuple[int, int]] = field(default_factory=list)  # (edge, vertex)

    def copy(self) -> "VisibilityLayout":
        return VisibilityLayout(
            [replace(v) for v in self.vertices],
            [replace(e) for e in self.edges],
            list(self.crossings),
        )

    def extent(self) -> tuple[int, int]:
        """Width in quarter units and height in levels."""
        if not self.vertices:
            return 0, 0
        xs = [v.x_lo for v in self.vertices] + [v.x_hi for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return max(xs) - min(xs), max(ys) - min(ys)

    def visible_edges(self) -> list[EdgeSegment]:
        return [e for e in self.edges if not e.hidden]

    def shifted(self, dx: int = 0, dy: int = 0) -> "VisibilityLayout":
        out = self.copy()
        for v in out.vertices:
            v.y += dy
            v.x_lo += dx
            v.x_hi += dx
        for e in out.edges:
            e.x += dx
            e.y_lo += dy
            e.y_hi += dy
        return out
