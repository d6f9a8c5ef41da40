"""Mutable combinatorial map (rotation system over darts).

Dart ``2*i`` runs from ``tail`` to ``head`` of map-edge ``i`` and dart
``2*i + 1`` is its twin.  Darts around a vertex are kept in a doubly linked
counter-clockwise cycle.  The face of a dart is the face on its left; the
successor of dart ``u -> v`` on that face is the dart preceding ``v -> u`` in
the counter-clockwise order at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class InconsistentRotation(ValueError):
    pass


@dataclass
class MapEdge:
    tail: int
    head: int
    owner: int  # graph edge id carried by this map edge
    alive: bool = True


class PlaneMap:
    def __init__(self, n: int = 0, dummy: list[bool] | None = None) -> None:
        self.n = n
        self.dummy: list[bool] = list(dummy) if dummy is not None else [False] * n
        self.edges: list[MapEdge] = []
        self.ccw_next: list[int] = []
        self.ccw_prev: list[int] = []
        self.first: list[int] = [-1] * n

    # -- construction -------------------------------------------------------

    def add_vertex(self, dummy: bool = False) -> int:
        self.n += 1
        self.dummy.append(dummy)
        self.first.append(-1)
        return self.n - 1

    def new_edge(self, u: int, v: int, owner: int) -> int:
        """Create an unlinked map edge; returns its index."""
        self.edges.append(MapEdge(u, v, owner))
        self.ccw_next.extend((-1, -1))
        self.ccw_prev.extend((-1, -1))
        return len(self.edges) - 1

    def set_rotation(self, v: int, darts: list[int]) -> None:
        """Link ``darts`` (all leaving ``v``) as the full CCW cycle at ``v``."""
        k = len(darts)
        for i, d in enumerate(darts):
            if self.origin(d) != v:
                raise InconsistentRotation(f"dart {d} does not leave vertex {v}")
            self.ccw_next[d] = darts[(i + 1) % k]
            self.ccw_prev[d] = darts[(i - 1) % k]
        self.first[v] = darts[0] if darts else -1

    def _link_after(self, d: int, after: int | None) -> None:
        v = self.origin(d)
        if after is None:
            if self.first[v] != -1:
                raise InconsistentRotation(f"vertex {v} already has darts")
            self.ccw_next[d] = self.ccw_prev[d] = d
            self.first[v] = d
            return
        nxt = self.ccw_next[after]
        self.ccw_next[after] = d
        self.ccw_prev[d] = after
        self.ccw_next[d] = nxt
        self.ccw_prev[nxt] = d

    def _unlink(self, d: int) -> None:
        v = self.origin(d)
        nxt, prv = self.ccw_next[d], self.ccw_prev[d]
        if nxt == d:
            self.first[v] = -1
        else:
            self.ccw_next[prv] = nxt
            self.ccw_prev[nxt] = prv
            if self.first[v] == d:
                self.first[v] = nxt
        self.ccw_next[d] = self.ccw_prev[d] = -1

    def insert_edge(self, u: int, v: int, owner: int, after_u: int | None, after_v: int | None) -> int:
        """Insert map edge ``u -> v`` with its darts placed after the given darts.

        Inserting into the face ``f`` uses, at each endpoint, the dart of ``f``
        that leaves that corner; the new dart ``u -> v`` then has the part of
        ``f`` that continues from ``after_v`` on its left.
        """
        i = self.new_edge(u, v, owner)
        self._link_after(2 * i, after_u)
        self._link_after(2 * i + 1, after_v)
        return i

    def remove_edge(self, i: int) -> None:
        self._unlink(2 * i)
        self._unlink(2 * i + 1)
        self.edges[i].alive = False

    # -- queries ------------------------------------------------------------

    def origin(self, d: int) -> int:
        e = self.edges[d >> 1]
        return e.head if d & 1 else e.tail

    def target(self, d: int) -> int:
        e = self.edges[d >> 1]
        return e.tail if d & 1 else e.head

    def owner(self, d: int) -> int:
        return self.edges[d >> 1].owner

    def darts_at(self, v: int) -> Iterator[int]:
        d0 = self.first[v]
        if d0 == -1:
            return
        d = d0
        while True:
            yield d
            d = self.ccw_next[d]
            if d == d0:
                break

    def degree(self, v: int) -> int:
        return sum(1 for _ in self.darts_at(v))

    def face_next(self, d: int) -> int:
        return self.ccw_prev[d ^ 1]

    def face_walk(self, d: int) -> list[int]:
        out = [d]
        x = self.face_next(d)
        guard = 2 * len(self.edges) + 1
        while x != d:
            out.append(x)
            x = self.face_next(x)
            guard -= 1
            if guard < 0:
                raise InconsistentRotation("face traversal does not close")
        return out

    def alive_edges(self) -> Iterator[int]:
        return (i for i, e in enumerate(self.edges) if e.alive)

    def alive_darts(self) -> Iterator[int]:
        for i in self.alive_edges():
            yield 2 * i
            yield 2 * i + 1

    def faces(self) -> tuple[list[list[int]], dict[int, int]]:
        """All faces as dart cycles, ordered by their smallest dart."""
        face_of: dict[int, int] = {}
        faces: list[list[int]] = []
        for d in self.alive_darts():
            if d in face_of:
                continue
            walk = self.face_walk(d)
            for x in walk:
                if x in face_of:
                    raise InconsistentRotation(f"dart {x} lies on two faces")
                face_of[x] = len(faces)
            faces.append(walk)
        return faces, face_of

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, todo = [s], [s]
            while todo:
                v = todo.pop()
                for d in self.darts_at(v):
                    w = self.target(d)
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        todo.append(w)
            out.append(comp)
        return out

    def euler_ok(self) -> bool:
        """V - E + F == 2 on every component with at least one edge."""
        faces, face_of = self.faces()
        for comp in self.components():
            darts = [d for v in comp for d in self.darts_at(v)]
            if not darts:
                continue
            nf = len({face_of[d] for d in darts})
            if len(comp) - len(darts) // 2 + nf != 2:
                return False
        return True

    def find_dart(self, u: int, v: int) -> int | None:
        for d in self.darts_at(u):
            if self.target(d) == v:
                return d
        return None

    def copy(self) -> "PlaneMap":
        pm = PlaneMap(self.n, self.dummy)
        pm.edges = [MapEdge(e.tail, e.head, e.owner, e.alive) for e in self.edges]
        pm.ccw_next = list(self.ccw_next)
        pm.ccw_prev = list(self.ccw_prev)
        pm.first = list(self.first)
        return pm
