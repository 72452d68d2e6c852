"""Metric graphs with unit-length edges and exact rational point geometry.

A graph is a finite set of edges, each of length exactly one, glued at
vertices.  Points are addressed as (edge, t) with rational t in [0, 1];
the path metric is computed exactly over Fractions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DisconnectedGraph, DuplicateEdgeId, NotATree, ValidationError

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True, order=True)
class PointOnGraph:
    """A point on an edge, at rational coordinate t measured from endpoint u."""

    edge: str
    t: Fraction

    def __repr__(self) -> str:
        return f"Point({self.edge}, {self.t})"


class Graph:
    """Connected metric graph with unit edges; immutable after construction.

    Vertex ids and edge ids are strings.  Loops (u == v) are allowed.  The
    vertex set need not be minimal: degree-2 vertices act as subdivision
    points and endpoint/branching classification is derived from valence.
    """

    def __init__(self, edges: list[tuple[str, str, str]]):
        if not edges:
            raise ValidationError("edge list is empty")
        self.edge_list: tuple[tuple[str, str, str], ...] = tuple(
            (str(e), str(u), str(v)) for e, u, v in edges
        )
        self.edges: dict[str, tuple[str, str]] = {}
        for eid, u, v in self.edge_list:
            if eid in self.edges:
                raise DuplicateEdgeId(eid)
            self.edges[eid] = (u, v)
        self.edge_ids: tuple[str, ...] = tuple(sorted(self.edges))
        self.vertices: tuple[str, ...] = tuple(
            sorted({w for u, v in self.edges.values() for w in (u, v)})
        )
        # incident edge-ends: vertex -> sorted list of (edge id, end) with end in {0, 1}
        self.incidence: dict[str, list[tuple[str, int]]] = {v: [] for v in self.vertices}
        for eid in self.edge_ids:
            u, v = self.edges[eid]
            self.incidence[u].append((eid, 0))
            if u == v:
                self.incidence[u].append((eid, 1))
            else:
                self.incidence[v].append((eid, 1))
        self._check_connected()
        self.vertex_valence: dict[str, int] = {
            v: len(ends) for v, ends in self.incidence.items()
        }
        self.endpoints: frozenset[str] = frozenset(
            v for v, k in self.vertex_valence.items() if k == 1
        )
        self.branching: frozenset[str] = frozenset(
            v for v, k in self.vertex_valence.items() if k >= 3
        )
        self.has_loop = any(u == v for u, v in self.edges.values())
        self.is_tree = (not self.has_loop) and len(self.edges) == len(self.vertices) - 1
        self._vdist = self._all_pairs_vertex_distance()

    # -- construction helpers -------------------------------------------------

    def _check_connected(self) -> None:
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for eid, _ in self.incidence[v]:
                u, w = self.edges[eid]
                other = w if u == v else u
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
        if len(seen) != len(self.vertices):
            missing = sorted(set(self.vertices) - seen)
            raise DisconnectedGraph(f"unreachable vertices: {missing}")

    def _all_pairs_vertex_distance(self) -> dict[str, dict[str, int]]:
        table: dict[str, dict[str, int]] = {}
        for start in self.vertices:
            dist = {start: 0}
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for eid, _ in self.incidence[v]:
                    u, w = self.edges[eid]
                    other = w if u == v else u
                    if other not in dist:
                        dist[other] = dist[v] + 1
                        queue.append(other)
            table[start] = dist
        return table

    # -- points ---------------------------------------------------------------

    def vertex_point(self, v: str) -> PointOnGraph:
        """Canonical representation of a vertex: lowest incident edge id."""
        eid, end = min(self.incidence[v])
        return PointOnGraph(eid, ZERO if end == 0 else ONE)

    def canonical_point(self, edge: str, t: Fraction | int | str) -> PointOnGraph:
        t = Fraction(t)
        if not (0 <= t <= 1):
            raise ValidationError(f"coordinate {t} outside [0, 1] on edge {edge!r}")
        if edge not in self.edges:
            raise ValidationError(f"unknown edge {edge!r}")
        if t == 0:
            return self.vertex_point(self.edges[edge][0])
        if t == 1:
            return self.vertex_point(self.edges[edge][1])
        return PointOnGraph(edge, t)

    def canonicalize(self, p: PointOnGraph) -> PointOnGraph:
        return self.canonical_point(p.edge, p.t)

    def vertex_at(self, p: PointOnGraph) -> str | None:
        """The vertex id if p sits at a vertex, else None."""
        if p.t == 0:
            return self.edges[p.edge][0]
        if p.t == 1:
            return self.edges[p.edge][1]
        return None

    # -- geometry -------------------------------------------------------------

    def vertex_distance(self, a: str, b: str) -> int:
        return self._vdist[a][b]

    def distance(self, x: PointOnGraph, y: PointOnGraph) -> Fraction:
        """Exact shortest-path length between two points."""
        x = self.canonicalize(x)
        y = self.canonicalize(y)
        u1, v1 = self.edges[x.edge]
        u2, v2 = self.edges[y.edge]
        best: Fraction | None = None
        if x.edge == y.edge:
            best = abs(x.t - y.t)
        for ta, va in ((x.t, u1), (ONE - x.t, v1)):
            for tb, vb in ((y.t, u2), (ONE - y.t, v2)):
                cand = ta + self._vdist[va][vb] + tb
                if best is None or cand < best:
                    best = cand
        assert best is not None
        return best

    def valence(self, p: PointOnGraph) -> int:
        """Number of local branches at p; 2 in edge interiors."""
        p = self.canonicalize(p)
        v = self.vertex_at(p)
        if v is None:
            return 2
        return self.vertex_valence[v]

    def lcm_end_bound(self) -> int:
        """lcm{1, ..., |End|} for trees; 1 when there are fewer than 2 endpoints."""
        if not self.is_tree:
            raise NotATree("graph contains a loop or a cycle")
        n = len(self.endpoints)
        if n <= 1:
            return 1
        return lcm(*range(1, n + 1))

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def build_graph(edges: list[tuple[str, str, str]]) -> Graph:
    """Validate an edge list description into a Graph."""
    return Graph(edges)
