"""Subcontinua of a metric graph and the exact Hausdorff metric.

A continuum is stored as per-edge sorted lists of disjoint closed rational
intervals, canonicalized so that equality of values is equality of sets.
Distance-to-set functions along an edge are piecewise linear with slopes
in {-1, 0, +1}, so Hausdorff distances, eccentricities and neighborhoods
are computed exactly over certificate points (interval endpoints, vertices
and crossings of envelope segments).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ValidationError
from .graphs import ONE, ZERO, Graph, PointOnGraph

Interval = tuple[Fraction, Fraction]


class Continuum:
    """A nonempty closed connected subset of a graph, in canonical form."""

    __slots__ = ("graph", "parts", "_reached", "_hash")

    def __init__(self, graph: Graph, parts: tuple[tuple[str, tuple[Interval, ...]], ...]):
        # internal: use from_intervals / point / full_graph
        self.graph = graph
        self.parts = parts
        self._reached = self._reached_vertices()
        self._hash = hash(self.parts)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_intervals(
        cls, graph: Graph, mapping: Mapping[str, Iterable[tuple[Fraction, Fraction]]]
    ) -> "Continuum":
        per_edge: dict[str, list[list[Fraction]]] = {}
        for edge, ivs in mapping.items():
            if edge not in graph.edges:
                raise ValidationError(f"unknown edge {edge!r}")
            for a, b in ivs:
                a, b = Fraction(a), Fraction(b)
                if a > b:
                    a, b = b, a
                if a < 0 or b > 1:
                    raise ValidationError(f"interval [{a},{b}] outside [0,1] on {edge!r}")
                per_edge.setdefault(edge, []).append([a, b])
        if not per_edge:
            raise ValidationError("empty continuum")
        merged: dict[str, list[Interval]] = {}
        for edge, ivs in per_edge.items():
            ivs.sort()
            out = [ivs[0]]
            for a, b in ivs[1:]:
                if a <= out[-1][1]:
                    out[-1][1] = max(out[-1][1], b)
                else:
                    out.append([a, b])
            merged[edge] = [(a, b) for a, b in out]
        return cls._canonicalize(graph, merged)

    @classmethod
    def point(cls, graph: Graph, p: PointOnGraph) -> "Continuum":
        p = graph.canonicalize(p)
        return cls(graph, ((p.edge, ((p.t, p.t),)),))

    @classmethod
    def full_graph(cls, graph: Graph) -> "Continuum":
        return cls.from_intervals(graph, {e: [(ZERO, ONE)] for e in graph.edge_ids})

    @classmethod
    def _canonicalize(cls, graph: Graph, merged: dict[str, list[Interval]]) -> "Continuum":
        # vertices touched by nondegenerate intervals
        reach_nondeg: set[str] = set()
        for edge, ivs in merged.items():
            u, v = graph.edges[edge]
            for a, b in ivs:
                if a < b:
                    if a == 0:
                        reach_nondeg.add(u)
                    if b == 1:
                        reach_nondeg.add(v)
        # drop vertex points that another interval already reaches, and
        # re-anchor surviving vertex points to the lowest incident edge
        cleaned: dict[str, list[Interval]] = {}
        vertex_points: set[str] = set()
        for edge, ivs in merged.items():
            kept = []
            for a, b in ivs:
                if a == b:
                    w = graph.vertex_at(PointOnGraph(edge, a))
                    if w is not None:
                        if w not in reach_nondeg:
                            vertex_points.add(w)
                        continue
                kept.append((a, b))
            if kept:
                cleaned[edge] = kept
        for w in vertex_points:
            anchor = graph.vertex_point(w)
            cleaned.setdefault(anchor.edge, []).append((anchor.t, anchor.t))
        for ivs in cleaned.values():
            ivs.sort()
        parts = tuple((edge, tuple(cleaned[edge])) for edge in sorted(cleaned))
        value = cls(graph, parts)
        value._check_connected()
        return value

    # -- invariants -----------------------------------------------------------

    def _reached_vertices(self) -> frozenset[str]:
        reached: set[str] = set()
        for edge, ivs in self.parts:
            u, v = self.graph.edges[edge]
            for a, b in ivs:
                if a == 0:
                    reached.add(u)
                if b == 1:
                    reached.add(v)
        return frozenset(reached)

    def _check_connected(self) -> None:
        nodes = [(edge, i) for edge, ivs in self.parts for i in range(len(ivs))]
        if not nodes:
            raise ValidationError("empty continuum")
        parent = {n: n for n in nodes}

        def find(n):
            while parent[n] != n:
                parent[n] = parent[parent[n]]
                n = parent[n]
            return n

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        by_vertex: dict[str, list[tuple[str, int]]] = {}
        for edge, ivs in self.parts:
            u, v = self.graph.edges[edge]
            for i, (a, b) in enumerate(ivs):
                if a == 0:
                    by_vertex.setdefault(u, []).append((edge, i))
                if b == 1:
                    by_vertex.setdefault(v, []).append((edge, i))
        for members in by_vertex.values():
            for other in members[1:]:
                union(members[0], other)
        roots = {find(n) for n in nodes}
        if len(roots) != 1:
            raise ValidationError("continuum is not connected")

    # -- basic queries ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Continuum) and self.parts == other.parts

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        bits = ", ".join(
            f"{edge}:" + ",".join(f"[{a},{b}]" for a, b in ivs) for edge, ivs in self.parts
        )
        return "{" + bits + "}"

    def intervals(self, edge: str) -> tuple[Interval, ...]:
        for e, ivs in self.parts:
            if e == edge:
                return ivs
        return ()

    def interval_count(self) -> int:
        return sum(len(ivs) for _, ivs in self.parts)

    def is_degenerate(self) -> bool:
        return self.interval_count() == 1 and all(
            a == b for _, ivs in self.parts for a, b in ivs
        )

    def total_length(self) -> Fraction:
        return sum((b - a for _, ivs in self.parts for a, b in ivs), Fraction(0))

    def boundary_points(self) -> list[PointOnGraph]:
        """Canonical interval endpoints (with duplicates removed)."""
        seen: set[PointOnGraph] = set()
        out = []
        for edge, ivs in self.parts:
            for a, b in ivs:
                for t in (a, b):
                    p = self.graph.canonical_point(edge, t)
                    if p not in seen:
                        seen.add(p)
                        out.append(p)
        return out

    def contains_point(self, p: PointOnGraph) -> bool:
        p = self.graph.canonicalize(p)
        w = self.graph.vertex_at(p)
        if w is not None:
            if w in self._reached:
                return True
            # isolated vertex point stored explicitly
            return any(
                (p.t, p.t) in ivs for e, ivs in self.parts if e == p.edge
            )
        for a, b in self.intervals(p.edge):
            if a <= p.t <= b:
                return True
        return False

    def subset_of(self, other: "Continuum") -> bool:
        for edge, ivs in self.parts:
            theirs = other.intervals(edge)
            for a, b in ivs:
                if a == b:
                    if not other.contains_point(PointOnGraph(edge, a)):
                        return False
                    continue
                if not any(c <= a and b <= d for c, d in theirs):
                    return False
        return True

    def intersects(self, other: "Continuum") -> bool:
        if self._reached & other._reached:
            return True
        for edge, ivs in self.parts:
            theirs = other.intervals(edge)
            if not theirs:
                continue
            for a, b in ivs:
                for c, d in theirs:
                    if a <= d and c <= b:
                        return True
        # vertex points stored explicitly on either side
        return any(
            other.contains_point(p) for p in self.boundary_points()
        ) or any(self.contains_point(p) for p in other.boundary_points())

    def union(self, other: "Continuum") -> "Continuum":
        """Union as a continuum; raises if the result is disconnected."""
        bag: dict[str, list[Interval]] = {}
        for source in (self, other):
            for edge, ivs in source.parts:
                bag.setdefault(edge, []).extend(ivs)
        return Continuum.from_intervals(self.graph, bag)


# -- exact distance machinery -------------------------------------------------


def _vertex_to_set(graph: Graph, v: str, target: Continuum) -> Fraction:
    best: Fraction | None = None
    for edge, ivs in target.parts:
        u, w = graph.edges[edge]
        du = graph.vertex_distance(v, u)
        dw = graph.vertex_distance(v, w)
        for p, q in ivs:
            cand = min(du + p, dw + (ONE - q))
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def _segments_for_distance(
    graph: Graph, edge: str, target: Continuum, du: Fraction, dv: Fraction
) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Linear segments (slope, intercept, lo, hi) whose pointwise min over
    applicable domains equals t -> dist((edge, t), target)."""
    segs = [
        (Fraction(1), du, ZERO, ONE),  # exit through u
        (Fraction(-1), ONE + dv, ZERO, ONE),  # exit through v
    ]
    for p, q in target.intervals(edge):
        if p > 0:
            segs.append((Fraction(-1), p, ZERO, p))
        if p < q:
            segs.append((ZERO, ZERO, p, q))
        if q < 1:
            segs.append((Fraction(1), -q, q, ONE))
    return segs


def _envelope_max(
    segs: list[tuple[Fraction, Fraction, Fraction, Fraction]], a: Fraction, b: Fraction
) -> Fraction:
    """Exact max over [a, b] of the lower envelope of the segments."""

    def env(t: Fraction) -> Fraction:
        return min(m * t + c for m, c, lo, hi in segs if lo <= t <= hi)

    candidates = {a, b}
    for m, c, lo, hi in segs:
        for t in (lo, hi):
            if a < t < b:
                candidates.add(t)
    for i in range(len(segs)):
        m1, c1, lo1, hi1 = segs[i]
        for j in range(i + 1, len(segs)):
            m2, c2, lo2, hi2 = segs[j]
            if m1 == m2:
                continue
            t = (c2 - c1) / (m1 - m2)
            if a <= t <= b and lo1 <= t <= hi1 and lo2 <= t <= hi2:
                candidates.add(t)
    return max(env(t) for t in candidates)


def directed_hausdorff(graph: Graph, source: Continuum, target: Continuum) -> Fraction:
    """sup over x in source of dist(x, target), attained and exact."""
    vdist = {v: _vertex_to_set(graph, v, target) for v in graph.vertices}
    best = ZERO
    for edge, ivs in source.parts:
        u, v = graph.edges[edge]
        segs = _segments_for_distance(graph, edge, target, vdist[u], vdist[v])
        for a, b in ivs:
            value = _envelope_max(segs, a, b)
            if value > best:
                best = value
    return best


def hausdorff_distance(graph: Graph, a: Continuum, b: Continuum) -> Fraction:
    return max(directed_hausdorff(graph, a, b), directed_hausdorff(graph, b, a))


def dist_point_to_set(graph: Graph, p: PointOnGraph, target: Continuum) -> Fraction:
    return directed_hausdorff(graph, Continuum.point(graph, p), target)


def eccentricity(graph: Graph, p: PointOnGraph, within: Continuum) -> Fraction:
    """max over y in `within` of dist(y, p)."""
    return directed_hausdorff(graph, within, Continuum.point(graph, p))


def diameter(graph: Graph, a: Continuum) -> Fraction:
    """sup of pairwise distances inside the continuum.

    Exact on trees and on single-loop graphs; on multi-loop graphs the value
    is certified from boundary eccentricities and may miss interior-interior
    antipodal pairs of exotic continua.
    """
    if a.is_degenerate():
        return ZERO
    best = ZERO
    for p in a.boundary_points():
        value = eccentricity(graph, p, a)
        if value > best:
            best = value
    return best


def neighborhood(graph: Graph, a: Continuum, eps: Fraction) -> Continuum:
    """Closed eps-neighborhood {x : dist(x, A) <= eps} as a continuum."""
    eps = Fraction(eps)
    if eps < 0:
        raise ValidationError("eps must be nonnegative")
    vdist = {v: _vertex_to_set(graph, v, a) for v in graph.vertices}
    bag: dict[str, list[Interval]] = {}
    for edge in graph.edge_ids:
        u, v = graph.edges[edge]
        pieces: list[Interval] = []
        if vdist[u] <= eps:
            pieces.append((ZERO, min(ONE, eps - vdist[u])))
        if vdist[v] <= eps:
            pieces.append((max(ZERO, ONE - (eps - vdist[v])), ONE))
        for p, q in a.intervals(edge):
            pieces.append((max(ZERO, p - eps), min(ONE, q + eps)))
        if pieces:
            bag[edge] = pieces
    return Continuum.from_intervals(graph, bag)
