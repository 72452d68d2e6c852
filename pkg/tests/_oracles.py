"""Independent brute-force oracles used by the test suite.

The grid Hausdorff oracle samples both sets on a 1/K coordinate grid
(always including exact interval endpoints) and evaluates max-min pairwise
distances with the elementary two-exit formula in float arithmetic.  It
shares no code with the exact certificate-based computation.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def _cloud(graph, continuum, k: int):
    ts, us, vs, edges = [], [], [], []
    vindex = {v: i for i, v in enumerate(graph.vertices)}
    for edge, ivs in continuum.parts:
        u, v = graph.edges[edge]
        for a, b in ivs:
            samples = {float(a), float(b)}
            lo = int(np.ceil(float(a) * k))
            hi = int(np.floor(float(b) * k))
            samples.update(i / k for i in range(lo, hi + 1))
            for t in sorted(samples):
                ts.append(t)
                us.append(vindex[u])
                vs.append(vindex[v])
                edges.append(edge)
    return (
        np.array(ts),
        np.array(us),
        np.array(vs),
        np.array(edges, dtype=object),
    )


def _pairwise(graph, cloud_a, cloud_b):
    n = len(graph.vertices)
    dmat = np.zeros((n, n))
    for i, a in enumerate(graph.vertices):
        for j, b in enumerate(graph.vertices):
            dmat[i, j] = graph.vertex_distance(a, b)
    ta, ua, va, ea = cloud_a
    tb, ub, vb, eb = cloud_b
    ta_c, tb_r = ta[:, None], tb[None, :]
    combos = [
        ta_c + dmat[ua][:, ub] + tb_r,
        ta_c + dmat[ua][:, vb] + (1.0 - tb_r),
        (1.0 - ta_c) + dmat[va][:, ub] + tb_r,
        (1.0 - ta_c) + dmat[va][:, vb] + (1.0 - tb_r),
    ]
    d = np.minimum.reduce(combos)
    same = ea[:, None] == eb[None, :]
    direct = np.abs(ta_c - tb_r)
    return np.where(same, np.minimum(d, direct), d)


def grid_hausdorff(graph, a, b, k: int = 512) -> float:
    """Discretized Hausdorff distance on a 1/k grid."""
    ca, cb = _cloud(graph, a, k), _cloud(graph, b, k)
    d = _pairwise(graph, ca, cb)
    return max(d.min(axis=1).max(), d.min(axis=0).max())


def random_ball(rng, graph, neighborhood_fn, point_cls, max_radius=Fraction(3, 2)):
    """Random metric ball: guaranteed connected, exact rational data."""
    edge = rng.choice(graph.edge_ids)
    t = Fraction(rng.randint(0, 48), 48)
    center = graph.canonical_point(edge, t)
    radius = Fraction(rng.randint(0, 36), 24)
    if radius > max_radius:
        radius = max_radius
    return neighborhood_fn(graph, point_cls(graph, center), radius)
