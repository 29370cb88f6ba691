"""Brute-force reference computations used to cross-check the fast paths.

Nothing here shares code with the production algorithms: adjacency is found
by an all-pairs determinant scan and distances by plain single-source BFS.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction

import numpy as np

from .hyperbolic import UHPoint
from .slope import FareyTriangle, Slope, make_slope


def slopes_in_box(bound: int) -> list[Slope]:
    """All canonical slopes with ``|p| <= bound`` and ``q <= bound``."""
    out = [make_slope(1, 0)]
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if math.gcd(p, q) == 1:
                out.append(Slope(p, q))
    return out


class BoxGraph:
    """The Farey graph induced on a coordinate box, with all-pairs adjacency by scan."""

    def __init__(self, bound: int):
        self.vertices = slopes_in_box(bound)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        P = np.array([v.p for v in self.vertices], dtype=np.int64)
        Q = np.array([v.q for v in self.vertices], dtype=np.int64)
        self.adj = []
        for i in range(len(self.vertices)):
            det = np.abs(P[i] * Q - Q[i] * P)
            self.adj.append(np.flatnonzero(det == 1).tolist())

    def distances_from(self, source: Slope) -> dict[Slope, int]:
        start = self.index[source]
        dist = [-1] * len(self.vertices)
        dist[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return {self.vertices[i]: d for i, d in enumerate(dist) if d >= 0}


def _cyclic_position(s: Slope, a: Slope) -> Fraction | float:
    """Coordinate on the boundary circle cut open at ``a`` (``a`` maps to -inf)."""
    # rotate so a sits at infinity: x -> -1/(x - a) keeps cyclic order
    if a.is_infinite:
        return s.value
    if s.is_infinite:
        return Fraction(0)
    return -1 / (s.value - a.value)


def geodesic_meets_triangle(a: Slope, b: Slope, tri: FareyTriangle) -> bool:
    """Whether the geodesic from ``a`` to ``b`` meets the open ideal triangle ``tri``.

    The geodesic splits the boundary circle into two open arcs; it meets the
    triangle's interior exactly when the triangle's vertices other than a, b
    occupy both arcs.
    """
    xb = _cyclic_position(b, a)
    sides = set()
    for v in tri.vertices:
        if v == a or v == b:
            continue
        sides.add(_cyclic_position(v, a) < xb)
    return len(sides) == 2


def edge_side_ok(tri: FareyTriangle, z: UHPoint, tol: float = 1e-12) -> bool:
    """Whether ``z`` is on the inner side of all three edges of ``tri`` (or within ``tol`` of one)."""
    x, y = Fraction(z.x), Fraction(z.y)
    verts = tri.vertices
    for i in range(3):
        u, v = verts[i], verts[(i + 1) % 3]
        w = verts[(i + 2) % 3]
        if u.is_infinite or v.is_infinite:
            n = (v if u.is_infinite else u).value
            if abs(float(x - n)) <= tol:
                continue
            if (x > n) != (w.value > n):
                return False
            continue
        lo, hi = sorted((u.value, v.value))
        f = (x - lo) * (x - hi) + y * y
        c, r = (lo + hi) / 2, (hi - lo) / 2
        if abs(math.hypot(float(x - c), float(y)) - float(r)) <= tol:
            continue
        w_inside = (not w.is_infinite) and lo < w.value < hi
        if (f < 0) != w_inside:
            return False
    return True


def farey_triangles_in_box(bound: int) -> list[FareyTriangle]:
    """Every Farey triangle whose vertices all lie in the coordinate box."""
    g = BoxGraph(bound)
    tris = set()
    for i, nbrs in enumerate(g.adj):
        ns = set(nbrs)
        for j in nbrs:
            if j <= i:
                continue
            for k in g.adj[j]:
                if k > j and k in ns:
                    tris.add(FareyTriangle((g.vertices[i], g.vertices[j], g.vertices[k])))
    return sorted(tris, key=lambda t: [v.sort_key() for v in t.vertices])
