"""The Farey tessellation of the upper half-plane by ideal triangles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._pykernels import _base_solution
from .hyperbolic import Geodesic, Semicircle, UHPoint, Vertical, geodesic_through
from .modular import act_on_slope, slope_normalizer
from .slope import INFINITY, FareyTriangle, Slope, make_slope

__all__ = [
    "IdealTriangle",
    "Viewport",
    "EDGE_TOL",
    "realize",
    "locate_triangle",
    "cutting_sequence",
    "tessellation_edges",
    "render_svg",
    "MAX_RENDER_DEPTH",
]

EDGE_TOL = 1e-12
MAX_RENDER_DEPTH = 20


@dataclass(frozen=True)
class IdealTriangle:
    triangle: FareyTriangle
    edges: tuple[Geodesic, Geodesic, Geodesic]


def realize(tri: FareyTriangle) -> IdealTriangle:
    u, v, w = tri.vertices
    return IdealTriangle(tri, (geodesic_through(u, v), geodesic_through(v, w), geodesic_through(u, w)))


def _exact(v):
    f = Fraction(v)
    return f.numerator, f.denominator


def _inside_circle(x, y, left, right) -> bool:
    """Strictly inside the semicircle spanning the finite slopes ``left < right``.

    Points within ``EDGE_TOL`` of the circle count as on it (not inside).
    """
    lp, lq = left
    rp, rq = right
    u, v = lp / lq, rp / rq
    c, r = (u + v) / 2, (v - u) / 2
    if abs(math.hypot(float(x) - c, float(y)) - r) <= EDGE_TOL:
        return False
    # sign of (lq x - lp)(rq x - rp) + lq rq y^2, in integers
    xn, xd = _exact(x)
    yn, yd = _exact(y)
    val = (lq * xn - lp * xd) * (rq * xn - rp * xd) * yd * yd + lq * rq * yn * yn * xd * xd
    return val < 0


def _triangle(*pairs) -> FareyTriangle:
    return FareyTriangle(tuple(make_slope(p, q) for p, q in pairs))


def locate_triangle(z: UHPoint) -> FareyTriangle:
    """The Farey triangle containing ``z``, by mediant descent.

    A point on an edge goes to the adjacent triangle of smaller depth; on a
    vertical edge, to the triangle on its left.
    """
    x, y = z.x, z.y
    n = round(x)
    if x == n or (not isinstance(x, (int, Fraction)) and abs(x - n) <= EDGE_TOL):
        return _triangle((n - 1, 1), (n, 1), (1, 0))
    n = math.floor(x)
    left, right = (n, 1), (n + 1, 1)
    tri = (left, right, (1, 0))
    while _inside_circle(x, y, left, right):
        mid = (left[0] + right[0], left[1] + right[1])
        tri = (left, mid, right)
        if x < Fraction(*mid):
            right = mid
        else:
            left = mid
    return _triangle(*tri)


def cutting_sequence(a: Slope, b: Slope) -> list[FareyTriangle]:
    """Farey triangles whose open interiors the geodesic from ``a`` to ``b`` meets, in order.

    The geodesic is normalized so that ``a`` sits at infinity; it then runs
    straight down to the image of ``b`` and crosses the triangles of the
    Stern-Brocot descent toward that point.
    """
    if a == b:
        raise ValueError("cutting_sequence needs distinct endpoints")
    norm = slope_normalizer(a)
    back = norm.inverse()
    x = act_on_slope(norm, b)
    if x.q == 1:
        return []
    target = x.value
    n = math.floor(target)
    left, right = (n, 1), (n + 1, 1)
    seq = [(left, right, (1, 0))]
    while True:
        mid = (left[0] + right[0], left[1] + right[1])
        seq.append((left, mid, right))
        if Fraction(*mid) == target:
            break
        if target < Fraction(*mid):
            right = mid
        else:
            left = mid
    return [FareyTriangle(tuple(act_on_slope(back, make_slope(p, q)) for p, q in tri))
            for tri in seq]


@dataclass(frozen=True)
class Viewport:
    xmin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymax > 0):
            raise ValueError(f"empty viewport [{self.xmin}, {self.xmax}] x (0, {self.ymax}]")


def tessellation_edges(depth: int, xmin: float, xmax: float) -> list[tuple[Slope, Slope]]:
    """Farey edges with both denominators ``<= depth`` meeting the strip ``xmin <= x <= xmax``.

    Infinity has denominator 0 and is always included.
    """
    edges = []
    lo, hi = math.floor(xmin), math.ceil(xmax)
    for n in range(lo, hi + 1):
        if xmin <= n <= xmax:
            edges.append((make_slope(n, 1), INFINITY))
    # a finite edge spans an interval of length 1/(q s) <= 1
    for q in range(1, depth + 1):
        for p in range((lo - 1) * q, (hi + 1) * q + 1):
            if math.gcd(p, q) != 1:
                continue
            r0, s0 = _base_solution(p, q)
            k = -((depth + s0) // q)  # smallest k with s0 + k q >= -depth
            while s0 + k * q <= depth:
                r, s = r0 + k * p, s0 + k * q
                k += 1
                if s < 0:
                    r, s = -r, -s
                if s == 0 or r * q <= p * s:  # keep each edge once, left endpoint p/q
                    continue
                if r / s >= xmin and p / q <= xmax:
                    edges.append((make_slope(p, q), make_slope(r, s)))
    return edges


def _fmt(v: float) -> str:
    return f"{v:.4f}".rstrip("0").rstrip(".")


def render_svg(view: Viewport, depth: int, overlays: list[Geodesic] = (), width: int = 800) -> str:
    """SVG picture of the tessellation, clipped to ``view``, plus overlay geodesics."""
    if not 1 <= depth <= MAX_RENDER_DEPTH:
        raise ValueError(f"depth must be in [1, {MAX_RENDER_DEPTH}]")
    scale = width / (view.xmax - view.xmin)
    height = view.ymax * scale

    def px(x):
        return (float(x) - view.xmin) * scale

    def arc(g: Geodesic) -> str:
        if isinstance(g, Vertical):
            return f"M {_fmt(px(g.foot))} {_fmt(height)} V 0"
        u, v = g.endpoints()
        r = _fmt(float(g.radius) * scale)
        return f"M {_fmt(px(u))} {_fmt(height)} A {r} {r} 0 0 1 {_fmt(px(v))} {_fmt(height)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<defs><clipPath id="view"><rect x="0" y="0" '
        f'width="{_fmt(width)}" height="{_fmt(height)}"/></clipPath></defs>',
        '<g clip-path="url(#view)" fill="none">',
        '<g class="tessellation" stroke="black" stroke-width="1">',
    ]
    for a, b in tessellation_edges(depth, view.xmin, view.xmax):
        g = geodesic_through(a, b)
        lines.append(f'<path class="edge" data-ends="{a} {b}" d="{arc(g)}"/>')
    lines.append("</g>")
    lines.append('<g class="overlays" stroke="#c0392b" stroke-width="2.5">')
    for g in overlays:
        lines.append(f'<path class="overlay" d="{arc(g)}"/>')
    lines.append("</g>")
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
