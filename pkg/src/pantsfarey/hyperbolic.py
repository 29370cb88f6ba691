"""Upper half-plane geometry.

Coordinates may be floats or :class:`fractions.Fraction`; isometries act
exactly on rational points. Distances and angles are computed in floating
point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Union

from .modular import IntMatrix2
from .slope import Slope

__all__ = [
    "UHPoint",
    "Vertical",
    "Semicircle",
    "Geodesic",
    "BoundaryPoint",
    "DISTANCE_TOL",
    "hyp_distance",
    "geodesic_through",
    "apply_isometry",
    "point_at_parameter",
    "parameter_of",
    "direction_at",
    "equilateral_triangle",
]

DISTANCE_TOL = 1e-9
VERTICAL_TOL = 1e-12
TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class UHPoint:
    x: Real
    y: Real

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError(f"point ({self.x}, {self.y}) is not in the upper half-plane")

    @classmethod
    def from_complex(cls, z: complex) -> "UHPoint":
        return cls(z.real, z.imag)

    def __complex__(self):
        return complex(float(self.x), float(self.y))

    def to_json(self) -> dict:
        return {"x": _num(self.x), "y": _num(self.y)}


def _num(v):
    """JSON-friendly number: ints stay ints, everything else becomes float."""
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    if isinstance(v, int):
        return v
    return float(v)


# A boundary point is a Slope (exact, includes 1/0) or a finite real.
BoundaryPoint = Union[Slope, Real]


def _boundary_x(b):
    """Finite coordinate of a boundary point, or None for infinity."""
    if isinstance(b, Slope):
        return b.value
    if isinstance(b, float) and math.isinf(b):
        return None
    return b


@dataclass(frozen=True)
class Vertical:
    foot: Real

    def endpoints(self):
        return (self.foot, None)

    def to_json(self) -> dict:
        return {"kind": "vertical", "foot": _num(self.foot)}


@dataclass(frozen=True)
class Semicircle:
    center: Real
    radius: Real

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("semicircle radius must be positive")

    def endpoints(self):
        return (self.center - self.radius, self.center + self.radius)

    def to_json(self) -> dict:
        return {"kind": "semicircle", "center": _num(self.center), "radius": _num(self.radius)}


Geodesic = Union[Vertical, Semicircle]


def hyp_distance(z: UHPoint, w: UHPoint) -> float:
    """Hyperbolic distance ``arcosh(1 + |z-w|^2 / (2 Im z Im w))``.

    Evaluated as ``2 asinh(|z-w| / (2 sqrt(Im z Im w)))``, which keeps full
    relative precision for nearby points.
    """
    dx = float(z.x) - float(w.x)
    dy = float(z.y) - float(w.y)
    return 2.0 * math.asinh(math.hypot(dx, dy) / (2.0 * math.sqrt(float(z.y) * float(w.y))))


def _close(u, v) -> bool:
    if isinstance(u, (int, Fraction)) and isinstance(v, (int, Fraction)):
        return u == v
    return abs(u - v) < VERTICAL_TOL


def geodesic_through(a: Union[UHPoint, BoundaryPoint], b: Union[UHPoint, BoundaryPoint]) -> Geodesic:
    """The complete geodesic whose closure contains ``a`` and ``b``."""
    if isinstance(b, UHPoint) and not isinstance(a, UHPoint):
        a, b = b, a
    if isinstance(a, UHPoint):
        if isinstance(b, UHPoint):
            if a == b:
                raise ValueError("geodesic_through needs two distinct points")
            if _close(a.x, b.x):
                return Vertical(a.x)
            center = (b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y) / (2 * (b.x - a.x))
            return Semicircle(center, math.hypot(float(a.x - center), float(a.y)))
        bx = _boundary_x(b)
        if bx is None:
            return Vertical(a.x)
        if _close(a.x, bx):
            return Vertical(bx)
        center = (bx * bx - a.x * a.x - a.y * a.y) / (2 * (bx - a.x))
        return Semicircle(center, abs(float(bx - center)))
    ax, bx = _boundary_x(a), _boundary_x(b)
    if ax is None and bx is None or (ax is not None and bx is not None and ax == bx):
        raise ValueError("geodesic_through needs two distinct points")
    if ax is None:
        return Vertical(bx)
    if bx is None:
        return Vertical(ax)
    lo, hi = min(ax, bx), max(ax, bx)
    return Semicircle((lo + hi) / 2, (hi - lo) / 2)


def apply_isometry(m: IntMatrix2, z: UHPoint) -> UHPoint:
    """Moebius action for det +1; for det -1 the map composed with conjugation."""
    u = z.x
    v = z.y if m.det == 1 else -z.y
    # (a w + b) / (c w + d) with w = u + i v, expanded in real arithmetic
    nr = m.a * u + m.b
    dr = m.c * u + m.d
    di = m.c * v
    norm = dr * dr + di * di
    x = (nr * dr + m.a * v * di) / norm
    y = v * m.det / norm
    return UHPoint(x, y)


def point_at_parameter(g: Geodesic, t: float) -> UHPoint:
    """Unit-speed parameterization.

    Verticals run upward with ``t = 0`` at height 1; semicircles run from the
    left endpoint to the right with ``t = 0`` at the top.
    """
    if isinstance(g, Vertical):
        return UHPoint(g.foot, math.exp(t))
    c, r = float(g.center), float(g.radius)
    return UHPoint(c + r * math.tanh(t), r / math.cosh(t))


def parameter_of(g: Geodesic, z: UHPoint) -> float:
    """Inverse of :func:`point_at_parameter` for a point on ``g``."""
    if isinstance(g, Vertical):
        return math.log(float(z.y))
    dx = float(z.x) - float(g.center)
    r = float(g.radius)
    y = float(z.y)
    if dx >= 0:
        return math.log((r + dx) / y)
    return -math.log((r - dx) / y)


def direction_at(base: UHPoint, target: BoundaryPoint) -> float:
    """Angle in [0, 2pi) of the initial velocity from ``base`` toward ``target``."""
    tx = _boundary_x(target)
    if tx is None:
        return math.pi / 2
    bx, by = float(base.x), float(base.y)
    tx = float(tx)
    if tx == bx:
        return 3 * math.pi / 2
    c = (tx * tx - bx * bx - by * by) / (2 * (tx - bx))
    # tangent is perpendicular to the radius (bx - c, by); pick the
    # orientation that heads toward the target endpoint
    if tx > c:
        vx, vy = by, -(bx - c)
    else:
        vx, vy = -by, bx - c
    return math.atan2(vy, vx) % TWO_PI


def equilateral_triangle(side: float) -> tuple[UHPoint, UHPoint, UHPoint]:
    """Equilateral triangle of the given side length centred at ``i``.

    The first vertex lies on the imaginary axis; the other two are mirror
    images across it. The circumradius ``R`` solves the law of cosines
    ``cosh L = cosh^2 R + sinh^2 R / 2``.
    """
    if not side > 0:
        raise ValueError("side length must be positive")
    circumradius = math.asinh(math.sqrt(2.0 * (math.cosh(side) - 1.0) / 3.0))
    rho = math.tanh(circumradius / 2)
    pts = []
    for k in range(3):
        w = rho * complex(math.cos(TWO_PI * k / 3), math.sin(TWO_PI * k / 3))
        z = 1j * (1 + w) / (1 - w)  # disc -> half-plane
        pts.append(UHPoint(z.real, z.imag))
    pts[0] = UHPoint(0.0, pts[0].y)
    pts[2] = UHPoint(-pts[1].x, pts[1].y)
    for u, v in ((0, 1), (1, 2), (0, 2)):
        err = abs(hyp_distance(pts[u], pts[v]) - side)
        if err > DISTANCE_TOL * max(1.0, side):
            raise ArithmeticError(f"equilateral construction lost precision ({err:.2e})")
    return tuple(pts)
