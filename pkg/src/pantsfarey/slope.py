"""Reduced extended rationals and the Farey graph.

A :class:`Slope` ``p/q`` is stored in canonical form: ``gcd(|p|, q) == 1``,
``q >= 0``, and infinity is ``1/0``. Two slopes are Farey-adjacent exactly
when ``|ps - qr| == 1``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import kernels

__all__ = [
    "Slope",
    "FareyEdge",
    "FareyTriangle",
    "INFINITY",
    "make_slope",
    "parse_slope",
    "is_adjacent",
    "mediant",
    "neighbors_bounded",
    "farey_distance",
    "farey_geodesic",
    "initial_bound",
]

_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$|^\s*([+-]?\d+)\s*$")


@dataclass(frozen=True)
class Slope:
    """A canonical reduced extended rational. Build with :func:`make_slope`."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if (p, q) == (0, 0):
            raise ValueError("0/0 is not a slope")
        if q < 0 or math.gcd(p, q) != 1 or (q == 0 and p != 1):
            raise ValueError(f"({p}, {q}) is not in canonical form; use make_slope")

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def value(self) -> Optional[Fraction]:
        """Exact value, or None for infinity."""
        return None if self.q == 0 else Fraction(self.p, self.q)

    def __float__(self):
        return math.inf if self.q == 0 else self.p / self.q

    def sort_key(self):
        # by value, infinity last
        return (1, 0) if self.q == 0 else (0, Fraction(self.p, self.q))

    def __lt__(self, other: "Slope") -> bool:
        return self.sort_key() < other.sort_key()

    def __neg__(self) -> "Slope":
        return make_slope(-self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"

    def __repr__(self):
        return f"Slope({self.p}/{self.q})"


INFINITY = Slope(1, 0)


def make_slope(p: int, q: int) -> Slope:
    """Reduce ``p/q`` to canonical form.

    >>> make_slope(3, -6)
    Slope(-1/2)
    """
    p, q = int(p), int(q)
    if p == 0 and q == 0:
        raise ValueError("0/0 is not a slope")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def parse_slope(text: str) -> Slope:
    """Parse ``"p/q"`` (or a bare integer ``"p"``)."""
    m = _SLOPE_RE.match(text)
    if not m:
        raise ValueError(f"malformed slope {text!r}; expected p/q")
    if m.group(3) is not None:
        return make_slope(int(m.group(3)), 1)
    return make_slope(int(m.group(1)), int(m.group(2)))


def _det(a: Slope, b: Slope) -> int:
    return a.p * b.q - a.q * b.p


def is_adjacent(a: Slope, b: Slope) -> bool:
    return abs(_det(a, b)) == 1


def mediant(a: Slope, b: Slope) -> Slope:
    """Third vertex ``(p+r)/(q+s)`` of a Farey triangle on the edge ``ab``.

    Canonical representatives have nonnegative denominators, so the sum
    never degenerates for adjacent inputs.
    """
    if not is_adjacent(a, b):
        raise ValueError(f"{a} and {b} are not Farey-adjacent")
    return make_slope(a.p + b.p, a.q + b.q)


def neighbors_bounded(a: Slope, bound: int) -> list[Slope]:
    """All Farey neighbours ``b`` of ``a`` with ``|b.p| <= bound`` and ``b.q <= bound``."""
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    out = [Slope(p, q) for p, q in kernels.neighbors(a.p, a.q, bound)]
    out.sort(key=Slope.sort_key)
    return out


@dataclass(frozen=True)
class FareyEdge:
    """Unordered Farey-adjacent pair, stored sorted."""

    endpoints: tuple[Slope, Slope]

    def __post_init__(self):
        a, b = self.endpoints
        if not is_adjacent(a, b):
            raise ValueError(f"{a} and {b} are not Farey-adjacent")
        object.__setattr__(self, "endpoints", tuple(sorted((a, b), key=Slope.sort_key)))

    @classmethod
    def of(cls, a: Slope, b: Slope) -> "FareyEdge":
        return cls((a, b))

    def __str__(self):
        return "{%s, %s}" % self.endpoints


@dataclass(frozen=True)
class FareyTriangle:
    """Unordered triple of pairwise adjacent slopes, stored sorted (infinity last)."""

    vertices: tuple[Slope, Slope, Slope]

    def __post_init__(self):
        u, v, w = self.vertices
        if not (is_adjacent(u, v) and is_adjacent(v, w) and is_adjacent(u, w)):
            raise ValueError(f"{u}, {v}, {w} do not span a Farey triangle")
        object.__setattr__(self, "vertices", tuple(sorted((u, v, w), key=Slope.sort_key)))

    @classmethod
    def of(cls, u: Slope, v: Slope, w: Slope) -> "FareyTriangle":
        return cls((u, v, w))

    def edges(self) -> list[FareyEdge]:
        u, v, w = self.vertices
        return [FareyEdge.of(u, v), FareyEdge.of(v, w), FareyEdge.of(u, w)]

    def to_json(self) -> list[str]:
        return [str(s) for s in self.vertices]

    def __str__(self):
        return "(%s, %s, %s)" % self.vertices


def initial_bound(a: Slope, b: Slope) -> int:
    return 4 * max(abs(a.p), a.q, abs(b.p), b.q, 1)


_MAX_DOUBLINGS = 24


def _search(a: Slope, b: Slope, want_path: bool):
    """Adaptive-bound bidirectional BFS.

    Starts at ``initial_bound`` and doubles until the distance has been
    unchanged across two consecutive doublings. A bounded distance never
    increases with the bound, and no distance below 2 is possible for a
    non-adjacent pair, so a bounded result of 0, 1 or 2 is exact and ends the
    search early. Beyond that, the stopping rule is a heuristic; the test
    suite checks it against unrestricted BFS on a large box.
    """
    if a == b:
        return 0, [a]
    if is_adjacent(a, b):
        return 1, [a, b]
    bound = initial_bound(a, b)
    dist, path = kernels.bounded_distance(a.p, a.q, b.p, b.q, bound, want_path)
    stable = 0
    doublings = 0
    while dist > 2 and stable < 2 and doublings < _MAX_DOUBLINGS:
        bound *= 2
        doublings += 1
        d2, p2 = kernels.bounded_distance(a.p, a.q, b.p, b.q, bound, want_path)
        if d2 == dist:
            stable += 1
        else:
            stable = 0
            dist, path = d2, p2
    if dist < 0:
        raise RuntimeError(f"no path found between {a} and {b}")
    if want_path:
        path = [Slope(p, q) for p, q in path]
    return dist, path


def farey_distance(a: Slope, b: Slope) -> int:
    """Combinatorial distance between ``a`` and ``b`` in the Farey graph."""
    return _search(a, b, False)[0]


def farey_geodesic(a: Slope, b: Slope) -> list[Slope]:
    """A shortest Farey path from ``a`` to ``b``, endpoints included."""
    return _search(a, b, True)[1]
