"""The completed model space: interior points plus one noded point per slope.

Noded points are the rational boundary points; a neighbourhood of one is a
horoball tangent at that rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence, Union

from .hyperbolic import UHPoint, apply_isometry, direction_at
from .modular import IntMatrix2, act_on_slope, slope_normalizer
from .slope import INFINITY, Slope, is_adjacent, make_slope

__all__ = [
    "FNEntry",
    "ExtendedFNChart",
    "StratumIndex",
    "Interior",
    "Noded",
    "CompletedPoint",
    "Horoball",
    "HOROBALL_LEVELS",
    "chart_equal",
    "stratum_of",
    "closure_contains",
    "horoball_contains",
    "horoball_disk",
    "isolating_level",
    "converges_to",
    "isometry_preserves_strata",
    "PantsAutomorphism",
    "induced_pants_automorphism",
    "dense_direction",
    "simplest_between",
    "DensityError",
]


@dataclass(frozen=True)
class FNEntry:
    curve: Slope
    length: float
    twist: float

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"negative length {self.length} on curve {self.curve}")

    def to_json(self) -> dict:
        return {"curve": str(self.curve), "length": float(self.length), "twist": float(self.twist)}


@dataclass(frozen=True)
class ExtendedFNChart:
    """Length-twist coordinates along the curves of a pants decomposition."""

    entries: tuple[FNEntry, ...]

    def __post_init__(self):
        curves = [e.curve for e in self.entries]
        if len(set(curves)) != len(curves):
            raise ValueError("chart curves must be distinct")
        for a, b in combinations(curves, 2):
            if a.p * b.q != a.q * b.p:  # distinct slopes always intersect
                raise ValueError(f"curves {a} and {b} intersect; a chart needs disjoint curves")

    @property
    def curves(self) -> tuple[Slope, ...]:
        return tuple(e.curve for e in self.entries)

    @property
    def pinched(self) -> "StratumIndex":
        return StratumIndex(frozenset(e.curve for e in self.entries if e.length == 0))

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]

    @classmethod
    def from_json(cls, data: list) -> "ExtendedFNChart":
        from .slope import parse_slope

        return cls(tuple(FNEntry(parse_slope(d["curve"]), float(d["length"]), float(d["twist"]))
                         for d in data))


def chart_equal(c1: ExtendedFNChart, c2: ExtendedFNChart) -> bool:
    """Equality of extended coordinates: twists are forgotten where the length is 0."""
    if c1.curves != c2.curves:
        raise ValueError("charts are over different curve lists")
    for e1, e2 in zip(c1.entries, c2.entries):
        if e1.length != e2.length:
            return False
        if e1.length != 0 and e1.twist != e2.twist:
            return False
    return True


@dataclass(frozen=True)
class StratumIndex:
    pinched: frozenset = field(default_factory=frozenset)

    @property
    def k(self) -> int:
        return len(self.pinched)

    def to_json(self) -> list[str]:
        return [str(s) for s in sorted(self.pinched, key=Slope.sort_key)]


@dataclass(frozen=True)
class Interior:
    point: UHPoint


@dataclass(frozen=True)
class Noded:
    curve: Slope


CompletedPoint = Union[Interior, Noded]


def stratum_of(x: CompletedPoint) -> StratumIndex:
    if isinstance(x, Noded):
        return StratumIndex(frozenset([x.curve]))
    return StratumIndex()


def closure_contains(sigma: StratumIndex, tau: StratumIndex) -> bool:
    """True when the sigma-stratum lies in the closure of the tau-stratum."""
    return tau.pinched <= sigma.pinched


@dataclass(frozen=True)
class Horoball:
    base: Slope
    level: float

    def __post_init__(self):
        if not self.level > 0:
            raise ValueError("horoball level must be positive")


def horoball_contains(h: Horoball, z: UHPoint) -> bool:
    """Whether ``z`` lies in the open horoball.

    The base is moved to infinity by a fixed normalizer; the horoball is then
    the half-plane above ``level``. Any other normalizer differs by a
    stabilizer element of infinity, which preserves heights here because it
    is integral with determinant +-1.
    """
    if h.base.is_infinite:
        return z.y > h.level
    return apply_isometry(slope_normalizer(h.base), z).y > h.level


def horoball_disk(h: Horoball) -> tuple[Fraction, float]:
    """Euclidean (tangent point, diameter) of a horoball at a finite base."""
    return h.base.value, 1.0 / (h.level * h.base.q ** 2)


def isolating_level(r: Slope, s: Slope) -> Fraction:
    """Smallest level at which open horoballs at ``r`` and ``s`` are disjoint.

    Disks tangent at ``u`` and ``v`` with diameters ``D1, D2`` are disjoint
    iff ``(u - v)^2 >= D1 D2``, which at a common level reduces to
    ``level >= 1 / |ps - qr|``.
    """
    if r == s:
        raise ValueError("horoballs at the same base always meet")
    return Fraction(1, abs(r.p * s.q - r.q * s.p))


HOROBALL_LEVELS = tuple(2.0 ** k for k in range(21))


def converges_to(points: Sequence[UHPoint], base: Slope, levels: Iterable[float] = HOROBALL_LEVELS) -> bool:
    """Finite proxy for convergence to a noded point.

    For every tested level the points inside the horoball must form a
    nonempty tail of the sequence.
    """
    if not points:
        return False
    for level in levels:
        h = Horoball(base, level)
        inside = [horoball_contains(h, z) for z in points]
        if not inside[-1]:
            return False
        first = inside.index(True)
        if not all(inside[first:]):
            return False
    return True


def isometry_preserves_strata(m: IntMatrix2, x: CompletedPoint) -> CompletedPoint:
    """Image of a completed point under the isometry induced by ``m``."""
    if isinstance(x, Noded):
        return Noded(act_on_slope(m, x.curve))
    return Interior(apply_isometry(m, x.point))


class PantsAutomorphism:
    """Vertex map of the Farey graph induced by a matrix."""

    def __init__(self, m: IntMatrix2):
        self.matrix = m

    def __call__(self, s: Slope) -> Slope:
        return act_on_slope(self.matrix, s)

    def certify(self, vertices: Iterable[Slope]) -> dict:
        """Check that the map is injective and preserves adjacency and non-adjacency on ``vertices``."""
        vs = list(dict.fromkeys(vertices))
        images = [self(v) for v in vs]
        injective = len(set(images)) == len(images)
        edges = 0
        violations = []
        for i, j in combinations(range(len(vs)), 2):
            adj = is_adjacent(vs[i], vs[j])
            edges += adj
            if adj != is_adjacent(images[i], images[j]):
                violations.append([str(vs[i]), str(vs[j])])
        return {
            "vertices": len(vs),
            "edges": edges,
            "injective": injective,
            "violations": violations,
            "ok": injective and not violations,
        }


def induced_pants_automorphism(m: IntMatrix2) -> PantsAutomorphism:
    return PantsAutomorphism(m)


class DensityError(ArithmeticError):
    """The angular window is below what bisection can resolve."""


MAX_BISECTIONS = 60


def _angle_gap(a: float, b: float) -> float:
    d = (a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def simplest_between(lo: Fraction, hi: Fraction | None) -> Fraction:
    """Fraction with the smallest denominator in the open interval ``(lo, hi)``.

    ``hi=None`` stands for +infinity.
    """
    if hi is not None and not lo < hi:
        raise ValueError("empty interval")
    fl = math.floor(lo)
    if hi is None or fl + 1 < hi:
        # an integer lies strictly inside; take the one closest to 0
        if hi is not None and lo < 0 < hi:
            return Fraction(0)
        if lo >= 0:
            return Fraction(fl + 1)
        return Fraction(math.ceil(hi) - 1)
    # (lo, hi) sits inside [fl, fl + 1]: continue on reciprocals of the fractional parts
    upper = None if lo == fl else 1 / (lo - fl)
    return fl + 1 / simplest_between(1 / (hi - fl), upper)


def dense_direction(base: UHPoint, phi: float, eps: float) -> Slope:
    """A slope whose direction seen from ``base`` is within ``eps`` of ``phi``.

    The direction toward a real boundary point increases continuously (mod
    2 pi) as the point moves left to right, wrapping once at infinity. Bisect
    for an interval of boundary points whose directions all lie in the
    window, then return the rational of least denominator in it.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    if _angle_gap(direction_at(base, INFINITY), phi) < eps:
        return INFINITY
    two_pi = 2 * math.pi
    bx, by = float(base.x), float(base.y)

    def unwrapped(t):
        # lift into (pi/2, 5 pi/2), increasing in t
        a = direction_at(base, t)
        return a + two_pi if a <= math.pi / 2 else a

    target = phi % two_pi
    if target <= math.pi / 2:
        target += two_pi
    # bracket
    span = by
    while unwrapped(bx - span) >= target or unwrapped(bx + span) <= target:
        span *= 2
        if span > 1e300:
            raise DensityError("could not bracket the target direction")
    lo, hi = bx - span, bx + span
    for _ in range(MAX_BISECTIONS):
        r = simplest_between(Fraction(lo), Fraction(hi))
        if _angle_gap(direction_at(base, r), phi) < eps:
            return make_slope(r.numerator, r.denominator)
        mid = (lo + hi) / 2
        if unwrapped(mid) < target:
            lo = mid
        else:
            hi = mid
    raise DensityError(f"eps={eps} not reached in {MAX_BISECTIONS} bisection steps")
