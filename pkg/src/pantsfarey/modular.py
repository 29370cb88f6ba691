"""GL(2,Z) acting on slopes and on the upper half-plane.

Words in the generators are strings over ``T`` (translation
``[[1,1],[0,1]]``), ``t`` (its inverse), ``S`` (``[[0,-1],[1,0]]``) and ``R``
(the reflection ``[[1,0],[0,-1]]``).
"""

from __future__ import annotations

import functools
import json
import random
from dataclasses import dataclass
from typing import Iterable

from ._pykernels import _base_solution
from .slope import FareyEdge, Slope, is_adjacent, make_slope

__all__ = [
    "IntMatrix2",
    "ProjectiveClass",
    "IDENTITY",
    "T",
    "T_INV",
    "S",
    "R",
    "GENERATORS",
    "act_on_slope",
    "acts_trivially_on_slopes",
    "decompose",
    "word_to_matrix",
    "edge_normalizer",
    "slope_normalizer",
    "random_word",
    "random_matrix",
    "parse_matrix",
]


@dataclass(frozen=True)
class IntMatrix2:
    """Integer matrix ``[[a, b], [c, d]]`` with determinant +1 or -1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.a * self.d - self.b * self.c) != 1:
            raise ValueError(f"{self.to_list()} has determinant {self.det}, expected +-1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "IntMatrix2":
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "IntMatrix2":
        k = self.det  # +-1, so 1/det == det
        return IntMatrix2(k * self.d, -k * self.b, -k * self.c, k * self.a)

    def max_entry(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def to_list(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self):
        return json.dumps(self.to_list(), separators=(",", ":"))


def parse_matrix(text: str) -> IntMatrix2:
    """Parse the JSON form ``[[a,b],[c,d]]``."""
    try:
        rows = json.loads(text)
        (a, b), (c, d) = rows
        entries = [a, b, c, d]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in entries):
            raise TypeError
    except (ValueError, TypeError):
        raise ValueError(f"malformed matrix {text!r}; expected [[a,b],[c,d]] with integers")
    return IntMatrix2(a, b, c, d)


IDENTITY = IntMatrix2(1, 0, 0, 1)
T = IntMatrix2(1, 1, 0, 1)
T_INV = IntMatrix2(1, -1, 0, 1)
S = IntMatrix2(0, -1, 1, 0)
R = IntMatrix2(1, 0, 0, -1)
GENERATORS = {"T": T, "t": T_INV, "S": S, "R": R}


class ProjectiveClass:
    """A matrix modulo its sign; equality and hashing ignore the sign."""

    __slots__ = ("representative",)

    def __init__(self, m: IntMatrix2):
        entries = (m.a, m.b, m.c, m.d)
        lead = next(x for x in entries if x != 0)
        self.representative = m if lead > 0 else -m

    def __eq__(self, other):
        if not isinstance(other, ProjectiveClass):
            return NotImplemented
        return self.representative == other.representative

    def __hash__(self):
        return hash(self.representative)

    def __repr__(self):
        return f"ProjectiveClass({self.representative})"


def act_on_slope(m: IntMatrix2, s: Slope) -> Slope:
    return make_slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q)


_PROBES = (make_slope(1, 0), make_slope(0, 1), make_slope(1, 1))


def acts_trivially_on_slopes(m: IntMatrix2) -> bool:
    """Whether ``m`` fixes every slope.

    Fixing 1/0, 0/1 and 1/1 forces ``m`` diagonal with equal entries, i.e.
    ``m == +-I``, so three probes decide it exactly.
    """
    return all(act_on_slope(m, s) == s for s in _PROBES)


def word_to_matrix(word: str) -> IntMatrix2:
    m = IDENTITY
    for ch in word:
        try:
            m = m @ GENERATORS[ch]
        except KeyError:
            raise ValueError(f"unknown generator {ch!r} in word {word!r}") from None
    return m


def _power(k: int) -> str:
    return "T" * k if k >= 0 else "t" * (-k)


def decompose(m: IntMatrix2) -> str:
    """Write ``m`` as a word in T, t, S, R whose product is ``+-m``.

    Nearest-integer Euclidean reduction: the number of syllables (maximal
    runs of one letter) is O(log max|entry|); the letter count is the sum
    of the partial quotients.
    """
    prefix = ""
    if m.det == -1:
        prefix = "R"
        m = R @ m
    # m = T^q1 S T^q2 S ... (+-T^n), up to sign
    parts = []
    a, b, c, d = m.a, m.b, m.c, m.d
    while c != 0:
        k = _round_div(a, c)
        parts.append(_power(k))
        a, b = a - k * c, b - k * d
        # left-multiply by S^-1 = [[0,1],[-1,0]]
        a, b, c, d = c, d, -a, -b
        parts.append("S")
    # now [[a,b],[0,d]] with a = d = +-1
    parts.append(_power(a * b))
    return prefix + "".join(parts)


def _round_div(a: int, c: int) -> int:
    # nearest integer to a/c, ties toward floor
    q, r = divmod(a, c)
    if 2 * abs(r) > abs(c):
        q += 1
    return q


def edge_normalizer(e: FareyEdge) -> IntMatrix2:
    """A matrix carrying the endpoints of ``e`` onto ``{1/0, 0/1}``.

    When infinity is an endpoint it is sent to 1/0, so the edge (1/0, 0/1)
    gets the identity.
    """
    u, v = e.endpoints
    if v.is_infinite:
        u, v = v, u
    # columns u, v send 1/0 -> u and 0/1 -> v
    return IntMatrix2(u.p, v.p, u.q, v.q).inverse()


@functools.lru_cache(maxsize=4096)
def slope_normalizer(s: Slope) -> IntMatrix2:
    """A matrix sending ``s`` to 1/0, built from a canonical edge at ``s``."""
    r, q = _base_solution(s.p, s.q)
    other = make_slope(r, q)
    m = edge_normalizer(FareyEdge.of(s, other))
    if act_on_slope(m, s) != make_slope(1, 0):
        m = S @ m
    return m


def random_word(rng: random.Random, max_length: int, letters: str = "TtSR") -> str:
    n = rng.randint(0, max_length)
    return "".join(rng.choice(letters) for _ in range(n))


def random_matrix(rng: random.Random, max_length: int = 12, max_entry: int | None = None,
                  letters: str = "TtSR") -> IntMatrix2:
    """Random element of GL(2,Z) from a random word; optionally entry-bounded."""
    while True:
        m = word_to_matrix(random_word(rng, max_length, letters))
        if max_entry is None or m.max_entry() <= max_entry:
            return m


def adjacency_preserved(m: IntMatrix2, pairs: Iterable[tuple[Slope, Slope]]) -> bool:
    return all(is_adjacent(act_on_slope(m, a), act_on_slope(m, b)) == is_adjacent(a, b)
               for a, b in pairs)
