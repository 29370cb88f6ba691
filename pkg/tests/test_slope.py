import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from pantsfarey import kernels
from pantsfarey.oracles import BoxGraph, slopes_in_box
from pantsfarey.slope import (
    INFINITY,
    FareyEdge,
    FareyTriangle,
    Slope,
    farey_distance,
    farey_geodesic,
    is_adjacent,
    make_slope,
    mediant,
    neighbors_bounded,
    parse_slope,
)


def s(text):
    return parse_slope(text)


@st.composite
def slopes(draw, bound=1000):
    p = draw(st.integers(-bound, bound))
    q = draw(st.integers(0, bound))
    if (p, q) == (0, 0):
        q = 1
    return make_slope(p, q)


class TestMakeSlope:
    def test_examples(self):
        assert make_slope(2, 4) == Slope(1, 2)
        assert make_slope(-3, 0) == INFINITY
        assert make_slope(3, -6) == Slope(-1, 2)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            make_slope(0, 0)

    def test_non_canonical_constructor_rejected(self):
        for p, q in [(2, 4), (1, -2), (-1, 0), (5, 0)]:
            with pytest.raises(ValueError):
                Slope(p, q)

    @given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(-50, 50).filter(bool))
    def test_scaling_invariant(self, p, q, k):
        if (p, q) == (0, 0):
            return
        assert make_slope(k * p, k * q) == make_slope(p, q)

    def test_parse_and_format(self):
        assert str(s("-1/2")) == "-1/2"
        assert s("1/0") == INFINITY
        assert s("-4/-8") == Slope(1, 2)
        assert s("3") == Slope(3, 1)
        for bad in ["", "1/2/3", "a/b", "0/0", "1.5/2"]:
            with pytest.raises(ValueError):
                s(bad)

    def test_big_integers(self):
        big = 3 ** 200
        a = make_slope(big, big + 1)
        b = make_slope(big + 1, big + 2)
        assert is_adjacent(a, b)
        assert mediant(a, b) == make_slope(2 * big + 1, 2 * big + 3)


class TestAdjacency:
    def test_examples(self):
        assert is_adjacent(s("0/1"), s("1/1"))
        assert not is_adjacent(s("0/1"), s("2/5"))
        assert not is_adjacent(s("3/7"), s("3/7"))

    @settings(max_examples=300)
    @given(slopes(), slopes())
    def test_symmetric_irreflexive(self, a, b):
        assert is_adjacent(a, b) == is_adjacent(b, a)
        assert not is_adjacent(a, a)

    def test_random_pairs(self):
        rng = random.Random(7)
        for _ in range(10_000):
            a = make_slope(rng.randint(-1000, 1000), rng.randint(1, 1000))
            b = make_slope(rng.randint(-1000, 1000), rng.randint(0, 1000) or 1)
            assert is_adjacent(a, b) == is_adjacent(b, a)
            assert is_adjacent(a, b) == (abs(a.p * b.q - a.q * b.p) == 1)


class TestMediant:
    def test_examples(self):
        assert mediant(s("0/1"), s("1/1")) == s("1/2")
        assert mediant(s("0/1"), s("1/0")) == s("1/1")
        m = mediant(s("1/2"), s("1/3"))
        assert m == s("2/5")
        assert is_adjacent(m, s("1/2")) and is_adjacent(m, s("1/3"))

    def test_rejects_non_adjacent(self):
        with pytest.raises(ValueError):
            mediant(s("0/1"), s("2/5"))

    @given(slopes(200))
    def test_adjacent_to_both(self, a):
        for b in neighbors_bounded(a, 300)[:5]:
            m = mediant(a, b)
            assert is_adjacent(m, a) and is_adjacent(m, b)
            FareyTriangle.of(a, b, m)


def brute_neighbors(a, bound):
    out = set()
    for q in range(0, bound + 1):
        for p in range(-bound, bound + 1):
            if (p, q) != (0, 0) and math.gcd(p, q) == 1 and (q or p == 1):
                b = Slope(p, q)
                if is_adjacent(a, b):
                    out.add(b)
    return sorted(out, key=Slope.sort_key)


class TestNeighbors:
    def test_infinity(self):
        assert [str(x) for x in neighbors_bounded(INFINITY, 3)] == [
            "-3/1", "-2/1", "-1/1", "0/1", "1/1", "2/1", "3/1"]

    def test_zero(self):
        assert [str(x) for x in neighbors_bounded(s("0/1"), 1)] == ["-1/1", "1/1", "1/0"]

    def test_rejects_zero_bound(self):
        with pytest.raises(ValueError):
            neighbors_bounded(s("1/2"), 0)

    @pytest.mark.parametrize("bound", [1, 2, 5, 9])
    def test_matches_scan(self, bound):
        for a in slopes_in_box(bound + 2):
            assert neighbors_bounded(a, bound) == brute_neighbors(a, bound)


class TestDistance:
    def test_examples(self):
        a = s("2/7")
        assert farey_distance(a, a) == 0
        assert farey_distance(s("0/1"), s("1/1")) == 1
        assert farey_distance(s("0/1"), s("2/5")) == 2

    def test_geodesic_examples(self):
        assert farey_geodesic(s("0/1"), s("0/1")) == [s("0/1")]
        assert farey_geodesic(s("0/1"), s("1/1")) == [s("0/1"), s("1/1")]
        assert farey_geodesic(s("0/1"), s("2/5")) == [s("0/1"), s("1/2"), s("2/5")]

    def test_oracle_small(self):
        # 0/1 to 2/5 checked against BFS on the box |p|, q <= 10
        g = BoxGraph(10)
        assert g.distances_from(s("0/1"))[s("2/5")] == 2

    def test_against_exhaustive_bfs(self):
        g = BoxGraph(50)
        ends = slopes_in_box(6)
        for a in ends:
            ref = g.distances_from(a)
            for b in ends:
                assert farey_distance(a, b) == ref[b], (a, b)

    def test_triangle_inequality(self):
        rng = random.Random(3)
        ends = slopes_in_box(8)
        for _ in range(300):
            a, b, c = rng.sample(ends, 3)
            assert farey_distance(a, c) <= farey_distance(a, b) + farey_distance(b, c)

    def test_geodesic_is_a_witness(self):
        rng = random.Random(5)
        ends = slopes_in_box(15)
        for _ in range(200):
            a, b = rng.sample(ends, 2)
            path = farey_geodesic(a, b)
            assert path[0] == a and path[-1] == b
            assert len(path) - 1 == farey_distance(a, b)
            assert all(is_adjacent(u, v) for u, v in zip(path, path[1:]))

    def test_large_endpoints(self):
        # distance from infinity is the length of the shortest continued fraction path
        a, b = INFINITY, make_slope(355, 113)
        d = farey_distance(a, b)
        path = farey_geodesic(a, b)
        assert len(path) - 1 == d and all(is_adjacent(u, v) for u, v in zip(path, path[1:]))
        # 355/113 = [3; 7, 16]: three convergent steps from infinity
        assert d == 3

    def test_edge_types(self):
        e = FareyEdge.of(s("1/0"), s("0/1"))
        assert e.endpoints == (s("0/1"), s("1/0"))
        with pytest.raises(ValueError):
            FareyEdge.of(s("0/1"), s("2/5"))
        with pytest.raises(ValueError):
            FareyTriangle.of(s("0/1"), s("1/1"), s("2/1"))
