import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from pantsfarey.hyperbolic import (
    Semicircle,
    UHPoint,
    Vertical,
    apply_isometry,
    direction_at,
    equilateral_triangle,
    geodesic_through,
    hyp_distance,
    parameter_of,
    point_at_parameter,
)
from pantsfarey.modular import IDENTITY, R, T, IntMatrix2, random_matrix
from pantsfarey.slope import INFINITY, make_slope

I = UHPoint(0.0, 1.0)


def arclength_on_semicircle(c, r, z, w):
    """Hyperbolic length between two points of a semicircle, by quadrature of dtheta / sin(theta)."""
    ta = math.atan2(z.y, z.x - c)
    tb = math.atan2(w.y, w.x - c)
    val, _ = quad(lambda t: 1.0 / math.sin(t), min(ta, tb), max(ta, tb), epsabs=1e-13, epsrel=1e-13)
    return val


points = st.builds(UHPoint, st.floats(-5, 5), st.floats(0.01, 5))


class TestDistance:
    def test_vertical(self):
        assert hyp_distance(I, UHPoint(0, 2)) == pytest.approx(math.log(2), abs=1e-12)

    def test_zero(self):
        z = UHPoint(0.3, 0.7)
        assert hyp_distance(z, z) == 0

    def test_quadrature(self):
        z, w = I, UHPoint(1.0, 1.0)
        g = geodesic_through(z, w)
        ref = arclength_on_semicircle(g.center, g.radius, z, w)
        assert hyp_distance(z, w) == pytest.approx(ref, abs=1e-6)
        assert hyp_distance(z, w) == pytest.approx(math.acosh(1.5), abs=1e-12)

    @given(points, points)
    def test_symmetric_and_matches_arcosh(self, z, w):
        d = hyp_distance(z, w)
        assert d == hyp_distance(w, z)
        ref = math.acosh(1 + ((z.x - w.x) ** 2 + (z.y - w.y) ** 2) / (2 * z.y * w.y))
        assert d == pytest.approx(ref, rel=1e-9, abs=1e-7)


class TestGeodesicThrough:
    def test_boundary_pair(self):
        g = geodesic_through(make_slope(0, 1), make_slope(1, 1))
        assert g == Semicircle(Fraction(1, 2), Fraction(1, 2))

    def test_imaginary_axis(self):
        assert geodesic_through(make_slope(0, 1), INFINITY) == Vertical(0)

    def test_two_points(self):
        g = geodesic_through(I, UHPoint(1.0, 1.0))
        assert g.center == pytest.approx(0.5)
        assert g.radius == pytest.approx(math.sqrt(5) / 2)
        for z in (I, UHPoint(1.0, 1.0)):
            assert abs(complex(z) - g.center) == pytest.approx(g.radius)

    def test_point_and_boundary(self):
        g = geodesic_through(UHPoint(0.3, 0.4), 1.0)
        assert abs(complex(0.3, 0.4) - g.center) == pytest.approx(g.radius)
        assert g.endpoints()[1] == pytest.approx(1.0)
        assert geodesic_through(UHPoint(2, 1), INFINITY) == Vertical(2)
        assert geodesic_through(UHPoint(Fraction(1, 3), 1), make_slope(1, 3)) == Vertical(Fraction(1, 3))

    def test_near_vertical_switch(self):
        assert isinstance(geodesic_through(UHPoint(1.0, 1.0), UHPoint(1.0 + 1e-14, 2.0)), Vertical)

    def test_rejects_equal(self):
        with pytest.raises(ValueError):
            geodesic_through(I, I)
        with pytest.raises(ValueError):
            geodesic_through(make_slope(1, 2), make_slope(2, 4))


class TestIsometry:
    def test_reflection(self):
        assert apply_isometry(R, UHPoint(1, 1)) == UHPoint(-1, 1)

    def test_identity(self):
        z = UHPoint(0.25, 3.5)
        assert apply_isometry(IDENTITY, z) == z

    def test_translation(self):
        w = apply_isometry(T, I)
        assert (w.x, w.y) == (1.0, 1.0)
        other = UHPoint(-0.5, 2.0)
        assert hyp_distance(w, apply_isometry(T, other)) == pytest.approx(hyp_distance(I, other), abs=1e-12)

    def test_matches_complex_formula(self):
        rng = random.Random(4)
        for _ in range(200):
            m = random_matrix(rng, 10)
            z = complex(rng.uniform(-3, 3), rng.uniform(0.1, 3))
            zz = z if m.det == 1 else z.conjugate()
            ref = (m.a * zz + m.b) / (m.c * zz + m.d)
            got = apply_isometry(m, UHPoint(z.real, z.imag))
            assert complex(got) == pytest.approx(ref, rel=1e-12)
            assert got.y > 0

    def test_exact_on_rationals(self):
        m = IntMatrix2(2, 1, 1, 1)
        z = UHPoint(Fraction(1, 3), Fraction(2, 5))
        w = apply_isometry(m, z)
        assert isinstance(w.x, Fraction) and isinstance(w.y, Fraction)
        back = apply_isometry(m.inverse(), w)
        assert back == z

    def test_invariance_random(self):
        rng = random.Random(10)
        for sign in (1, -1):
            n = 0
            while n < 2000:
                m = random_matrix(rng, 14, max_entry=20)
                if m.det != sign:
                    continue
                z = UHPoint(rng.uniform(-2, 2), rng.uniform(0.05, 3))
                w = UHPoint(rng.uniform(-2, 2), rng.uniform(0.05, 3))
                d0 = hyp_distance(z, w)
                d1 = hyp_distance(apply_isometry(m, z), apply_isometry(m, w))
                assert abs(d1 - d0) < 1e-9
                n += 1


class TestParameter:
    def test_vertical_flow(self):
        g = Vertical(0)
        for t in (-2.0, 0.0, 1.5):
            z = point_at_parameter(g, t)
            assert (z.x, z.y) == (0, pytest.approx(math.exp(t)))

    def test_same_parameter(self):
        g = Semicircle(0.3, 2.0)
        assert point_at_parameter(g, 0.7) == point_at_parameter(g, 0.7)

    def test_top_of_circle(self):
        z = point_at_parameter(Semicircle(0, 1), 0.0)
        assert (z.x, z.y) == (0.0, 1.0)

    def test_unit_speed_against_quadrature(self):
        g = Semicircle(0.0, 1.0)
        z, w = point_at_parameter(g, -0.4), point_at_parameter(g, 1.1)
        assert arclength_on_semicircle(0.0, 1.0, z, w) == pytest.approx(1.5, abs=1e-6)

    @settings(max_examples=200)
    @given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-3, 3), st.floats(0.1, 4))
    def test_unit_speed(self, s, t, c, r):
        for g in (Semicircle(c, r), Vertical(c)):
            d = hyp_distance(point_at_parameter(g, s), point_at_parameter(g, t))
            assert abs(d - abs(s - t)) < 1e-8

    @given(st.floats(-8, 8), st.floats(-3, 3), st.floats(0.1, 4))
    def test_parameter_inverse(self, t, c, r):
        for g in (Semicircle(c, r), Vertical(c)):
            assert parameter_of(g, point_at_parameter(g, t)) == pytest.approx(t, abs=1e-8)


def finite_difference_angle(base, target):
    g = geodesic_through(base, target)
    t0 = parameter_of(g, base)
    h = 1e-6
    a, b = point_at_parameter(g, t0 - h), point_at_parameter(g, t0 + h)
    ang = math.atan2(b.y - a.y, b.x - a.x)
    # orient toward the target endpoint
    ends = g.endpoints()
    if isinstance(g, Semicircle) and float(target) == pytest.approx(float(ends[0])):
        ang += math.pi
    return ang % (2 * math.pi)


class TestDirection:
    def test_up_and_down(self):
        assert direction_at(I, INFINITY) == pytest.approx(math.pi / 2)
        assert direction_at(I, make_slope(0, 1)) == pytest.approx(3 * math.pi / 2)

    def test_finite_difference(self):
        assert direction_at(I, 1.0) == pytest.approx(finite_difference_angle(I, 1.0), abs=1e-6)
        rng = random.Random(1)
        for _ in range(100):
            base = UHPoint(rng.uniform(-2, 2), rng.uniform(0.2, 2))
            x = rng.uniform(-4, 4)
            got, ref = direction_at(base, x), finite_difference_angle(base, x)
            assert abs(cmath.exp(1j * got) - cmath.exp(1j * ref)) < 1e-5

    def test_injective(self):
        base = UHPoint(0.3, 0.8)
        targets = sorted({make_slope(p, q) for q in range(1, 40) for p in range(-60, 61)},
                         key=lambda s: s.sort_key())[:1000]
        angles = [direction_at(base, t) for t in targets]
        assert len(targets) == 1000
        assert len(set(angles)) == len(angles)
        # monotone after unwrapping
        lifted = [a + 2 * math.pi if a <= math.pi / 2 else a for a in angles]
        assert all(u < v for u, v in zip(lifted, lifted[1:]))


class TestEquilateral:
    def test_unit_side(self):
        a, b, c = equilateral_triangle(1.0)
        for u, v in ((a, b), (b, c), (a, c)):
            assert abs(hyp_distance(u, v) - 1.0) < 1e-9
        assert a.x == 0

    def test_median_right_triangle_identity(self):
        a, b, c = equilateral_triangle(1.0)
        g = geodesic_through(b, c)
        mid = point_at_parameter(g, (parameter_of(g, b) + parameter_of(g, c)) / 2)
        expected = math.acosh(math.cosh(1.0) / math.cosh(0.5))
        assert hyp_distance(a, mid) == pytest.approx(expected, abs=1e-9)

    def test_small_is_euclidean(self):
        side = 0.01
        a, b, c = equilateral_triangle(side)
        g = geodesic_through(b, c)
        mid = point_at_parameter(g, (parameter_of(g, b) + parameter_of(g, c)) / 2)
        assert hyp_distance(a, mid) == pytest.approx(math.sqrt(3) / 2 * side, rel=0.01)

    @pytest.mark.parametrize("side", [0.0, -1.0])
    def test_rejects_nonpositive(self, side):
        with pytest.raises(ValueError):
            equilateral_triangle(side)

    def test_rejects_lower_half_plane(self):
        with pytest.raises(ValueError):
            UHPoint(0, 0)
