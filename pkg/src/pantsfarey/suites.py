"""Named property suites, run by ``pantsfarey verify``.

Each suite takes a seed and a trial budget and returns a JSON-ready report
with pass/fail counts and, where one exists, the worst-case margin. A budget
of 0 selects the suite's exhaustive or default mode.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations, product
from typing import Callable

from . import oracles
from .augmented import (
    Horoball,
    Interior,
    Noded,
    dense_direction,
    horoball_contains,
    isolating_level,
    isometry_preserves_strata,
    stratum_of,
)
from .farey_geometry import cutting_sequence, locate_triangle
from .hyperbolic import (
    UHPoint,
    apply_isometry,
    direction_at,
    equilateral_triangle,
    geodesic_through,
    hyp_distance,
    parameter_of,
    point_at_parameter,
)
from .modular import (
    R,
    IntMatrix2,
    ProjectiveClass,
    act_on_slope,
    acts_trivially_on_slopes,
    decompose,
    random_matrix,
    random_word,
    word_to_matrix,
)
from .slope import Slope, farey_distance, is_adjacent, make_slope, mediant
from .surface import SurfaceModel, model_distance

__all__ = ["SUITES", "run_suite", "LEMMA_SIDES", "triangle_margins", "random_point"]

LEMMA_SIDES = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)


def _report(name, seed, budget, passed, failed, **extra):
    out = {"suite": name, "seed": seed, "budget": budget, "trials": passed + failed,
           "passed": passed, "failed": failed, "ok": failed == 0}
    out.update(extra)
    return out


def random_slope(rng: random.Random, bound: int) -> Slope:
    while True:
        p, q = rng.randint(-bound, bound), rng.randint(0, bound)
        if (p, q) != (0, 0) and math.gcd(p, q) == 1 and (q != 0 or p == 1):
            return Slope(p, q)


def random_point(rng: random.Random, xlo=-2.0, xhi=2.0, ylo=0.05, yhi=3.0) -> UHPoint:
    return UHPoint(rng.uniform(xlo, xhi), rng.uniform(ylo, yhi))


def suite_adjacency(seed, budget):
    rng = random.Random(seed)
    n = budget or 10_000
    passed = failed = 0
    for _ in range(n):
        a, b = random_slope(rng, 1000), random_slope(rng, 1000)
        ok = is_adjacent(a, b) == is_adjacent(b, a) and not is_adjacent(a, a)
        if is_adjacent(a, b):
            m = mediant(a, b)
            ok = ok and is_adjacent(m, a) and is_adjacent(m, b)
        passed += ok
        failed += not ok
    return _report("adjacency", seed, budget, passed, failed)


def suite_farey_distance(seed, budget):
    """Production distance against exhaustive BFS on the box |p|, q <= 50."""
    graph = oracles.BoxGraph(50)
    ends = oracles.slopes_in_box(12)
    pairs = list(combinations(ends, 2))
    if budget:
        pairs = random.Random(seed).sample(pairs, min(budget, len(pairs)))
    by_source = {}
    passed = failed = 0
    mismatches = []
    for a, b in pairs:
        if a not in by_source:
            by_source[a] = graph.distances_from(a)
        expect = by_source[a][b]
        got = farey_distance(a, b)
        if got == expect:
            passed += 1
        else:
            failed += 1
            mismatches.append([str(a), str(b), got, expect])
    return _report("farey-distance", seed, budget, passed, failed, mismatches=mismatches[:20])


def triangle_margins(side: float, samples: int) -> tuple[float, float]:
    """Minimum over the three sides of d(vertex, D) - side/2, D sampled on the opposite side.

    Also returns the distance from the apex to the midpoint of the opposite
    side.
    """
    pts = equilateral_triangle(side)
    worst = math.inf
    median = None
    for i in range(3):
        apex, u, v = pts[i], pts[(i + 1) % 3], pts[(i + 2) % 3]
        g = geodesic_through(u, v)
        tu, tv = parameter_of(g, u), parameter_of(g, v)
        for k in range(samples):
            t = tu + (tv - tu) * k / (samples - 1) if samples > 1 else (tu + tv) / 2
            worst = min(worst, hyp_distance(apex, point_at_parameter(g, t)) - side / 2)
        if i == 0:
            median = hyp_distance(apex, point_at_parameter(g, (tu + tv) / 2))
    return worst, median


def suite_lemma_triangle(seed, budget):
    samples = budget or 100
    passed = failed = 0
    margins = {}
    for side in LEMMA_SIDES:
        m, median = triangle_margins(side, samples)
        margins[str(side)] = m
        passed += m > 0
        failed += not m > 0
    _, median = triangle_margins(1.0, 3)
    return _report("lemma-triangle", seed, budget, passed, failed,
                   min_margin=min(margins.values()), margins=margins,
                   median_L1=median,
                   median_L1_expected=math.acosh(math.cosh(1.0) / math.cosh(0.5)))


def suite_cutting_length(seed, budget):
    ends = oracles.slopes_in_box(12)
    pairs = list(combinations(ends, 2))
    if budget:
        pairs = random.Random(seed).sample(pairs, min(budget, len(pairs)))
    passed = failed = 0
    exceptions = []
    for a, b in pairs:
        n = len(cutting_sequence(a, b))
        ok = (n == 0) if is_adjacent(a, b) else (n >= 2)
        passed += ok
        if not ok:
            failed += 1
            exceptions.append([str(a), str(b), n])
    return _report("cutting-length", seed, budget, passed, failed, exceptions=exceptions[:20])


def suite_isometry(seed, budget):
    rng = random.Random(seed)
    n = budget or 10_000
    worst = 0.0
    passed = failed = 0
    for _ in range(n):
        m = random_matrix(rng, 16, max_entry=20)
        z, w = random_point(rng), random_point(rng)
        err = abs(hyp_distance(apply_isometry(m, z), apply_isometry(m, w)) - hyp_distance(z, w))
        worst = max(worst, err)
        passed += err < 1e-9
        failed += not err < 1e-9
    return _report("isometry", seed, budget, passed, failed, max_error=worst)


def suite_kernel(seed, budget):
    """acts_trivially_on_slopes(M) iff M = +-I, over unimodular matrices with small entries."""
    bound = 3 if budget == 0 else budget
    identity = {IntMatrix2(1, 0, 0, 1), IntMatrix2(-1, 0, 0, -1)}
    passed = failed = 0
    kernel = []
    rng_entries = range(-bound, bound + 1)
    for a, b, c, d in product(rng_entries, repeat=4):
        if abs(a * d - b * c) != 1:
            continue
        m = IntMatrix2(a, b, c, d)
        trivial = acts_trivially_on_slopes(m)
        if trivial:
            kernel.append(m.to_list())
        ok = trivial == (m in identity)
        passed += ok
        failed += not ok
    return _report("kernel", seed, budget, passed, failed, kernel=sorted(kernel), entry_bound=bound)


def suite_reflection(seed, budget):
    """[[1,0],[0,-1]] acts as z -> -conj(z) and fixes the imaginary axis."""
    rng = random.Random(seed)
    n = budget or 20
    passed = failed = 0
    for _ in range(n):
        z = UHPoint(Fraction(rng.randint(-50, 50), rng.randint(1, 20)),
                    Fraction(rng.randint(1, 50), rng.randint(1, 20)))
        ok = apply_isometry(R, z) == UHPoint(-z.x, z.y)
        passed += ok
        failed += not ok
    worst = 0.0
    for k in range(n):
        y = 10 ** rng.uniform(-3, 3)
        img = apply_isometry(R, UHPoint(0.0, y))
        err = max(abs(img.x), abs(img.y - y))
        worst = max(worst, err)
        passed += err <= 1e-12
        failed += not err <= 1e-12
    return _report("reflection", seed, budget, passed, failed, axis_max_error=worst)


def suite_strata(seed, budget):
    rng = random.Random(seed)
    n = budget or 1000
    passed = failed = 0
    for _ in range(n):
        m = random_matrix(rng, 12)
        if rng.random() < 0.5:
            x = Noded(random_slope(rng, 30))
        else:
            x = Interior(random_point(rng))
        y = isometry_preserves_strata(m, x)
        ok = stratum_of(y).k == stratum_of(x).k and type(y) is type(x)
        if isinstance(x, Noded):
            ok = ok and y.curve == act_on_slope(m, x.curve)
        passed += ok
        failed += not ok
    return _report("strata", seed, budget, passed, failed)


def suite_scale(seed, budget):
    rng = random.Random(seed)
    n = budget or 1000
    s11, s04 = SurfaceModel.ONE_HOLED_TORUS, SurfaceModel.FOUR_HOLED_SPHERE
    passed = failed = 0
    for _ in range(n):
        z, w, u = random_point(rng), random_point(rng), random_point(rng)
        d11, d04 = model_distance(s11, z, w), model_distance(s04, z, w)
        e11, e04 = model_distance(s11, z, u), model_distance(s04, z, u)
        ok = d04 == 2 * d11 and (d11 < e11) == (d04 < e04) and (d11 > 1.0) == (d04 > 2.0)
        passed += ok
        failed += not ok
    return _report("scale", seed, budget, passed, failed)


def suite_density(seed, budget):
    base = UHPoint(0.0, 1.0)
    coarse = budget or 64
    passed = failed = 0
    worst = 0.0
    cases = [(2 * math.pi * k / coarse, 1e-3) for k in range(coarse)]
    cases += [(2 * math.pi * k / 16 + 0.05, 1e-6) for k in range(16)]
    for phi, eps in cases:
        s = dense_direction(base, phi, eps)
        gap = abs((direction_at(base, s) - phi + math.pi) % (2 * math.pi) - math.pi)
        worst = max(worst, gap / eps)
        passed += gap < eps
        failed += not gap < eps
    return _report("density", seed, budget, passed, failed, worst_gap_over_eps=worst)


def suite_coverage(seed, budget):
    rng = random.Random(seed)
    n = budget or 10_000
    passed = failed = 0
    for _ in range(n):
        z = UHPoint(rng.uniform(-5, 5), 5.0 - rng.uniform(0, 5))
        ok = oracles.edge_side_ok(locate_triangle(z), z)
        passed += ok
        failed += not ok
    return _report("coverage", seed, budget, passed, failed)


def suite_equivariance(seed, budget):
    rng = random.Random(seed)
    n = budget or 500
    passed = failed = 0
    for _ in range(n):
        m = random_matrix(rng, 10)
        a = random_slope(rng, 12)
        b = random_slope(rng, 12)
        if a == b:
            continue
        image = [frozenset(act_on_slope(m, v) for v in t.vertices) for t in cutting_sequence(a, b)]
        direct = [frozenset(t.vertices) for t in cutting_sequence(act_on_slope(m, a), act_on_slope(m, b))]
        ok = image == direct
        passed += ok
        failed += not ok
    return _report("equivariance", seed, budget, passed, failed)


def suite_decompose(seed, budget):
    rng = random.Random(seed)
    n = budget or 10_000
    passed = failed = 0
    for _ in range(n):
        m = word_to_matrix(random_word(rng, 30))
        ok = ProjectiveClass(word_to_matrix(decompose(m))) == ProjectiveClass(m)
        passed += ok
        failed += not ok
    return _report("decompose", seed, budget, passed, failed)


def suite_isolation(seed, budget):
    """Distinct noded points have disjoint horoball neighbourhoods."""
    rng = random.Random(seed)
    n = budget or 1000
    passed = failed = 0
    for _ in range(n):
        r, s = random_slope(rng, 20), random_slope(rng, 20)
        if r == s:
            continue
        level = float(isolating_level(r, s)) * 1.5
        hr, hs = Horoball(r, level), Horoball(s, level)
        # sample the geodesic between the bases: no point may lie in both
        g = geodesic_through(r, s)
        ok = True
        for k in range(-20, 21):
            z = point_at_parameter(g, k / 2)
            if horoball_contains(hr, z) and horoball_contains(hs, z):
                ok = False
        passed += ok
        failed += not ok
    return _report("isolation", seed, budget, passed, failed)


SUITES: dict[str, Callable[[int, int], dict]] = {
    "adjacency": suite_adjacency,
    "farey-distance": suite_farey_distance,
    "lemma-triangle": suite_lemma_triangle,
    "cutting-length": suite_cutting_length,
    "isometry": suite_isometry,
    "kernel": suite_kernel,
    "reflection": suite_reflection,
    "strata": suite_strata,
    "scale": suite_scale,
    "density": suite_density,
    "coverage": suite_coverage,
    "equivariance": suite_equivariance,
    "decompose": suite_decompose,
    "isolation": suite_isolation,
}


def run_suite(name: str, seed: int = 0, budget: int = 0) -> dict:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    return fn(seed, budget)
