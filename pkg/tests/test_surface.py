import random

import pytest

from pantsfarey.hyperbolic import UHPoint, hyp_distance
from pantsfarey.modular import act_on_slope, random_matrix
from pantsfarey.oracles import slopes_in_box
from pantsfarey.slope import is_adjacent, parse_slope
from pantsfarey.surface import (
    PantsDecomposition,
    SurfaceModel,
    intersection_number,
    is_elementary_move,
    model_distance,
    model_metric_scale,
    pants_distance,
)

S11 = SurfaceModel.ONE_HOLED_TORUS
S04 = SurfaceModel.FOUR_HOLED_SPHERE


def P(model, text):
    return PantsDecomposition(model, parse_slope(text))


def test_intersection_examples():
    a, b = parse_slope("0/1"), parse_slope("1/1")
    assert intersection_number(S11, a, b) == 1
    assert intersection_number(S04, a, b) == 2
    for m in SurfaceModel:
        assert intersection_number(m, a, a) == 0


def test_elementary_move_examples():
    assert is_elementary_move(S11, P(S11, "0/1"), P(S11, "1/1"))
    assert not is_elementary_move(S04, P(S04, "0/1"), P(S04, "2/5"))
    for m in SurfaceModel:
        assert not is_elementary_move(m, P(m, "3/4"), P(m, "3/4"))


def test_mixed_models_rejected():
    with pytest.raises(ValueError):
        is_elementary_move(S11, P(S11, "0/1"), P(S04, "1/1"))
    with pytest.raises(ValueError):
        pants_distance(S04, P(S11, "0/1"), P(S11, "1/1"))


def test_moves_are_farey_edges():
    vs = slopes_in_box(50)[::7]
    for m in SurfaceModel:
        for i, a in enumerate(vs):
            for b in vs[i + 1:i + 60]:
                assert is_elementary_move(m, P(m, str(a)), P(m, str(b))) == is_adjacent(a, b)


def test_pants_distance():
    for m in SurfaceModel:
        assert pants_distance(m, P(m, "0/1"), P(m, "1/1")) == 1
        assert pants_distance(m, P(m, "2/9"), P(m, "2/9")) == 0
        assert pants_distance(m, P(m, "0/1"), P(m, "2/5")) == 2


def test_scale():
    assert model_metric_scale(S11) == 1
    assert model_metric_scale(S04) == 2
    assert model_metric_scale(S04) / model_metric_scale(S11) == 2
    assert SurfaceModel.parse("s04") is S04
    with pytest.raises(ValueError):
        SurfaceModel.parse("s22")


def test_scaled_distances():
    rng = random.Random(0)
    for _ in range(1000):
        z = UHPoint(rng.uniform(-2, 2), rng.uniform(0.1, 2))
        w = UHPoint(rng.uniform(-2, 2), rng.uniform(0.1, 2))
        assert model_distance(S04, z, w) == 2 * model_distance(S11, z, w)
        assert model_distance(S11, z, w) == hyp_distance(z, w)


def test_intersection_equivariance():
    rng = random.Random(1)
    for _ in range(1000):
        M = random_matrix(rng, 12)
        a = parse_slope(f"{rng.randint(-20, 20)}/{rng.randint(1, 20)}")
        b = parse_slope(f"{rng.randint(-20, 20)}/{rng.randint(1, 20)}")
        for m in SurfaceModel:
            assert intersection_number(m, act_on_slope(M, a), act_on_slope(M, b)) == intersection_number(m, a, b)
