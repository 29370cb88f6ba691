"""Complexity-one surfaces: the one-holed torus and the four-holed sphere.

On both, essential simple closed curves are slopes and a pants decomposition
is a single curve, so the pants graph is the Farey graph. The two
Teichmueller spaces carry the same half-plane metric up to a factor of two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .hyperbolic import UHPoint, hyp_distance
from .slope import Slope, farey_distance

__all__ = [
    "SurfaceModel",
    "PantsDecomposition",
    "intersection_number",
    "is_elementary_move",
    "pants_distance",
    "model_metric_scale",
    "model_distance",
]


class SurfaceModel(enum.Enum):
    ONE_HOLED_TORUS = "s11"
    FOUR_HOLED_SPHERE = "s04"

    @classmethod
    def parse(cls, name: str) -> "SurfaceModel":
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown model {name!r}; expected s11 or s04") from None


@dataclass(frozen=True)
class PantsDecomposition:
    model: SurfaceModel
    curve: Slope


# minimal nonzero intersection of two curves on the model
_MOVE_INTERSECTION = {SurfaceModel.ONE_HOLED_TORUS: 1, SurfaceModel.FOUR_HOLED_SPHERE: 2}


def intersection_number(model: SurfaceModel, a: Slope, b: Slope) -> int:
    return _MOVE_INTERSECTION[model] * abs(a.p * b.q - a.q * b.p)


def _same_model(model, P, P2):
    if P.model is not model or P2.model is not model:
        raise ValueError(f"pants decompositions on {P.model.value} and {P2.model.value} "
                         f"compared in model {model.value}")


def is_elementary_move(model: SurfaceModel, P: PantsDecomposition, P2: PantsDecomposition) -> bool:
    _same_model(model, P, P2)
    return intersection_number(model, P.curve, P2.curve) == _MOVE_INTERSECTION[model]


def pants_distance(model: SurfaceModel, P: PantsDecomposition, P2: PantsDecomposition) -> int:
    _same_model(model, P, P2)
    return farey_distance(P.curve, P2.curve)


def model_metric_scale(model: SurfaceModel) -> int:
    # one-holed torus normalized to 1
    return _MOVE_INTERSECTION[model]


def model_distance(model: SurfaceModel, z: UHPoint, w: UHPoint) -> float:
    return model_metric_scale(model) * hyp_distance(z, w)
