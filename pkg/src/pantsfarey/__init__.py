"""Farey graph, pants graph and upper half-plane tools for the one-holed torus
and four-holed sphere."""

from .kernels import BACKEND
from .slope import INFINITY, FareyEdge, FareyTriangle, Slope, farey_distance, farey_geodesic, parse_slope
from .hyperbolic import UHPoint, apply_isometry, hyp_distance
from .modular import IntMatrix2

__version__ = "0.1.0"
