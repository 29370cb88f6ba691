"""Command-line front end: JSON on stdout, diagnostics on stderr, exit 0/1."""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import kernels
from .augmented import (
    ExtendedFNChart,
    Horoball,
    Interior,
    Noded,
    StratumIndex,
    chart_equal,
    closure_contains,
    dense_direction,
    horoball_contains,
    induced_pants_automorphism,
    isometry_preserves_strata,
    stratum_of,
)
from .farey_geometry import Viewport, cutting_sequence, locate_triangle, render_svg, tessellation_edges
from .hyperbolic import (
    UHPoint,
    apply_isometry,
    direction_at,
    equilateral_triangle,
    geodesic_through,
    point_at_parameter,
)
from .modular import (
    acts_trivially_on_slopes,
    act_on_slope,
    decompose,
    edge_normalizer,
    parse_matrix,
    word_to_matrix,
)
from .oracles import slopes_in_box
from .slope import (
    FareyEdge,
    farey_distance,
    farey_geodesic,
    is_adjacent,
    mediant,
    neighbors_bounded,
    parse_slope,
)
from .suites import SUITES, run_suite
from .surface import (
    PantsDecomposition,
    SurfaceModel,
    intersection_number,
    is_elementary_move,
    model_distance,
    model_metric_scale,
    pants_distance,
)


@dataclass
class CommandResult:
    status: str
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "ok" else 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" and "-1+2i" through as positionals
        self._negative_number_matcher = re.compile(r"^-[\d.i]")

    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage().strip()}")


# ---- argument types -------------------------------------------------------

def _arg(kind: str, parse: Callable[[str], Any]):
    def convert(text):
        try:
            return parse(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"{kind} {text!r}: {exc}") from None
    convert.__name__ = kind
    return convert


def parse_complex(text: str) -> UHPoint:
    """Parse ``a+bi`` (parts may be integers, decimals or fractions) as a half-plane point."""
    s = text.strip().replace(" ", "")
    if not s.endswith("i"):
        raise ValueError("expected a+bi")
    body = s[:-1]
    split = None
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "eE":
            split = k
            break
    real, imag = ("0", body) if split is None else (body[:split], body[split:])
    if imag in ("", "+"):
        imag = "1"
    elif imag == "-":
        imag = "-1"
    return UHPoint(Fraction(real), Fraction(imag))


def parse_boundary_or_point(text: str):
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return parse_slope("1/0")
    if text.strip().endswith("i"):
        return parse_complex(text)
    return parse_slope(text)


def parse_completed(text: str):
    x = parse_boundary_or_point(text)
    return Interior(x) if isinstance(x, UHPoint) else Noded(x)


def parse_stratum(text: str) -> StratumIndex:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("expected a JSON list of slopes")
    return StratumIndex(frozenset(parse_slope(s) for s in data))


def parse_chart(text: str) -> ExtendedFNChart:
    try:
        return ExtendedFNChart.from_json(json.loads(text))
    except (KeyError, TypeError):
        raise ValueError('expected [{"curve": "p/q", "length": l, "twist": t}, ...]') from None


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise ValueError("must be a positive integer")
    return v


def _nonneg_int(text):
    v = int(text)
    if v < 0:
        raise ValueError("must be nonnegative")
    return v


def _positive_float(text):
    v = float(text)
    if not v > 0:
        raise ValueError("must be positive")
    return v


SLOPE = _arg("slope", parse_slope)
POINT = _arg("point", parse_complex)
MATRIX = _arg("matrix", parse_matrix)
ANY_POINT = _arg("point or slope", parse_boundary_or_point)
COMPLETED = _arg("completed point", parse_completed)
STRATUM = _arg("stratum", parse_stratum)
CHART = _arg("chart", parse_chart)
MODEL = _arg("model", SurfaceModel.parse)
POS_INT = _arg("positive integer", _positive_int)
NONNEG_INT = _arg("nonnegative integer", _nonneg_int)
POS_FLOAT = _arg("positive number", _positive_float)
FLOAT = _arg("number", float)


def _slopes(xs):
    return [str(s) for s in xs]


# ---- handlers -------------------------------------------------------------

def cmd_farey_adjacent(a):
    return {"adjacent": is_adjacent(a.a, a.b)}


def cmd_farey_distance(a):
    path = farey_geodesic(a.a, a.b)
    return {"distance": len(path) - 1, "path": _slopes(path)}


def cmd_farey_geodesic(a):
    return {"path": _slopes(farey_geodesic(a.a, a.b))}


def cmd_mediant(a):
    return {"mediant": str(mediant(a.a, a.b))}


def cmd_neighbors(a):
    return {"neighbors": _slopes(neighbors_bounded(a.a, a.bound))}


def cmd_cutting_sequence(a):
    return {"triangles": [t.to_json() for t in cutting_sequence(a.a, a.b)]}


def cmd_locate(a):
    return {"triangle": locate_triangle(a.z).to_json()}


def cmd_moebius_apply(a):
    return apply_isometry(a.matrix, a.z).to_json()


def cmd_hyp_distance(a):
    return {"distance": model_distance(a.model, a.z, a.w), "model": a.model.value}


def cmd_geodesic(a):
    return geodesic_through(a.a, a.b).to_json()


def cmd_point_at(a):
    return point_at_parameter(geodesic_through(a.a, a.b), a.t).to_json()


def cmd_direction(a):
    return {"angle": direction_at(a.base, a.target)}


def cmd_equilateral(a):
    return {"vertices": [p.to_json() for p in equilateral_triangle(a.side)]}


def cmd_act_slope(a):
    return {"image": str(act_on_slope(a.matrix, a.s))}


def cmd_trivial(a):
    return {"trivial": acts_trivially_on_slopes(a.matrix)}


def cmd_decompose(a):
    return {"word": decompose(a.matrix)}


def cmd_compose(a):
    return {"matrix": word_to_matrix(a.word).to_list()}


def cmd_edge_normalizer(a):
    m = edge_normalizer(FareyEdge.of(a.a, a.b))
    return {"matrix": m.to_list()}


def _pants(a):
    return PantsDecomposition(a.model, a.a), PantsDecomposition(a.model, a.b)


def cmd_elementary_move(a):
    P, P2 = _pants(a)
    return {"elementary_move": is_elementary_move(a.model, P, P2), "model": a.model.value}


def cmd_pants_distance(a):
    P, P2 = _pants(a)
    return {"distance": pants_distance(a.model, P, P2), "model": a.model.value}


def cmd_intersection(a):
    return {"intersection": intersection_number(a.model, a.a, a.b), "model": a.model.value}


def cmd_scale(a):
    return {"scale": model_metric_scale(a.model), "model": a.model.value}


def cmd_chart_equal(a):
    return {"equal": chart_equal(a.c1, a.c2)}


def cmd_stratum(a):
    st = stratum_of(a.x)
    return {"stratum": st.to_json(), "k": st.k}


def cmd_closure_contains(a):
    return {"contains": closure_contains(a.sigma, a.tau)}


def cmd_horoball_contains(a):
    return {"contains": horoball_contains(Horoball(a.base, a.level), a.z)}


def cmd_strata_image(a):
    y = isometry_preserves_strata(a.matrix, a.x)
    if isinstance(y, Noded):
        return {"noded": str(y.curve), "k": 1}
    return {"interior": y.point.to_json(), "k": 0}


def cmd_pants_automorphism(a):
    auto = induced_pants_automorphism(a.matrix)
    return auto.certify(slopes_in_box(a.bound))


def cmd_dense_direction(a):
    s = dense_direction(a.base, a.phi, a.eps)
    return {"slope": str(s), "angle": direction_at(a.base, s)}


def cmd_verify(a):
    return run_suite(a.suite, a.seed, a.budget)


def cmd_render(a):
    view = Viewport(a.xmin, a.xmax, a.ymax)
    overlays = [geodesic_through(p, q) for p, q in a.overlay]
    svg = render_svg(view, a.depth, overlays)
    out = {"edges": len(tessellation_edges(a.depth, a.xmin, a.xmax)), "overlays": len(overlays)}
    if a.out:
        Path(a.out).write_text(svg)
        out["out"] = a.out
    else:
        out["svg"] = svg
    return out


def _overlay(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected A,B")
    return parse_boundary_or_point(parts[0]), parse_boundary_or_point(parts[1])


OVERLAY = _arg("overlay", _overlay)


# name -> (handler, positional specs, option adders, library operations reached)
def _two_slopes(p):
    p.add_argument("a", type=SLOPE)
    p.add_argument("b", type=SLOPE)


def _model(p):
    p.add_argument("--model", type=MODEL, default=SurfaceModel.ONE_HOLED_TORUS)


COMMANDS: dict[str, tuple[Callable, Callable, str, tuple[str, ...]]] = {}


def _register(name, handler, build, help_, ops):
    COMMANDS[name] = (handler, build, help_, ops)


_register("farey-adjacent", cmd_farey_adjacent, _two_slopes, "Farey adjacency |ps-qr| = 1",
          ("is_adjacent",))
_register("farey-distance", cmd_farey_distance, _two_slopes, "Farey distance with a witness path",
          ("farey_distance", "farey_geodesic"))
_register("farey-geodesic", cmd_farey_geodesic, _two_slopes, "a shortest Farey path",
          ("farey_geodesic",))
_register("mediant", cmd_mediant, _two_slopes, "mediant of adjacent slopes", ("mediant", "make_slope"))
_register("neighbors", cmd_neighbors,
          lambda p: (p.add_argument("a", type=SLOPE), p.add_argument("--bound", type=POS_INT, default=5)),
          "Farey neighbours inside a coordinate box", ("neighbors_bounded",))
_register("cutting-sequence", cmd_cutting_sequence, _two_slopes,
          "Farey triangles crossed by the geodesic a->b", ("cutting_sequence",))
_register("locate", cmd_locate, lambda p: p.add_argument("z", type=POINT),
          "Farey triangle containing a point", ("locate_triangle",))
_register("moebius-apply", cmd_moebius_apply,
          lambda p: (p.add_argument("matrix", type=MATRIX), p.add_argument("z", type=POINT)),
          "apply a GL(2,Z) isometry to a point", ("apply_isometry",))
_register("hyp-distance", cmd_hyp_distance,
          lambda p: (p.add_argument("z", type=POINT), p.add_argument("w", type=POINT), _model(p)),
          "model distance between two points", ("hyp_distance", "model_distance"))
_register("geodesic", cmd_geodesic,
          lambda p: (p.add_argument("a", type=ANY_POINT), p.add_argument("b", type=ANY_POINT)),
          "geodesic through two points or boundary slopes", ("geodesic_through",))
_register("point-at", cmd_point_at,
          lambda p: (p.add_argument("a", type=ANY_POINT), p.add_argument("b", type=ANY_POINT),
                     p.add_argument("t", type=FLOAT)),
          "unit-speed point on the geodesic through a and b", ("point_at_parameter",))
_register("direction", cmd_direction,
          lambda p: (p.add_argument("base", type=POINT), p.add_argument("target", type=SLOPE)),
          "visual angle from a point toward a boundary slope", ("direction_at",))
_register("equilateral", cmd_equilateral, lambda p: p.add_argument("side", type=POS_FLOAT),
          "equilateral triangle of a given side", ("equilateral_triangle",))
_register("act-slope", cmd_act_slope,
          lambda p: (p.add_argument("matrix", type=MATRIX), p.add_argument("s", type=SLOPE)),
          "matrix action on a slope", ("act_on_slope",))
_register("trivial", cmd_trivial, lambda p: p.add_argument("matrix", type=MATRIX),
          "does the matrix act trivially on slopes", ("acts_trivially_on_slopes",))
_register("decompose", cmd_decompose, lambda p: p.add_argument("matrix", type=MATRIX),
          "word in T, t, S, R", ("decompose",))
_register("compose", cmd_compose, lambda p: p.add_argument("word"),
          "matrix of a word in T, t, S, R", ("word_to_matrix",))
_register("edge-normalizer", cmd_edge_normalizer, _two_slopes,
          "matrix sending a Farey edge to {1/0, 0/1}", ("edge_normalizer",))
_register("elementary-move", cmd_elementary_move, lambda p: (_two_slopes(p), _model(p)),
          "are two pants decompositions related by an elementary move", ("is_elementary_move",))
_register("pants-distance", cmd_pants_distance, lambda p: (_two_slopes(p), _model(p)),
          "pants graph distance", ("pants_distance",))
_register("intersection", cmd_intersection, lambda p: (_two_slopes(p), _model(p)),
          "geometric intersection number", ("intersection_number",))
_register("scale", cmd_scale, _model, "metric scale factor of a model", ("model_metric_scale",))
_register("chart-equal", cmd_chart_equal,
          lambda p: (p.add_argument("c1", type=CHART), p.add_argument("c2", type=CHART)),
          "equality of extended Fenchel-Nielsen charts", ("chart_equal",))
_register("stratum", cmd_stratum, lambda p: p.add_argument("x", type=COMPLETED),
          "stratum of a point (a+bi) or noded point (p/q)", ("stratum_of",))
_register("closure-contains", cmd_closure_contains,
          lambda p: (p.add_argument("sigma", type=STRATUM), p.add_argument("tau", type=STRATUM)),
          "does the closure of stratum tau contain stratum sigma", ("closure_contains",))
_register("horoball-contains", cmd_horoball_contains,
          lambda p: (p.add_argument("base", type=SLOPE), p.add_argument("level", type=POS_FLOAT),
                     p.add_argument("z", type=POINT)),
          "horoball membership", ("horoball_contains",))
_register("strata-image", cmd_strata_image,
          lambda p: (p.add_argument("matrix", type=MATRIX), p.add_argument("x", type=COMPLETED)),
          "image of a completed point under an isometry", ("isometry_preserves_strata",))
_register("pants-automorphism", cmd_pants_automorphism,
          lambda p: (p.add_argument("matrix", type=MATRIX), p.add_argument("--bound", type=POS_INT, default=10)),
          "certify the induced Farey graph automorphism on a box", ("induced_pants_automorphism",))
_register("dense-direction", cmd_dense_direction,
          lambda p: (p.add_argument("base", type=POINT), p.add_argument("phi", type=FLOAT),
                     p.add_argument("eps", type=POS_FLOAT)),
          "rational boundary point within eps of a visual angle", ("dense_direction",))
_register("verify", cmd_verify,
          lambda p: (p.add_argument("suite", choices=sorted(SUITES)),
                     p.add_argument("--seed", type=int, default=0),
                     p.add_argument("--budget", type=NONNEG_INT, default=0)),
          "run a property suite", ("run_suite",))
_register("render", cmd_render,
          lambda p: (p.add_argument("--depth", type=POS_INT, default=5),
                     p.add_argument("--xmin", type=FLOAT, default=-1.0),
                     p.add_argument("--xmax", type=FLOAT, default=2.0),
                     p.add_argument("--ymax", type=POS_FLOAT, default=1.5),
                     p.add_argument("--overlay", type=OVERLAY, action="append", default=[],
                                    help="geodesic endpoints A,B (slopes or a+bi); repeatable"),
                     p.add_argument("--out", help="SVG output path")),
          "SVG of the Farey tessellation", ("render_svg",))


def build_parser() -> _Parser:
    parser = _Parser(prog="pantsfarey", description=__doc__)
    parser.add_argument("--json", action="store_true", default=True, help="JSON output (default)")
    parser.add_argument("--backend", action="store_true", help="report the kernel backend in stderr")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name, (_, build, help_, _) in COMMANDS.items():
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--json", action="store_true", default=True, help=argparse.SUPPRESS)
        build(p)
    return parser


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult("error", None, str(exc).splitlines())
    if args.command is None:
        return CommandResult("error", None, ["no command given", parser.format_usage().strip()])
    handler = COMMANDS[args.command][0]
    diagnostics = [f"backend: {kernels.BACKEND}"] if args.backend else []
    try:
        payload = handler(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        return CommandResult("error", None, diagnostics + [f"{args.command}: {exc}"])
    return CommandResult("ok", payload, diagnostics)


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.payload is not None:
        json.dump(result.payload, sys.stdout)
        sys.stdout.write("\n")
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
