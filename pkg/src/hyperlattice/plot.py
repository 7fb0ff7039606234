"""SVG rendering of a curve, its asymptotes and its integral points.

Each branch is sampled at 512 uniform abscissae, staying 1e-3 viewport widths
away from the pole.  Coordinates are written with three decimals so the output
is byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union
from xml.sax.saxutils import escape

import numpy as np

from .arith import isqrt
from .enumeration import degenerate_family, enumerate_points, fingerprint
from .model import CurveParams, DomainError, IntegralPoint, ParametricLine, PointSet

SAMPLES_PER_BRANCH = 512
POLE_GAP = 1e-3
WIDTH = HEIGHT = 600
MARKER_RADIUS = 3.5


@dataclass(frozen=True)
class Viewport:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self) -> None:
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise DomainError(f"empty viewport {self}")

    def contains(self, x, y) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin


def default_viewport(curve: CurveParams) -> Viewport:
    """Square window centred on ``(-a, b - 2a)``, half-width ``max(4, 2 isqrt|D| + 2)``."""
    cx, cy = -curve.a, curve.b - 2 * curve.a
    half = max(4, 2 * isqrt(fingerprint(curve).magnitude) + 2)
    return Viewport(cx - half, cx + half, cy - half, cy + half)


def points_in_viewport(
    shape: Union[PointSet, ParametricLine], viewport: Viewport
) -> List[IntegralPoint]:
    if isinstance(shape, ParametricLine):
        lo, hi = math.ceil(viewport.xmin), math.floor(viewport.xmax)
        pts = (shape.point(t) for t in range(lo, hi + 1) if t != shape.excluded_x)
        return [p for p in pts if viewport.contains(*p)]
    return [p for p in shape if viewport.contains(*p)]


class _Canvas:
    def __init__(self, vp: Viewport):
        self.vp = vp

    def px(self, x) -> float:
        return (x - self.vp.xmin) / self.vp.width * WIDTH

    def py(self, y) -> float:
        return (self.vp.ymax - y) / self.vp.height * HEIGHT

    def xy(self, x, y) -> str:
        return f"{self.px(x):.3f},{self.py(y):.3f}"


def _polyline(canvas: _Canvas, xs: np.ndarray, ys: np.ndarray) -> str:
    """Path data; pen lifts wherever the curve is far outside the viewport."""
    vp = canvas.vp
    keep = (ys >= vp.ymin - vp.height) & (ys <= vp.ymax + vp.height)
    parts: List[str] = []
    pen_down = False
    for x, y, ok in zip(xs.tolist(), ys.tolist(), keep.tolist()):
        if not ok:
            pen_down = False
            continue
        parts.append(("L" if pen_down else "M") + canvas.xy(x, y))
        pen_down = True
    return " ".join(parts)


def _branches(curve: CurveParams, vp: Viewport) -> List[Tuple[np.ndarray, np.ndarray]]:
    pole = -curve.a
    gap = POLE_GAP * vp.width
    spans = [(vp.xmin, min(vp.xmax, pole - gap)), (max(vp.xmin, pole + gap), vp.xmax)]
    out = []
    for lo, hi in spans:
        if lo >= hi:
            continue
        xs = np.linspace(lo, hi, SAMPLES_PER_BRANCH)
        ys = (xs * xs + curve.b * xs + curve.c) / (xs + curve.a)
        out.append((xs, ys))
    return out


def _line(canvas: _Canvas, x0, y0, x1, y1, cls: str, dashed: bool) -> str:
    dash = ' stroke-dasharray="6,4"' if dashed else ""
    return (
        f'<line class="{cls}" x1="{canvas.px(x0):.3f}" y1="{canvas.py(y0):.3f}" '
        f'x2="{canvas.px(x1):.3f}" y2="{canvas.py(y1):.3f}" stroke="#888" '
        f'stroke-width="1"{dash}/>'
    )


def _circle(canvas: _Canvas, p: Sequence[int], cls: str, fill: str) -> str:
    return (
        f'<circle class="{cls}" cx="{canvas.px(p[0]):.3f}" cy="{canvas.py(p[1]):.3f}" '
        f'r="{MARKER_RADIUS}" fill="{fill}" stroke="#c00" stroke-width="1.5"/>'
    )


def render_svg(
    curve: CurveParams,
    shape: Union[PointSet, ParametricLine],
    viewport: Optional[Viewport] = None,
) -> str:
    """SVG document for ``curve`` with one marker per in-viewport integral point."""
    vp = viewport or default_viewport(curve)
    canvas = _Canvas(vp)
    D = fingerprint(curve).value
    body: List[str] = [
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        '<g clip-path="url(#view)">',
    ]

    if isinstance(shape, ParametricLine):
        s = shape.intercept_shift
        body.append(
            f'<path class="line" d="M{canvas.xy(vp.xmin, vp.xmin + s)} '
            f'L{canvas.xy(vp.xmax, vp.xmax + s)}" fill="none" stroke="#036" stroke-width="2"/>'
        )
    else:
        for xs, ys in _branches(curve, vp):
            body.append(
                f'<path class="branch" d="{_polyline(canvas, xs, ys)}" '
                f'fill="none" stroke="#036" stroke-width="2"/>'
            )
        if D != 0:
            pole = -curve.a
            if vp.xmin <= pole <= vp.xmax:
                body.append(_line(canvas, pole, vp.ymin, pole, vp.ymax, "asymptote vertical", True))
            s = curve.b - curve.a
            body.append(
                _line(canvas, vp.xmin, vp.xmin + s, vp.xmax, vp.xmax + s, "asymptote oblique", True)
            )

    for p in points_in_viewport(shape, vp):
        body.append(_circle(canvas, p, "point", "#c00"))
    if isinstance(shape, ParametricLine) and vp.contains(*shape.hole):
        body.append(_circle(canvas, shape.hole, "hole", "white"))
    body.append("</g>")

    title = escape(str(curve))
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">\n'
        f"<title>{title}</title>\n"
        f'<defs><clipPath id="view"><rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}"/>'
        "</clipPath></defs>\n"
    )
    return head + "\n".join(body) + "\n</svg>\n"


def plot_curve(curve: CurveParams, viewport: Optional[Viewport] = None) -> str:
    """Pick the right point description for ``curve`` and render it."""
    if fingerprint(curve).value == 0:
        return render_svg(curve, degenerate_family(curve), viewport)
    return render_svg(curve, enumerate_points(curve), viewport)
