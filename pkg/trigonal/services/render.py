# trigonal/services/render.py
"""
Deterministic SVG figures: a dessin drawn through a stereographic chart
compressed into a disk (the projection center lands on the boundary
circle), and the scatter plot of a discriminant locus.
"""
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from trigonal.core.errors import ProjectionClash
from trigonal.models.analysis import LocusPoint
from trigonal.models.dessin import Dessin
from trigonal.models.sphere import NORTH, PlaneChart, best_center
from trigonal.schemas.render import RenderStyle
from trigonal.schemas.reports import DeformReport, DessinReport, LocusPointRead, dessin_report, locus_read

logger = logging.getLogger(__name__)

RETRY_CANDIDATES = (256, 1024)


def _fmt(value: float) -> str:
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


def _angle(chord: float) -> float:
    return 2.0 * math.asin(min(1.0, chord / 2.0))


def _clearance(center: np.ndarray, points: np.ndarray) -> float:
    if len(points) == 0:
        return math.pi
    chords = np.linalg.norm(points - center, axis=1)
    return _angle(float(chords.min()))


def choose_center(points: np.ndarray, style: RenderStyle) -> np.ndarray:
    """
    Projection center at least min_clearance radians from every vertex: the
    north pole when it qualifies, else the farthest candidate direction.
    Raises ProjectionClash.
    """
    points = np.asarray(points, dtype=float).reshape(-1, 3)
    if style.center is not None:
        center = np.asarray(style.center, dtype=float)
        center = center / np.linalg.norm(center)
        if _clearance(center, points) < style.min_clearance:
            raise ProjectionClash("requested projection center touches a vertex", {"center": list(style.center)})
        return center
    if _clearance(NORTH, points) >= style.min_clearance:
        return NORTH.copy()
    for candidates in RETRY_CANDIDATES:
        center, chord = best_center(points, candidates)
        if _angle(chord) >= style.min_clearance:
            logger.debug(f"Projection center moved off the north pole ({candidates} candidates)")
            return center
    raise ProjectionClash("no projection center clears every vertex", {"min_clearance": style.min_clearance})


class DiskChart:
    """Plane chart followed by the radial compression w -> w / (s + |w|)"""

    def __init__(self, center: np.ndarray, anchors: np.ndarray, style: RenderStyle):
        self.chart = PlaneChart(center)
        self.style = style
        w = np.abs(self.chart.project(anchors)) if len(anchors) else np.zeros(0)
        finite = w[np.isfinite(w)]
        median = float(np.median(finite)) if len(finite) else 1.0
        self.scale = median if median > 1e-9 else 1.0
        self.radius = style.canvas / 2.0 - style.margin
        self.mid = style.canvas / 2.0

    def __call__(self, vectors: np.ndarray) -> np.ndarray:
        w = self.chart.project(vectors)
        p = w / (self.scale + np.abs(w))
        return np.stack([self.mid + self.radius * p.real, self.mid - self.radius * p.imag], axis=1)


def _header(style: RenderStyle) -> List[str]:
    size = style.canvas
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]


def render_dessin_svg(report: DessinReport, style: Optional[RenderStyle] = None) -> str:
    style = style or RenderStyle()
    anchors = np.array([v.sphere for v in report.vertices], dtype=float).reshape(-1, 3)
    center = choose_center(anchors, style)
    disk = DiskChart(center, anchors, style)

    lines = _header(style)
    lines.append(
        f'<circle class="horizon" cx="{_fmt(disk.mid)}" cy="{_fmt(disk.mid)}" r="{_fmt(disk.radius)}" '
        f'fill="none" stroke="#b0bec5" stroke-dasharray="4 3"/>'
    )
    lines.append(f'<g class="edges" fill="none" stroke="{style.edge_color}" stroke-width="{_fmt(style.edge_width)}">')
    for edge in sorted(report.edges, key=lambda e: e.id):
        xy = disk(np.array(edge.strand, dtype=float))
        points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in xy)
        lines.append(f'<polyline class="edge" data-arc="{edge.arc}" points="{points}"/>')
    lines.append("</g>")

    lines.append('<g class="vertices">')
    r = style.vertex_radius
    for v in sorted(report.vertices, key=lambda v: v.id):
        x, y = disk(np.array([v.sphere], dtype=float))[0]
        cx, cy = _fmt(x), _fmt(y)
        if v.kind == "black":
            fill = style.black_colors.get(v.color or "", "black")
            lines.append(
                f'<circle class="vertex-black" data-color="{v.color}" cx="{cx}" cy="{cy}" r="{_fmt(r)}" '
                f'fill="{fill}" stroke="black"/>'
            )
        elif v.kind == "white":
            if style.suppress_bivalent and v.degree == 2:
                continue
            stroke = style.white_colors.get(v.color or "", "black")
            lines.append(
                f'<circle class="vertex-white" data-color="{v.color}" cx="{cx}" cy="{cy}" r="{_fmt(r)}" '
                f'fill="white" stroke="{stroke}" stroke-width="2"/>'
            )
        elif v.kind == "monochrome":
            lines.append(
                f'<rect class="vertex-monochrome" x="{_fmt(x - r * 0.8)}" y="{_fmt(y - r * 0.8)}" '
                f'width="{_fmt(r * 1.6)}" height="{_fmt(r * 1.6)}" fill="{style.monochrome_color}"/>'
            )
        else:
            s = style.cross_size
            lines.append(
                f'<path class="cross" data-pair="{v.color}" d="M{_fmt(x - s)} {_fmt(y - s)} L{_fmt(x + s)} {_fmt(y + s)} '
                f'M{_fmt(x - s)} {_fmt(y + s)} L{_fmt(x + s)} {_fmt(y - s)}" stroke="{style.cross_color}" '
                f'stroke-width="2"/>'
            )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _bounds(values: Sequence[complex]) -> Tuple[float, float, float, float]:
    if not values:
        return -1.0, 1.0, -1.0, 1.0
    re = [z.real for z in values]
    im = [z.imag for z in values]
    x0, x1, y0, y1 = min(re), max(re), min(im), max(im)
    if x1 - x0 < 1e-12:
        x0, x1 = x0 - 1.0, x1 + 1.0
    if y1 - y0 < 1e-12:
        y0, y1 = y0 - 1.0, y1 + 1.0
    return x0, x1, y0, y1


def render_locus_svg(points: Iterable[LocusPointRead], style: Optional[RenderStyle] = None) -> str:
    """Flagged parameter values in the complex parameter plane, with axes"""
    style = style or RenderStyle()
    points = list(points)
    values = [complex(*p.a) for p in points]
    x0, x1, y0, y1 = _bounds(values)
    span = style.canvas - 2 * style.margin

    def to_canvas(z: complex) -> Tuple[float, float]:
        return (
            style.margin + span * (z.real - x0) / (x1 - x0),
            style.canvas - style.margin - span * (z.imag - y0) / (y1 - y0),
        )

    # axes through the origin when it is in view, along the frame otherwise
    ax, ay = to_canvas(complex(min(max(0.0, x0), x1), min(max(0.0, y0), y1)))
    lines = _header(style)
    lines.append(
        f'<line class="axis" x1="{_fmt(style.margin)}" y1="{_fmt(ay)}" x2="{_fmt(style.canvas - style.margin)}" '
        f'y2="{_fmt(ay)}" stroke="black"/>'
    )
    lines.append(
        f'<line class="axis" x1="{_fmt(ax)}" y1="{_fmt(style.margin)}" x2="{_fmt(ax)}" '
        f'y2="{_fmt(style.canvas - style.margin)}" stroke="black"/>'
    )
    for p, z in zip(points, values):
        if not p.flagged:
            continue
        x, y = to_canvas(z)
        cls = "locus degenerate" if p.degenerate else "locus"
        lines.append(f'<circle class="{cls}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="1.5" fill="{style.cross_color}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(
    subject: Union[Dessin, DessinReport, DeformReport, Sequence[LocusPoint], Sequence[LocusPointRead]],
    style: Optional[RenderStyle] = None,
) -> str:
    if isinstance(subject, Dessin):
        return render_dessin_svg(dessin_report(subject), style)
    if isinstance(subject, DessinReport):
        return render_dessin_svg(subject, style)
    if isinstance(subject, DeformReport):
        return render_locus_svg(subject.locus, style)
    points = [locus_read(p) if isinstance(p, LocusPoint) else p for p in subject]
    return render_locus_svg(points, style)
