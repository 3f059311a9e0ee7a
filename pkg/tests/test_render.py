# tests/test_render.py
"""
Tests for the SVG renderer
"""
import pytest

from trigonal.core.errors import ProjectionClash
from trigonal.models.analysis import LocusPoint
from trigonal.models.sphere import fibonacci_sphere
from trigonal.schemas.render import RenderStyle
from trigonal.schemas.reports import dessin_report
from trigonal.services.render import choose_center, render_dessin_svg, render_svg


def test_dessin_markers(linear_dessin):
    """(x, -x, 1): 2 blacks, 3 whites (red at infinity), 3 crosses, 6 edges"""
    svg = render_svg(linear_dessin)
    assert svg.startswith("<svg")
    assert svg.count('class="vertex-black"') == 2
    assert svg.count('class="vertex-white"') == 3
    assert svg.count('class="cross"') == 3
    assert svg.count('class="edge"') == 6
    assert 'class="vertex-monochrome"' not in svg


def test_rendering_is_deterministic(linear_dessin):
    report = dessin_report(linear_dessin)
    assert render_dessin_svg(report) == render_dessin_svg(report)
    # the report survives a JSON round trip with the same picture
    again = type(report).model_validate_json(report.model_dump_json())
    assert render_dessin_svg(again) == render_dessin_svg(report)


def test_suppress_bivalent_whites(linear_dessin):
    svg = render_svg(linear_dessin, RenderStyle(suppress_bivalent=True))
    assert 'class="vertex-white"' not in svg
    assert svg.count('class="vertex-black"') == 2


def test_canvas_size(linear_dessin):
    svg = render_svg(linear_dessin, RenderStyle(canvas=300))
    assert 'width="300" height="300"' in svg


def test_empty_locus_draws_axes_only():
    svg = render_svg([])
    assert svg.count('class="axis"') == 2
    assert 'class="locus' not in svg


def test_locus_points():
    cloud = [
        LocusPoint(a=-1 + 0j, flagged=True),
        LocusPoint(a=0j, flagged=False),
        LocusPoint(a=1 + 0j, flagged=True, degenerate=True),
    ]
    svg = render_svg(cloud)
    assert svg.count('class="locus"') == 1
    assert svg.count('class="locus degenerate"') == 1


def test_projection_center_avoids_vertices():
    """A vertex at the north pole pushes the center elsewhere"""
    points = fibonacci_sphere(20)
    center = choose_center(points, RenderStyle())
    chords = ((points - center) ** 2).sum(axis=1) ** 0.5
    assert chords.min() > 0.09


def test_dense_vertices_clash():
    """5000 evenly spread points leave no direction 0.1 rad clear"""
    with pytest.raises(ProjectionClash):
        choose_center(fibonacci_sphere(5000), RenderStyle())
