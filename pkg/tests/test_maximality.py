# tests/test_maximality.py
"""
Tests for the maximality test, the real preimage graph and the
degeneration surgeries
"""
import pytest

from trigonal.core.errors import NotMergeable
from trigonal.models.dessin import VertexKind
from trigonal.services.analysis.maximality import (
    connect_components,
    is_maximal,
    maximal_degeneration,
    merge_all_crosses,
    merge_crosses,
    mergeable_region,
    real_preimage,
)
from trigonal.services.dessin_service import build_dessin, combinatorial_sizes

RESOLUTION = 100


def test_linear_dessin_is_maximal(linear_dessin):
    result = is_maximal(linear_dessin)
    assert result
    assert result.reasons == []


def test_reasons_for_non_maximal(annulus_dessin):
    """Two components, and the annulus holds the crosses at 0 and infinity"""
    result = is_maximal(annulus_dessin)
    assert not result
    assert "disconnected (2 components)" in result.reasons
    assert any(r.endswith("has 2 crosses") for r in result.reasons)


def test_real_preimage_of_linear_curve(linear_curve, linear_dessin):
    """n = 1: every one of the twelve extra arcs lifts to a single strand"""
    g = real_preimage(linear_curve, dessin=linear_dessin)
    assert len(g.restriction()) == len(linear_dessin.edges) == 6
    assert len(g.extension) == 12
    graph = g.graph()
    # each pole meets two arcs from whites and two from blacks
    for cross in linear_dessin.crosses:
        assert graph.degree(cross.id) == 4
    # extension strands never lie on the dessin
    assert all(e.band in ("above", "below") for e in g.extension)
    assert set(g.edge_region) == {e.id for e in g.extension}


def test_real_preimage_adds_off_dessin_critical_points(annulus_curve, annulus_dessin):
    """Critical values 0.5 +- i have j < 0: two vertices of the preimage only"""
    g = real_preimage(annulus_curve, dessin=annulus_dessin)
    extra = [v for v in g.vertices if v.kind == VertexKind.MONOCHROME and not v.in_dessin]
    assert len(extra) == 2
    assert sorted(round(v.x.imag, 6) for v in extra) == [-1.0, 1.0]


def test_merge_requires_two_crosses(linear_dessin):
    with pytest.raises(NotMergeable):
        merge_crosses(linear_dessin, 0)


def test_annulus_degenerates_to_maximal(annulus_curve):
    """
    Merge the two crosses of the annulus through a critical point of the real
    preimage, then join the two components across it
    """
    d = build_dessin(annulus_curve, RESOLUTION)
    g = real_preimage(annulus_curve, dessin=d)
    rid = next(r.id for r in d.regions if r.cross_count == 2)
    assert mergeable_region(d, g, rid)

    merged = merge_crosses(d, rid, g)
    region = merged.regions[rid]
    assert region.cross_count == 1
    assert merged.vertex(region.crosses_inside[0]).multiplicity == 2
    assert len(merged.crosses) == 5
    assert combinatorial_sizes(merged) == [4, 2, 2, 2, 2]

    joined = connect_components(merged)
    assert joined.component_count == 1
    assert combinatorial_sizes(joined) == [4, 2, 2, 2, 2]
    # one white now carries both components' corners
    whites = joined.of_kind(VertexKind.WHITE)
    assert len(whites) == 5
    assert max(w.multiplicity for w in whites) == 2
    assert is_maximal(joined)


def test_paired_dessin_merges_both_regions(paired_curve):
    """
    Each size-4 region holds two crosses joined through a critical point with
    j > 1 (lambda = 3/2 and 7/2); merging both gives a maximal dessin
    """
    d = build_dessin(paired_curve, RESOLUTION)
    g = real_preimage(paired_curve, dessin=d)
    for region in d.regions:
        if region.cross_count == 2:
            assert mergeable_region(d, g, region.id)
    merged = merge_all_crosses(d, g)
    assert all(r.cross_count == 1 for r in merged.regions)
    assert combinatorial_sizes(merged) == [4, 4, 2, 2]
    assert is_maximal(merged)


def test_maximal_degeneration_leaves_maximal_dessin_alone(linear_dessin):
    result = maximal_degeneration(linear_dessin)
    assert combinatorial_sizes(result) == [2, 2, 2]
    assert len(result.crosses) == 3
    assert is_maximal(result)


def test_region_without_a_real_connection_is_not_mergeable(curve_from):
    """
    (x^2 - 9/4, x, 0): lambda = x - 9/(4x) has critical points x = +-3i/2 with
    values +-3i in RG, where j is not real. The annulus over RG holds the
    crosses x = 0 and x = infinity, and the real preimage reaches them only
    through its boundary
    """
    c = curve_from("x^2 - 2.25", "x", "0")
    d = build_dessin(c, RESOLUTION)
    assert combinatorial_sizes(d) == [4, 2, 2, 2, 2]
    rid = next(r.id for r in d.regions if r.cross_count == 2)
    assert d.regions[rid].color_pair == "RG"

    g = real_preimage(c, dessin=d)
    assert not mergeable_region(d, g, rid)
    with pytest.raises(NotMergeable):
        merge_crosses(d, rid, g)
