# tests/test_jmap.py
"""
Unit tests for the cross-ratio map, the j-invariant and special points
"""
import cmath
import math

import pytest

from trigonal.models.poly import INFINITY, POLE
from trigonal.services.cross_ratio_graph import (
    ABOVE_EDGES,
    BELOW_EDGES,
    DESSIN_EDGES,
    OMEGA_MINUS,
    OMEGA_PLUS,
    j_of_lambda,
    lambda_orbit,
    locate_on_edges,
    triple_shape,
)
from trigonal.services.jmap import (
    critical_points,
    cross_ratio,
    j_eval,
    j_rational,
    lambda_critical_points,
    level_set,
    real_critical_points,
    special_points,
)


def test_j_at_vertices_and_poles():
    """j = 1 at -1, 1/2, 2; j = 0 at the cube roots of -1; poles at 0, 1, inf"""
    for lam in (-1, 0.5, 2):
        assert j_of_lambda(complex(lam)) == pytest.approx(1)
    assert abs(j_of_lambda(OMEGA_PLUS)) < 1e-12
    assert abs(j_of_lambda(OMEGA_MINUS)) < 1e-12
    assert j_of_lambda(0j) is POLE
    assert j_of_lambda(1 + 0j) is POLE
    assert j_of_lambda(INFINITY) is POLE


def test_j_is_constant_on_orbit():
    """The six cross ratios of one quadruple share a j-value"""
    lam = 0.3 + 0.7j
    values = [j_of_lambda(z) for z in lambda_orbit(lam)]
    for value in values:
        assert value == pytest.approx(values[0])


def test_arcs_split_by_band():
    """Six arcs over [0, 1], six above and six below"""
    assert len(DESSIN_EDGES) == len(ABOVE_EDGES) == len(BELOW_EDGES) == 6


def test_locate_on_edges_above():
    """lambda = 3/2 has j = 4(7/4)^3 / (27 * 9/4 * 1/4) = 343/243 > 1"""
    r = 343 / 243
    assert j_of_lambda(1.5 + 0j).real == pytest.approx(r)
    edge, t = locate_on_edges(1.5 + 0j, r)
    assert edge.band == "above"
    assert 0 < t < 1
    assert edge.lam(t) == pytest.approx(1.5 + 0j, abs=1e-6)


def test_triple_shape_collinear():
    """0, 1, 2: lambda = (0 - 2) / (1 - 2) = 2, so j = 1 and equal spacing"""
    shape = triple_shape(0j, 1 + 0j, 2 + 0j)
    assert shape["shape"] == "collinear"
    assert shape["ratio"] == pytest.approx(1)
    assert shape["j"] == pytest.approx(1)


def test_triple_shape_equilateral():
    """An equilateral triangle has j = 0 and apex angle pi/3"""
    pts = [cmath.exp(2j * math.pi * k / 3) for k in range(3)]
    shape = triple_shape(*pts)
    assert shape["shape"] == "isosceles"
    assert shape["apex_angle"] == pytest.approx(math.pi / 3)
    assert abs(shape["j"]) < 1e-9


def test_triple_shape_requires_distinct_points():
    with pytest.raises(ValueError):
        triple_shape(0j, 0j, 1 + 0j)


def test_cross_ratio_and_j_eval(linear_curve):
    """(x, -x, 1) at x = 0: P = Q = -1 so lambda = 1, a 12-cross"""
    lam = cross_ratio(linear_curve)
    assert lam(0j) == pytest.approx(1)
    assert j_eval(linear_curve, 0j) is POLE
    # x = 2: lambda = (2 - 1) / (-2 - 1) = -1/3
    assert lam(2 + 0j) == pytest.approx(-1 / 3)


def test_j_rational_degree(linear_curve):
    """Numerator 4(P^2 - PQ + Q^2)^3 has degree 6n"""
    f = j_rational(linear_curve)
    assert f.num.degree == 6
    x = 0.3 + 0.2j
    assert f(x) == pytest.approx(j_eval(linear_curve, x))


def test_special_point_counts(linear_curve):
    """n = 1: one point per black color, one per white color"""
    sp = special_points(linear_curve)
    assert sp.black_cyan.total == 1
    assert sp.black_yellow.total == 1
    assert sp.white_red.total == sp.white_blue.total == sp.white_green.total == 1
    assert sp.monochrome == []


def test_level_set_has_six_n_points(cubic_curve):
    """Any regular level of j has 6n preimages on the sphere"""
    assert level_set(cubic_curve, 0.5).total == 18


def test_lambda_critical_points_of_family_member(curve_from):
    """
    (x^2 + 2, 2x + 1, -x + 1): P = x^2 + x + 1, Q = 3x,
    critical points x = 1 (lambda = 1) and x = -1 (lambda = -1/3)
    """
    c = curve_from("x^2 + 2", "2x + 1", "-x + 1")
    points = sorted(lambda_critical_points(c), key=lambda p: p.x.real)
    assert [p.x for p in points] == [pytest.approx(-1), pytest.approx(1)]
    assert points[0].lam == pytest.approx(-1 / 3)
    # j(-1/3) = 4(13/9)^3 / (27 * 1/9 * 16/9) = 26364/11664
    assert points[0].jvalue.real == pytest.approx(26364 / 11664)
    assert points[1].jvalue is POLE
    assert all(p.ramification == 2 for p in points)


def test_real_critical_points_above_band(paired_curve):
    """
    P = x^2 - x - 5, Q = -2x - 4: P'Q - PQ' = -2(x + 1)(x + 3),
    lambda(-1) = 3/2 and lambda(-3) = 7/2, both with j > 1
    """
    points = sorted(real_critical_points(paired_curve), key=lambda p: p.x.real)
    assert [p.x for p in points] == [pytest.approx(-3), pytest.approx(-1)]
    assert points[0].lam == pytest.approx(3.5)
    assert points[1].lam == pytest.approx(1.5)
    assert all(p.jvalue > 1 for p in points)
    # off [0, 1], so not monochrome vertices of the dessin
    assert special_points(paired_curve).monochrome == []


def test_critical_points_list_vertices_once(linear_curve):
    """n = 1: finite blacks, whites and crosses, nothing repeated"""
    points = critical_points(linear_curve)
    kinds = [p.kind for p in points]
    assert kinds.count("black") == 2
    # P + Q = -2 is constant: the red white sits at infinity
    assert kinds.count("white") == 2
    assert kinds.count("cross") == 3
    assert len(points) == 7
