# tests/test_monodromy.py
"""
Tests for the branch data of the cross-ratio map: faces, the
Riemann-Hurwitz bound on types and the monodromy type
"""
import cmath
import math

import pytest

from trigonal.models.poly import INFINITY
from trigonal.services.monodromy import (
    FaceMonodromy,
    face_covers,
    face_of,
    feasible_types,
    from_chart,
    monodromy_type,
    to_chart,
)


def test_face_of_poles_and_interior_points():
    assert face_of(0j) == "RB"
    assert face_of(1 + 0j) == "BG"
    assert face_of(INFINITY) == "RG"
    assert face_of(0.1 + 0.1j) == "RB"
    assert face_of(1.5 + 0j) == "BG"
    assert face_of(-1.8628 + 0j) == "RG"


def test_face_of_points_on_the_graph():
    """Whites at -1, 1/2, 2 and the blacks e^(+-i pi/3) lie on the graph"""
    for lam in (-1 + 0j, 0.5 + 0j, 2 + 0j, cmath.exp(1j * math.pi / 3), cmath.exp(-1j * math.pi / 3)):
        assert face_of(lam) is None
    # on the unit circle left of Re = 1/2
    assert face_of(cmath.exp(2j)) is None


def test_charts_send_each_pole_to_zero():
    assert to_chart("RB", 0j) == 0
    assert to_chart("BG", 1 + 0j) == 0
    assert to_chart("RG", INFINITY) == 0
    assert from_chart("RG", to_chart("RG", 3 + 4j)) == pytest.approx(3 + 4j)


def test_covers_of_a_branched_face(curve_from):
    """
    (x^3 + x^2 + 1, -2x^2 - 2, -2): P = x^3 + x^2 + 3, Q = -2x^2. Over infinity
    sit the double root x = 0 and x = infinity; x^3 = 6 gives three simple
    critical values -1/2 - 9/(2x^2), all in RG
    """
    covers = {cover.face: cover for cover in face_covers(curve_from("x^3 + x^2 + 1", "-2x^2 - 2", "-2"))}
    assert covers["RG"].crosses == [2, 1]
    assert len(covers["RG"].branch) == 3
    assert covers["RB"].crosses == [1, 1, 1]
    assert covers["RB"].branch == []
    assert covers["BG"].branch == []


def test_feasible_type_forced_by_three_branch_values(curve_from):
    """
    RG: crosses [2, 1] with three simple values. One component has degree 3 and
    r = 1 + 3 = 4 <= 2*3 - 2; split, the degree-2 part would need r = 4 > 2.
    RB and BG lift to three bigons each: [6, 2, 2, 2, 2, 2, 2]
    """
    assert feasible_types(curve_from("x^3 + x^2 + 1", "-2x^2 - 2", "-2")) == [[6, 2, 2, 2, 2, 2, 2]]


def test_feasible_type_with_a_double_cross(curve_from):
    """
    (x^3 + x^2 + 1, -2x^2 + 1, -2): P - Q = x^2(x + 3), so BG holds the double
    cross at x = 0 and two simple values: r = 1 + 2 = 3 only fits degree 3.
    RG has one simple value (lambda ~ -2.586): [4, 2]. RB is unbranched
    """
    assert feasible_types(curve_from("x^3 + x^2 + 1", "-2x^2 + 1", "-2")) == [[6, 4, 2, 2, 2, 2]]


def test_feasible_type_of_a_listed_row(curve_from):
    """lambda(0) = 3/2 in BG gives [4, 2]; three values in RG force [6]"""
    assert feasible_types(curve_from("x^3 + x^2 + 1", "-2x^2", "-2")) == [[6, 4, 2, 2, 2, 2]]


def test_unbranched_curve_has_only_bigons(linear_curve):
    assert feasible_types(linear_curve) == [[2, 2, 2]]
    assert monodromy_type(linear_curve) == [2, 2, 2]


def test_monodromy_of_the_annulus(annulus_curve):
    """Both critical values 1/2 +- i lie in RG over the crosses x = 0 and x = infinity"""
    assert monodromy_type(annulus_curve) == [4, 2, 2, 2, 2]


def test_monodromy_of_the_paired_curve(paired_curve):
    """3/2 in BG and 7/2 in RG each join two bigons"""
    assert monodromy_type(paired_curve) == [4, 4, 2, 2]


def test_monodromy_matches_the_bound_when_forced(curve_from):
    for y in (("x^3 + x^2 + 1", "-2x^2 - 2", "-2"), ("x^3 + x^2 + 1", "-2x^2 + 1", "-2")):
        c = curve_from(*y)
        assert [monodromy_type(c)] == feasible_types(c)


def test_loops_stay_inside_the_face(paired_curve):
    """Every sample of every loop keeps a positive distance to the face boundary"""
    for cover in face_covers(paired_curve):
        monodromy = FaceMonodromy(paired_curve, cover)
        for index in [None] + list(range(len(cover.branch))):
            path = monodromy.loop(index)
            assert path[0] == pytest.approx(path[-1])
            assert all(face_of(from_chart(cover.face, mu)) == cover.face for mu in path)
