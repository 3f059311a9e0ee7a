# tests/test_curve.py
"""
Unit tests for curve validation and singular fibers
"""
import logging

import pytest

from trigonal.core.errors import DegenerateComponents, TripleIntersection, ZeroDegree
from trigonal.services.curve_service import affine_pullback, maximal_degree, singular_fibers


def test_linear_curve_degrees(linear_curve):
    """(x, -x, 1): P = x - 1, Q = -x - 1"""
    assert linear_curve.n == 1
    assert linear_curve.d == 1
    assert linear_curve.P(0) == pytest.approx(-1)
    assert linear_curve.Q(0) == pytest.approx(-1)
    assert maximal_degree(linear_curve) == 1


def test_identical_components_rejected(curve_from):
    """y1 = y2 makes the curve non-reduced"""
    with pytest.raises(DegenerateComponents):
        curve_from("x^2", "x^2", "1")


def test_constant_components_rejected(curve_from):
    """All constant sections have degree 0"""
    with pytest.raises(ZeroDegree):
        curve_from("1", "2", "3")


def test_triple_intersection_rejected(curve_from):
    """x, -x and 0 all pass through x = 0"""
    with pytest.raises(TripleIntersection) as exc:
        curve_from("x", "-x", "0")
    assert exc.value.exit_status == 2


def test_cancelling_leading_terms_warns(curve_from, caplog):
    """(x^2, x^2 + 1, x^2 + x): P = -x, Q = 1 - x, so d = 1 < n = 2"""
    with caplog.at_level(logging.WARNING):
        c = curve_from("x^2", "x^2 + 1", "x^2 + x")
    assert c.n == 2
    assert c.d == 1
    assert any("Leading terms cancel" in r.message for r in caplog.records)


def test_singular_fibers_of_linear_curve(linear_curve):
    """P - Q = 2x, Q = -x - 1, P = x - 1"""
    fibers = singular_fibers(linear_curve)
    assert fibers.s12.values[0] == pytest.approx(0, abs=1e-12)
    assert fibers.s23.values[0] == pytest.approx(-1)
    assert fibers.s13.values[0] == pytest.approx(1)
    assert fibers.infinity_flags == {"12": False, "23": False, "13": False}


def test_singular_fiber_at_infinity(paired_curve):
    """Q = -2x - 4 is linear while n = 2: one 23-fiber sits at infinity"""
    fibers = singular_fibers(paired_curve)
    assert fibers.s23.degree_deficit == 1
    assert fibers.s23.values[0] == pytest.approx(-2)
    assert fibers.infinity_flags["23"] is True
    # every pair meets n = 2 times on the sphere
    assert all(s.total == 2 for s in fibers.by_label().values())


def test_affine_pullback(linear_curve):
    """x -> 2x + 1 turns (x, -x, 1) into (2x + 1, -2x - 1, 1)"""
    pulled = affine_pullback(linear_curve, 2, 1)
    assert pulled.y1(0) == pytest.approx(1)
    assert pulled.y1(1) == pytest.approx(3)
    assert pulled.y2(1) == pytest.approx(-3)
    assert pulled.n == 1


def test_random_curve_is_valid(random_curve_factory):
    """Seeded random curves have the requested degree and are reproducible"""
    a = random_curve_factory(3, seed=11)
    b = random_curve_factory(3, seed=11)
    assert a.n == 3
    assert a.y1.coeffs == b.y1.coeffs
