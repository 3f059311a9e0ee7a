# tests/test_schemas.py
"""
Tests for polynomial text and curve spec parsing
"""
import json

import pytest

from trigonal.core.errors import ParseError, SpecValidationError
from trigonal.schemas.curves import parse_spec
from trigonal.services.polytext import parse_poly, parse_table


def test_parse_poly_with_implicit_products():
    """x^4 - 0.8x^3 - 6x^2 + 13"""
    p = parse_poly("x^4 - 0.8x^3 - 6x^2 + 13")
    assert p.degree == 4
    assert p.coeffs == pytest.approx((13, 0, -6, -0.8, 1))


def test_parse_poly_operators_and_imaginary_unit():
    """2*x**2 + 3i x - i: explicit '*', '**' and i"""
    p = parse_poly("2*x**2 + 3i x - i")
    assert p.coeffs == pytest.approx((-1j, 3j, 2))


def test_parse_poly_repeated_terms_add_up():
    assert parse_poly("x + x - 1").coeffs == pytest.approx((-1, 2))


def test_parse_table_with_parameter():
    """x^2 + a: the parameter keeps its own power"""
    assert parse_table("x^2 + a", "a") == {(2, 0): 1, (0, 1): 1}
    assert parse_table("-2a^2 x", "a") == {(1, 2): -2}


def test_parse_poly_grouped_factors():
    """(x + 1)^2 (x - 2) = (x^2 + 2x + 1)(x - 2) = x^3 - 3x - 2"""
    assert parse_poly("(x + 1)^2 (x - 2)").coeffs == pytest.approx((-2, -3, 0, 1))
    # -(x - 1) * 2x = -2x^2 + 2x
    assert parse_poly("-(x - 1)*2x").coeffs == pytest.approx((0, 2, -2))
    assert parse_poly("x(x - 1) + 1").coeffs == pytest.approx((1, -1, 1))


def test_parse_table_grouped_parameter():
    """x^2 + (a - 1)x keeps the parameter power per term"""
    assert parse_table("x^2 + (a - 1)x", "a") == {(2, 0): 1, (1, 1): 1, (1, 0): -1}


def test_unbalanced_parentheses_are_rejected():
    for text in ("(x + 1", "x + 1)", "()", "(x + 1))^2"):
        with pytest.raises(ParseError):
            parse_poly(text)


def test_parse_errors_carry_the_path():
    with pytest.raises(ParseError) as exc:
        parse_poly("x^2 + z", "y2")
    assert exc.value.path == "y2"
    with pytest.raises(ParseError):
        parse_poly("x^-1")
    with pytest.raises(ParseError):
        parse_poly("  ")
    with pytest.raises(ParseError):
        parse_poly("x + $")


def test_spec_from_strings():
    spec = parse_spec(json.dumps({"y1": "x", "y2": "-x", "y3": "1"}))
    c = spec.to_curve()
    assert c.n == 1
    assert c.P(2) == pytest.approx(1)


def test_spec_from_coefficient_pairs():
    """[[re, im], ...] in ascending powers"""
    spec = parse_spec(json.dumps({"y1": [[0, 0], [1, 0]], "y2": [[0, 0], [-1, 0]], "y3": [[1, 0]]}))
    c = spec.to_curve()
    assert c.y1(3) == pytest.approx(3)
    assert c.y2(3) == pytest.approx(-3)


def test_missing_component_reports_its_path():
    with pytest.raises(ParseError) as exc:
        parse_spec(json.dumps({"y1": "x", "y2": "-x"}))
    assert exc.value.path == "y3"
    assert exc.value.exit_status == 2


def test_invalid_json_reports_the_line():
    with pytest.raises(ParseError) as exc:
        parse_spec('{\n"y1": "x",\n"y2": }')
    assert exc.value.path == "line 3"


def test_bad_polynomial_inside_spec():
    with pytest.raises(ParseError):
        parse_spec(json.dumps({"y1": "x", "y2": "-x", "y3": "q"}))


def test_curve_errors_are_wrapped():
    spec = parse_spec(json.dumps({"y1": "x", "y2": "-x", "y3": "0"}))
    with pytest.raises(SpecValidationError) as exc:
        spec.to_curve()
    assert exc.value.code == "validation_error"
    assert exc.value.detail["cause"] == "triple_intersection"


def test_family_with_range_grid():
    doc = {
        "y1": "x^2 + a",
        "y2": "2x + 1",
        "y3": "-x + 1",
        "family": {"param": "a", "grid": {"range": [-1, 1], "count": 5}},
    }
    f = parse_spec(json.dumps(doc)).to_family()
    assert f.grid.points() == [-1, -0.5, 0, 0.5, 1]
    assert f.is_real
    y1, _, _ = f.member(3 + 0j)
    assert y1(0) == pytest.approx(3)


def test_family_path_overrides_grid():
    doc = {
        "y1": "x^2 + a",
        "y2": "2x",
        "y3": "1",
        "family": {"grid": {"lo": [-1, -1], "hi": [1, 1], "count": 3, "im_count": 3}, "path": {"range": [0, 1], "count": 2}},
    }
    f = parse_spec(json.dumps(doc)).to_family()
    assert len(f.grid.points()) == 9
    assert f.samples() == [0, 1]


def test_box_grid_sweeps_along_its_diagonal():
    doc = {"y1": "x + a", "y2": "-x", "y3": "1", "family": {"grid": {"lo": [0, 0], "hi": [1, 1], "count": 3, "im_count": 2}}}
    f = parse_spec(json.dumps(doc)).to_family()
    assert f.samples() == [0, 0.5 + 0.5j, 1 + 1j]


def test_family_param_must_not_shadow_x():
    doc = {"y1": "x", "y2": "-x", "y3": "1", "family": {"param": "x", "grid": {"range": [0, 1]}}}
    with pytest.raises(ParseError) as exc:
        parse_spec(json.dumps(doc))
    assert exc.value.path == "family.param"


def test_spec_without_family_cannot_sweep():
    spec = parse_spec(json.dumps({"y1": "x", "y2": "-x", "y3": "1"}))
    with pytest.raises(ParseError):
        spec.to_family()
