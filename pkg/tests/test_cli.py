# tests/test_cli.py
"""
End-to-end tests of the command-line interface
"""
import cmath
import json
import math

import pytest

from trigonal.cli.main import main
from trigonal.core.config import settings


def run(capsys, argv):
    status = main(argv)
    out = capsys.readouterr().out
    return status, out


@pytest.fixture
def linear_spec(tmp_path):
    path = tmp_path / "linear.json"
    path.write_text(json.dumps({"y1": "x", "y2": "-x", "y3": "1"}), encoding="utf-8")
    return path


def test_enumerate_bound(capsys):
    """n = 3: C(5, 3) - 2 = 8 and the oracle agrees"""
    status, out = run(capsys, ["enumerate", "bound", "3"])
    payload = json.loads(out)
    assert status == 0
    assert payload["formula"] == 8
    assert payload["oracle"] == 8
    assert payload["agree"] is True


def test_enumerate_pretypes_four(capsys):
    status, out = run(capsys, ["enumerate", "pretypes", "4"])
    payload = json.loads(out)
    assert status == 0
    assert payload["formula"] == 27
    assert payload["agree"] is False
    assert len(payload["rows"]) == 23
    flagged = [r["type"] for r in payload["rows"] if r["realizability"] == "nonrealizable"]
    assert flagged == [[6, 4, 4, 4, 4, 2]]
    assert "triples" not in payload


def test_enumerate_pretypes_with_triples(capsys):
    status, out = run(capsys, ["enumerate", "pretypes", "2", "--triples"])
    payload = json.loads(out)
    assert len(payload["triples"]) == 4


def test_enumerate_simple_count(capsys):
    status, out = run(capsys, ["enumerate", "simple-count", "5"])
    payload = json.loads(out)
    assert status == 0
    assert payload["count"] == 31
    assert payload["bruteforce"] == 31
    assert payload["ratio"] == pytest.approx(31 / payload["asymptotic"])


def test_size_guard_exit_status(capsys):
    status, out = run(capsys, ["enumerate", "simple-count", "13"])
    assert status == 2
    assert json.loads(out)["error"]["code"] == "size_guard"


def test_invalid_argument_exit_status(capsys):
    status, out = run(capsys, ["enumerate", "bound", "0"])
    assert status == 2
    assert json.loads(out)["error"]["code"] == "invalid_argument"


def test_dessin_command(capsys, linear_spec):
    status, out = run(capsys, ["dessin", str(linear_spec), "--resolution", "48"])
    payload = json.loads(out)
    assert status == 0
    assert payload["type"] == [2, 2, 2]
    assert payload["edge_count"] == 6
    assert payload["maximal"] is True
    assert payload["simple"] is True
    assert payload["structural"]["passed"] is True
    # the red white sits at infinity
    assert sum(v["at_infinity"] for v in payload["vertices"]) == 1


def test_dessin_command_writes_report_and_svg(capsys, linear_spec, tmp_path):
    out_path = tmp_path / "report.json"
    status, _ = run(capsys, ["dessin", str(linear_spec), "--resolution", "48", "--out", str(out_path), "--svg"])
    assert status == 0
    payload = json.loads(out_path.read_text(encoding="utf-8"))
    svg = (tmp_path / "report.svg").read_text(encoding="utf-8")
    assert payload["svg"].endswith("report.svg")
    assert svg.count('class="cross"') == 3

    svg_out = tmp_path / "again.svg"
    status, _ = run(capsys, ["render", str(out_path), "--out", str(svg_out)])
    assert status == 0
    assert svg_out.read_text(encoding="utf-8") == svg


def test_dessin_rejects_invalid_curve(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"y1": "x", "y2": "-x", "y3": "0"}), encoding="utf-8")
    status, out = run(capsys, ["dessin", str(path)])
    error = json.loads(out)["error"]
    assert status == 2
    assert error["code"] == "validation_error"
    assert error["detail"]["cause"] == "triple_intersection"


def test_missing_spec_file(capsys, tmp_path):
    status, out = run(capsys, ["dessin", str(tmp_path / "nope.json")])
    assert status == 2
    assert json.loads(out)["error"]["code"] == "parse_error"


def test_deform_locus_only(capsys, tmp_path):
    path = tmp_path / "family.json"
    doc = {
        "y1": "x^2 + a",
        "y2": "2x + 1",
        "y3": "-x + 1",
        "family": {"param": "a", "grid": {"range": [-2, 2], "count": 5}},
    }
    path.write_text(json.dumps(doc), encoding="utf-8")
    status, out = run(capsys, ["deform", str(path), "--locus-only"])
    payload = json.loads(out)
    assert status == 0
    assert payload["snapshots"] == []
    assert len(payload["locus"]) == 5
    flagged = [p["a"][0] for p in payload["locus"] if p["flagged"]]
    # a = -1 puts a critical value on the dessin, a = 1 is degenerate
    assert -1 in flagged
    assert 1 in flagged
    assert 2 not in flagged


def test_render_rejects_unknown_document(capsys, tmp_path):
    path = tmp_path / "other.json"
    path.write_text(json.dumps({"hello": 1}), encoding="utf-8")
    status, out = run(capsys, ["render", str(path)])
    assert status == 2
    assert json.loads(out)["error"]["code"] == "parse_error"


def test_dessin_tolerance_option(capsys, tmp_path, monkeypatch):
    """
    (x^2 + w, 1, 0) with w = e^(2 pi i/3): the critical value w is a monochrome
    vertex at any tolerance; the option reaches the settings used by the run
    """
    monkeypatch.setattr(settings, "MONOCHROME_TOLERANCE", settings.MONOCHROME_TOLERANCE)
    w = cmath.exp(2j * math.pi / 3)
    path = tmp_path / "mono.json"
    path.write_text(json.dumps({"y1": [[w.real, w.imag], [0, 0], [1, 0]], "y2": [[1, 0]], "y3": [[0, 0]]}), encoding="utf-8")
    status, out = run(capsys, ["dessin", str(path), "--resolution", "64", "--tolerance", "1e-6"])
    payload = json.loads(out)
    assert status == 0
    assert settings.MONOCHROME_TOLERANCE == 1e-6
    assert payload["simple"] is False
    assert payload["type"] == [4, 2, 2, 2, 2]


def test_tolerance_must_be_positive(capsys, linear_spec, monkeypatch):
    monkeypatch.setattr(settings, "MONOCHROME_TOLERANCE", settings.MONOCHROME_TOLERANCE)
    for argv in (["dessin", str(linear_spec), "--tolerance", "0"], ["verify", "--n", "1", "--tolerance", "-1e-3"]):
        status, out = run(capsys, argv)
        assert status == 2
        assert json.loads(out)["error"]["code"] == "invalid_argument"


def test_verify_accepts_a_tolerance(capsys, monkeypatch):
    monkeypatch.setattr(settings, "MONOCHROME_TOLERANCE", settings.MONOCHROME_TOLERANCE)
    status, out = run(capsys, ["verify", "--n", "1", "--resolution", "48", "--tolerance", "1e-7"])
    payload = json.loads(out)
    assert status == 0
    assert settings.MONOCHROME_TOLERANCE == 1e-7
    assert payload["matched"] == payload["total"]
