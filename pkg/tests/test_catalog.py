# tests/test_catalog.py
"""
Reproduction of the example curve catalog
"""
import pytest

from trigonal.services.catalog import CATALOG, entries, verify_catalog, verify_entry


def test_catalog_covers_every_degree():
    assert {e.n for e in CATALOG} == {1, 2, 3, 4}
    assert len(entries(1)) == 1
    assert len(entries(2)) == 3


def test_expected_sizes_sum_to_six_n():
    """Every type accounts for all 6n edges of a degree-n dessin"""
    for entry in CATALOG:
        assert sum(entry.expected) == 6 * entry.n, entry.components
        assert sum(entry.listed) == 6 * entry.n, entry.components


def test_corrected_rows_keep_the_listed_type():
    corrected = [e for e in CATALOG if e.printed is not None]
    assert len(corrected) == 2
    assert [list(e.printed) for e in corrected] == [[6, 6, 2, 2, 2], [6, 4, 4, 2, 2]]
    assert [list(e.expected) for e in corrected] == [[6, 2, 2, 2, 2, 2, 2], [6, 4, 2, 2, 2, 2]]


def test_verify_catalog_at_degree_one():
    result = verify_catalog(n=1, resolution=64)
    assert result["total"] == 1
    assert result["matched"] == 1
    assert result["consistent"] == 1
    row = result["rows"][0]
    assert row["structural"] is True
    assert row["feasible"] == [[2, 2, 2]]
    assert row["printed_feasible"] is True
    assert row["monodromy"] == [2, 2, 2]


def test_corrected_row_reports_the_listed_type_as_infeasible():
    """(x^3 + x^2 + 1, -2x^2 - 2, -2): the listed [6, 6, 2, 2, 2] needs two branched faces"""
    entry = next(e for e in CATALOG if e.printed == (6, 6, 2, 2, 2))
    row = verify_entry(entry, resolution=100)
    assert row["error"] is None
    assert row["printed"] == [6, 6, 2, 2, 2]
    assert row["printed_feasible"] is False
    assert row["feasible"] == [[6, 2, 2, 2, 2, 2, 2]]
    assert row["measured"] == row["expected"] == row["monodromy"]


@pytest.mark.slow
@pytest.mark.parametrize("entry", [e for e in CATALOG if e.n <= 3 and not e.tuned], ids=lambda e: " | ".join(e.components))
def test_low_degree_entries_reproduce(entry):
    """
    The traced type agrees with the monodromy type; where the branch data
    allow a single type it is the catalog's
    """
    row = verify_entry(entry)
    assert row["error"] is None
    assert row["structural"] is True
    assert row["measured"] == row["monodromy"]
    assert row["measured"] in row["feasible"]
    if len(row["feasible"]) == 1:
        assert row["measured"] == row["expected"]

