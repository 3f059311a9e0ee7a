# tests/test_combinatorics.py
"""
Unit tests for partitions, the combinatorial-type bound and simple-dessin counts
"""
import logging

import numpy as np
import pytest

from trigonal.core.errors import SizeGuard
from trigonal.models.combinatorics import CombinatorialType, DegreeMatrix
from trigonal.services.combinatorics import (
    bound_formula,
    canonical_form,
    count_simple,
    count_simple_bruteforce,
    degree_matrices,
    enumerate_pretypes,
    kappa,
    known_nonrealizable,
    partition_count,
    partition_count_len,
    partitions,
    pretype_rows,
    realizability,
    simple_asymptotic,
)

# orbit counts of n x n matrices with line sums 3 under row and column permutations
SIMPLE_COUNTS = {1: 1, 2: 2, 3: 5, 4: 12, 5: 31, 6: 103, 7: 383, 8: 1731, 9: 9273, 10: 57563, 11: 406465}


def test_partition_counts():
    """p(4) = 5: {4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}"""
    assert partition_count(4) == 5
    assert partition_count_len(4, 2) == 2
    assert partition_count_len(4, 1) == 1
    assert partition_count_len(3, 4) == 0
    assert [partition_count(n) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_partitions_are_reverse_lexicographic():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_bound_formula_small_n():
    """
    n = 3: p = 3 gives C(5, 3) = 10, minus kappa = p(3,1) * (p(3,1) + p(3,2)) = 2
    """
    assert kappa(3) == 2
    assert [bound_formula(n) for n in (1, 2, 3)] == [1, 3, 8]


def test_bound_formula_at_four_exceeds_oracle(caplog):
    """
    n = 4: C(7, 3) = 35 minus kappa = 1 * (1 * 4 + 2 * 2) = 8 gives 27,
    while only 23 pre-types survive; the mismatch is logged
    """
    assert kappa(4) == 8
    assert bound_formula(4) == 27
    with caplog.at_level(logging.WARNING):
        catalog = enumerate_pretypes(4)
    assert len(catalog.merged) == 23
    assert any("pre-type oracle gives 23" in r.message for r in caplog.records)


def test_pretypes_small_n():
    """Oracle sizes 1, 3, 8 agree with the formula"""
    assert [len(enumerate_pretypes(n).merged) for n in (1, 2, 3)] == [1, 3, 8]


def test_pretypes_for_two():
    catalog = enumerate_pretypes(2)
    assert {t.sizes for t in catalog.merged} == {(4, 4, 2, 2), (4, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2)}
    assert all(t.is_valid for t in catalog.merged)


def test_pretypes_for_three_match_listed_types():
    sizes = {t.sizes for t in enumerate_pretypes(3).merged}
    assert (6, 6, 2, 2, 2) in sizes
    assert (4, 4, 4, 2, 2, 2) in sizes
    assert (2,) * 9 in sizes
    assert (6, 6, 6) not in sizes


def test_pretype_rows_mark_eliminated_triples():
    """n = 2: ({2}, {2}, {2}) has 3 < n + 2 regions"""
    rows = pretype_rows(2)
    assert len(rows) == 4
    dropped = [r for r in rows if not r["kept"]]
    assert dropped == [{"partitions": [[2], [2], [2]], "regions": 3, "kept": False, "type": [4, 4, 4]}]


def test_nonrealizable_type_at_four():
    bad = CombinatorialType.of([6, 4, 4, 4, 4, 2], 4)
    assert bad in known_nonrealizable(4)
    assert bad in enumerate_pretypes(4).merged
    assert realizability(4, bad) == "nonrealizable"
    assert realizability(4, CombinatorialType.of([8, 4, 4, 4, 2, 2], 4)) == "realizable"
    assert realizability(5, CombinatorialType.of([2] * 15, 5)) == "unknown"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_count_simple(n):
    assert count_simple(n) == SIMPLE_COUNTS[n]


@pytest.mark.slow
@pytest.mark.parametrize("n", [8, 9])
def test_count_simple_larger(n):
    assert count_simple(n) == SIMPLE_COUNTS[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bruteforce_agrees_with_burnside(n):
    assert count_simple_bruteforce(n) == count_simple(n)


def test_count_simple_parallel_matches_serial():
    assert count_simple(6, workers=2) == count_simple(6, workers=1)


def test_degree_matrices_are_valid():
    """n = 2: [[3,0],[0,3]], [[2,1],[1,2]] and row orders of those"""
    matrices = list(degree_matrices(2))
    assert all(m.is_valid for m in matrices)
    orbits = {canonical_form(m) for m in matrices}
    assert orbits == {DegreeMatrix(((3, 0), (0, 3))), DegreeMatrix(((2, 1), (1, 2)))}


def test_canonical_form_is_permutation_invariant():
    m = DegreeMatrix.from_array(np.array([[0, 1, 2], [3, 0, 0], [0, 2, 1]]))
    shuffled = DegreeMatrix.from_array(np.array([[2, 1, 0], [1, 2, 0], [0, 0, 3]]))
    assert canonical_form(m) == canonical_form(shuffled)


def test_size_guards():
    with pytest.raises(SizeGuard):
        count_simple(13)
    with pytest.raises(SizeGuard):
        count_simple_bruteforce(6)
    with pytest.raises(ValueError):
        enumerate_pretypes(0)


def test_asymptotic_ratio_decreases():
    """
    (3n)! / (6^{2n} (n!)^2) * e^{2 - 2/(9n)} at n = 9 is about 5872,
    so the ratio is 9273 / 5872 = 1.58, falling to 1.36 at n = 11
    """
    ratios = [SIMPLE_COUNTS[n] / simple_asymptotic(n) for n in (9, 10, 11)]
    assert all(1.3 < r < 1.7 for r in ratios)
    assert ratios[0] > ratios[1] > ratios[2]


def test_asymptotic_grows_from_two():
    values = [simple_asymptotic(n) for n in range(2, 21)]
    assert all(b > a for a, b in zip(values, values[1:]))
