# trigonal/services/combinatorics.py
"""
Integer partitions, the combinatorial-type bound with its brute-force
oracle, and the count of simple dessins (n x n nonnegative integer
matrices with all line sums 3, up to row and column permutations).
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from typing import Dict, Iterator, List, Optional, Set, Tuple

from scipy.special import gammaln

from trigonal.core.config import settings
from trigonal.core.errors import SizeGuard
from trigonal.core.parallel import parallel_map
from trigonal.models.combinatorics import CombinatorialType, DegreeMatrix, Partition, PreTypeCatalog

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_N = 5


def _guard(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise ValueError(f"{what} needs n >= 1")
    if n > limit:
        raise SizeGuard(f"{what} is limited to n <= {limit}", {"n": n, "limit": limit})


def combinatorial_type(d) -> CombinatorialType:
    return CombinatorialType.of([r.size for r in d.regions], d.n)


# Partitions

@lru_cache(maxsize=None)
def partition_count_len(n: int, m: int) -> int:
    """Partitions of n with exactly m parts"""
    if n == 0 and m == 0:
        return 1
    if n <= 0 or m <= 0 or m > n:
        return 0
    return partition_count_len(n - 1, m - 1) + partition_count_len(n - m, m)


def partition_count(n: int) -> int:
    return sum(partition_count_len(n, m) for m in range(1, n + 1))


def _partitions(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n: int) -> List[Partition]:
    """Reverse-lexicographic: {n}, {n-1, 1}, ..., {1, ..., 1}"""
    return [Partition(p) for p in _partitions(n, n)]


# Combinatorial-type bound

def kappa(n: int) -> int:
    """The correction term of the bound, evaluated with its printed limits"""
    p = partition_count_len
    total = 0
    for r in range(1, (n + 1) // 3 + 1):
        inner = 0
        for j in range(r, (n + 1 - r) // 2 + 1):
            innermost = sum(p(n, i) for i in range(j, n - j - r + 2))
            inner += p(n, j) * innermost
        total += p(n, r) * inner
    return total


def bound_formula(n: int) -> int:
    pn = partition_count(n)
    return pn * (pn + 1) * (pn + 2) // 6 - kappa(n)


def _merge(triple) -> CombinatorialType:
    sizes = [2 * part for partition in triple for part in partition.parts]
    return CombinatorialType.of(sizes, triple[0].n)


def pretype_rows(n: int) -> List[Dict]:
    """Every unordered triple of partitions with its region count and whether it survives"""
    _guard(n, settings.COMBINATORICS_MAX_N, "pre-type enumeration")
    rows = []
    for triple in combinations_with_replacement(partitions(n), 3):
        regions = sum(len(p) for p in triple)
        rows.append(
            {
                "partitions": [list(p.parts) for p in triple],
                "regions": regions,
                "kept": regions >= n + 2,
                "type": _merge(triple).as_list(),
            }
        )
    return rows


def enumerate_pretypes(n: int) -> PreTypeCatalog:
    """Brute-force oracle for the bound: merged size lists of surviving triples"""
    _guard(n, settings.COMBINATORICS_MAX_N, "pre-type enumeration")
    catalog = PreTypeCatalog(n)
    for triple in combinations_with_replacement(partitions(n), 3):
        if sum(len(p) for p in triple) < n + 2:
            continue
        catalog.triples.add(triple)
        catalog.merged.add(_merge(triple))
    formula = bound_formula(n)
    if formula != len(catalog.merged):
        logger.warning(f"Bound formula gives {formula}, pre-type oracle gives {len(catalog.merged)} (n={n})")
    return catalog


_NONREALIZABLE: Dict[int, Set[Tuple[int, ...]]] = {4: {(6, 4, 4, 4, 4, 2)}}


def known_nonrealizable(n: int) -> Set[CombinatorialType]:
    return {CombinatorialType(sizes, n) for sizes in _NONREALIZABLE.get(n, set())}


def realizability(n: int, ctype: CombinatorialType) -> str:
    """'nonrealizable', 'realizable' (n <= 4, the classified range) or 'unknown'"""
    if ctype in known_nonrealizable(n):
        return "nonrealizable"
    return "realizable" if n <= 4 else "unknown"


# Simple dessins

def _cycle_index_weight(cycles: Tuple[int, ...]) -> int:
    """z = prod i^{m_i} m_i!, the centralizer order of a cycle type"""
    z = 1
    for length in set(cycles):
        m = cycles.count(length)
        z *= length ** m * math.factorial(m)
    return z


def _fixed_matrices(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> int:
    """
    Matrices with line sums 3 fixed by a row permutation of cycle type rows and
    a column permutation of cycle type cols. A row cycle of length a and a
    column cycle of length b split their cells into gcd(a, b) orbits; with s
    the total over those orbits, each row gets (b/g)s and each column (a/g)s.
    """
    cols = tuple(sorted(cols))
    groups = []
    start = 0
    while start < len(cols):
        end = start
        while end < len(cols) and cols[end] == cols[start]:
            end += 1
        groups.append((start, end))
        start = end

    def canonical(state: Tuple[int, ...]) -> Tuple[int, ...]:
        out = []
        for lo, hi in groups:
            out.extend(sorted(state[lo:hi]))
        return tuple(out)

    def choices(a: int, state: Tuple[int, ...]):
        """(new state, weight) for every way a row cycle of length a reaches row sum 3"""
        q = len(cols)

        def rec(idx: int, budget: int, current: List[int], weight: int):
            if budget == 0:
                yield tuple(current), weight
                return
            if idx == q:
                return
            b = cols[idx]
            g = math.gcd(a, b)
            row_w, col_w = b // g, a // g
            s = 0
            while s * row_w <= budget and s * col_w <= state[idx]:
                ways = math.comb(s + g - 1, g - 1) if s else 1
                current[idx] = state[idx] - s * col_w
                yield from rec(idx + 1, budget - s * row_w, current, weight * ways)
                s += 1
            current[idx] = state[idx]

        yield from rec(0, 3, list(state), 1)

    @lru_cache(maxsize=None)
    def count(i: int, state: Tuple[int, ...]) -> int:
        if i == len(rows):
            return 1 if not any(state) else 0
        total = 0
        for new_state, weight in choices(rows[i], state):
            total += weight * count(i + 1, canonical(new_state))
        return total

    return count(0, tuple(3 for _ in cols))


def _burnside_row(args: Tuple[int, List[Tuple[int, ...]]]) -> Fraction:
    index, types = args
    lam = types[index]
    total = Fraction(0)
    for other in range(index, len(types)):
        mu = types[other]
        fixed = _fixed_matrices(lam, mu)
        if fixed:
            term = Fraction(fixed, _cycle_index_weight(lam) * _cycle_index_weight(mu))
            total += term if other == index else 2 * term
    return total


def count_simple(n: int, workers: Optional[int] = None) -> int:
    """
    Orbits of degree matrices under independent row and column permutations,
    counted with Burnside's lemma over pairs of cycle types.
    """
    _guard(n, settings.COMBINATORICS_MAX_N, "simple-dessin count")
    types = [tuple(sorted(p.parts, reverse=True)) for p in partitions(n)]
    terms = parallel_map(_burnside_row, [(i, types) for i in range(len(types))], workers)
    total = sum(terms, Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError(f"orbit count {total} is not an integer")
    return int(total)


def _rows_with_sum(n: int, total: int = 3) -> List[Tuple[int, ...]]:
    """All length-n rows of nonnegative integers summing to total, descending lexicographic"""
    out = []

    def rec(prefix: List[int], left: int):
        if len(prefix) == n - 1:
            out.append(tuple(prefix + [left]))
            return
        for v in range(left, -1, -1):
            rec(prefix + [v], left - v)

    rec([], total)
    return out


def canonical_form(matrix: DegreeMatrix) -> DegreeMatrix:
    """Largest arrangement (rows sorted descending) over all column permutations"""
    n = matrix.n
    best = None
    for perm in permutations(range(n)):
        rows = sorted((tuple(row[j] for j in perm) for row in matrix.rows), reverse=True)
        candidate = tuple(rows)
        if best is None or candidate > best:
            best = candidate
    return DegreeMatrix(best)


def degree_matrices(n: int) -> Iterator[DegreeMatrix]:
    """Row-sorted matrices with line sums 3 (one per row-permutation class)"""
    rows = _rows_with_sum(n)

    def rec(prefix: List[Tuple[int, ...]], col_left: List[int], max_index: int):
        if len(prefix) == n:
            if not any(col_left):
                yield DegreeMatrix(tuple(prefix))
            return
        for idx in range(max_index, len(rows)):
            row = rows[idx]
            if all(v <= c for v, c in zip(row, col_left)):
                yield from rec(prefix + [row], [c - v for c, v in zip(col_left, row)], idx)

    yield from rec([], [3] * n, 0)


def count_simple_bruteforce(n: int) -> int:
    """Full enumeration plus orbit deduplication; the oracle for count_simple"""
    _guard(n, BRUTE_FORCE_MAX_N, "brute-force simple-dessin count")
    return len({canonical_form(m) for m in degree_matrices(n)})


def simple_asymptotic(n: int) -> float:
    """(3n)! / (6^{2n} (n!)^2) * exp(2 - 2/(9n)), through log-gamma"""
    log_value = gammaln(3 * n + 1) - 2 * n * math.log(6) - 2 * gammaln(n + 1) + 2 - 2 / (9 * n)
    return float(math.exp(log_value))
