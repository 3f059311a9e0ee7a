# trigonal/models/combinatorics.py
"""
Combinatorial types, partitions, pre-type catalogs and degree matrices.
"""
from dataclasses import dataclass, field
from typing import List, Set, Tuple

import numpy as np


@dataclass(frozen=True)
class CombinatorialType:
    """Region sizes of a dessin, non-increasing"""

    sizes: Tuple[int, ...]
    n: int

    @classmethod
    def of(cls, sizes, n: int) -> "CombinatorialType":
        return cls(tuple(sorted(sizes, reverse=True)), n)

    @property
    def is_valid(self) -> bool:
        return (
            sum(self.sizes) == 6 * self.n
            and self.n + 2 <= len(self.sizes) <= 3 * self.n
            and all(s > 0 and s % 2 == 0 for s in self.sizes)
        )

    def as_list(self) -> List[int]:
        return list(self.sizes)


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass
class PreTypeCatalog:
    n: int
    triples: Set[Tuple[Partition, Partition, Partition]] = field(default_factory=set)
    merged: Set[CombinatorialType] = field(default_factory=set)

    def sorted_types(self) -> List[CombinatorialType]:
        return sorted(self.merged, key=lambda t: t.sizes, reverse=True)


@dataclass(frozen=True)
class DegreeMatrix:
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_array(cls, array: np.ndarray) -> "DegreeMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in array))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def is_valid(self) -> bool:
        arr = np.array(self.rows)
        return bool(np.all(arr >= 0) and np.all(arr.sum(axis=0) == 3) and np.all(arr.sum(axis=1) == 3))
