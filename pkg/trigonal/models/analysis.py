# trigonal/models/analysis.py
"""
Value types of the analysis layer: the real preimage graph, one-parameter
families with their sample grids, sweep snapshots and move events.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from trigonal.models.dessin import Dessin, DessinEdge, DessinVertex
from trigonal.models.poly import Poly

# (power of x, power of the parameter) -> coefficient
CoefficientTable = Dict[Tuple[int, int], complex]


@dataclass
class RealPreimageGraph:
    """j^{-1} of the real line: the dessin plus the strands over (1, inf) and (-inf, 0)"""

    dessin: Dessin
    vertices: List[DessinVertex]
    extension: List[DessinEdge]
    # extension edge id -> region of the dessin holding its interior
    edge_region: Dict[int, int] = field(default_factory=dict)

    @property
    def edges(self) -> List[DessinEdge]:
        return list(self.dessin.edges) + list(self.extension)

    def restriction(self) -> List[DessinEdge]:
        """Edges over [0, 1]"""
        return [e for e in self.edges if e.band == "unit"]

    def graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(v.id for v in self.vertices)
        for edge in self.edges:
            graph.add_edge(*edge.endpoints, key=edge.id, band=edge.band)
        return graph


class MoveKind(str, Enum):
    MONOCHROME_MODIFICATION = "monochrome_modification"
    MERGE_BLACK = "merge_black"
    MERGE_WHITE = "merge_white"
    MERGE_BLACK_MONOCHROME = "merge_black_monochrome"
    COMPOUND = "compound"


@dataclass
class MoveEvent:
    kind: MoveKind
    window: Tuple[complex, complex]
    witness: List[complex] = field(default_factory=list)
    changes: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class ParameterGrid:
    """Samples of the parameter: a segment, or a box when im_count is given"""

    lo: complex
    hi: complex
    count: int
    im_count: Optional[int] = None

    def points(self) -> List[complex]:
        if self.count < 1:
            raise ValueError("a grid needs at least one sample")
        if self.im_count is None:
            return [complex(z) for z in np.linspace(self.lo, self.hi, self.count)]
        re = np.linspace(self.lo.real, self.hi.real, self.count)
        im = np.linspace(self.lo.imag, self.hi.imag, self.im_count)
        return [complex(r, i) for i in im for r in re]


@dataclass(frozen=True)
class Family:
    """Three sections whose coefficients are polynomials in one parameter"""

    param: str
    tables: Tuple[CoefficientTable, CoefficientTable, CoefficientTable]
    grid: ParameterGrid
    path: Optional[ParameterGrid] = None

    def member(self, a: complex) -> Tuple[Poly, Poly, Poly]:
        polys = []
        for table in self.tables:
            degree = max((i for i, _ in table), default=0)
            coeffs = [0j] * (degree + 1)
            for (i, k), value in table.items():
                coeffs[i] += value * a ** k
            polys.append(Poly(tuple(coeffs)))
        return tuple(polys)

    def samples(self) -> List[complex]:
        """Sweep samples: the path if given, else the segment from grid.lo to grid.hi"""
        if self.path is not None:
            return self.path.points()
        if self.grid.im_count is None:
            return self.grid.points()
        return ParameterGrid(self.grid.lo, self.grid.hi, self.grid.count).points()

    @property
    def is_real(self) -> bool:
        return all(abs(v.imag) == 0 for table in self.tables for v in table.values())


@dataclass
class Snapshot:
    a: complex
    degenerate: bool = False
    reason: Optional[str] = None
    sizes: Optional[List[int]] = None
    vertex_profile: Dict[str, int] = field(default_factory=dict)
    monochrome: int = 0
    simple: bool = False
    signature: str = ""

    def key(self) -> Tuple:
        return (tuple(self.sizes or ()), tuple(sorted(self.vertex_profile.items())), self.monochrome, self.signature)

    def changes_from(self, other: "Snapshot") -> List[str]:
        changes = []
        if self.vertex_profile != other.vertex_profile:
            changes.append("vertices")
        if (self.monochrome > 0) != (other.monochrome > 0):
            changes.append("monochrome")
        if self.sizes != other.sizes:
            changes.append("type")
        if self.signature != other.signature:
            changes.append("map")
        return changes


@dataclass
class SweepResult:
    snapshots: List[Snapshot]
    events: List[MoveEvent]


@dataclass
class LocusPoint:
    a: complex
    flagged: bool
    degenerate: bool = False
    critical_points: List[complex] = field(default_factory=list)
    critical_values: List[Optional[complex]] = field(default_factory=list)


@dataclass
class Maximality:
    maximal: bool
    reasons: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.maximal
