# trigonal/models/dessin.py
"""
Embedded dessin: colored vertices on the sphere, traced edges, the rotation
system and the regions of the complement.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from trigonal.core.errors import InconsistentEmbedding
from trigonal.models.sphere import SpherePoint


class VertexKind(str, Enum):
    BLACK = "black"
    WHITE = "white"
    CROSS = "cross"
    MONOCHROME = "monochrome"


# cross pair label -> region color pair it must lie in
PAIR_TO_REGION = {"12": "BG", "23": "RG", "13": "RB"}
WHITE_INITIAL = {"red": "R", "blue": "B", "green": "G"}


@dataclass
class DessinVertex:
    id: int
    kind: VertexKind
    # cyan/yellow, red/blue/green, or the pair label 12/23/13 of a cross
    color: Optional[str]
    x: complex
    position: SpherePoint
    degree: int = 0
    multiplicity: int = 1
    jvalue: Optional[float] = None
    # False for vertices of the real preimage that are not on the dessin
    in_dessin: bool = True

    @property
    def at_infinity(self) -> bool:
        return self.position.is_infinity


@dataclass
class DessinEdge:
    id: int
    endpoints: Tuple[int, int]
    strand: np.ndarray  # (N, 3) sphere vectors from endpoints[0] to endpoints[1]
    lam_edge: str
    band: str = "unit"

    def dart(self, forward: bool = True) -> int:
        return 2 * self.id if forward else 2 * self.id + 1


def dart_edge(dart: int) -> int:
    return dart // 2


def dart_reverse(dart: int) -> int:
    return dart ^ 1


@dataclass
class Region:
    id: int
    boundary: List[List[int]]  # one closed dart walk per boundary component
    color_pair: Optional[str]
    size: int
    crosses_inside: List[int] = field(default_factory=list)
    white_colors: Tuple[str, ...] = ()

    @property
    def cross_count(self) -> int:
        return len(self.crosses_inside)


@dataclass
class Dessin:
    vertices: List[DessinVertex]
    edges: List[DessinEdge]
    rotation: Dict[int, List[int]]
    regions: List[Region]
    n: int
    component_count: int
    curve_n: int = 0
    resolution: int = 0
    components: Dict[int, int] = field(default_factory=dict)  # vertex id -> component index
    embedding: Optional[object] = None
    curve: Optional[object] = None
    special_points: Optional[object] = None
    vertex_table: Optional[object] = None

    def vertex(self, vid: int) -> DessinVertex:
        return self.vertices[vid]

    def dart_origin(self, dart: int) -> int:
        edge = self.edges[dart_edge(dart)]
        return edge.endpoints[0] if dart % 2 == 0 else edge.endpoints[1]

    def dart_target(self, dart: int) -> int:
        return self.dart_origin(dart_reverse(dart))

    def of_kind(self, kind: VertexKind) -> List[DessinVertex]:
        return [v for v in self.vertices if v.kind == kind and v.in_dessin]

    @property
    def graph_vertices(self) -> List[DessinVertex]:
        return [v for v in self.vertices if v.kind != VertexKind.CROSS and v.in_dessin]

    @property
    def crosses(self) -> List[DessinVertex]:
        return self.of_kind(VertexKind.CROSS)

    @property
    def monochrome(self) -> List[DessinVertex]:
        return self.of_kind(VertexKind.MONOCHROME)

    @property
    def merged_edge_count(self) -> int:
        """Edges with each monochrome vertex's k through-strands counted once"""
        return len(self.edges) - sum(v.multiplicity for v in self.monochrome)

    def region_of_cross(self, cross_id: int) -> Optional[Region]:
        for region in self.regions:
            if cross_id in region.crosses_inside:
                return region
        return None

    def locate(self, point: np.ndarray) -> int:
        """Region id of a sphere point off the graph"""
        if self.embedding is None:
            raise InconsistentEmbedding("dessin has no geometric embedding (built by graph surgery)")
        return self.embedding.locate(point)
