# trigonal/services/embedding.py
"""
Combinatorial map of a traced dessin: rotation system from tangent angles
on the sphere, face orbits, connected components and regions of the
complement (faces of different components glued by nesting).
"""
import logging
from typing import Dict, List, Sequence, Tuple

import networkx as nx
import numpy as np

from trigonal.core.errors import InconsistentEmbedding
from trigonal.models.dessin import DessinEdge, DessinVertex, VertexKind, dart_reverse
from trigonal.models.sphere import PlaneChart, best_center, signed_area, winding_number

logger = logging.getLogger(__name__)


def _tangent_angle(origin: np.ndarray, toward: np.ndarray) -> float:
    """Angle of a direction in the tangent plane, oriented like the x-plane"""
    ref = np.array([0.0, 0.0, 1.0]) if abs(origin[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    e1 = np.cross(origin, ref)
    e1 /= np.linalg.norm(e1)
    # basis with e1 x e2 along the inward normal
    e2 = np.cross(-origin, e1)
    u = toward - origin
    return float(np.arctan2(np.dot(u, e2), np.dot(u, e1)))


def dart_polyline(edge: DessinEdge, dart: int) -> np.ndarray:
    return edge.strand if dart % 2 == 0 else edge.strand[::-1]


class Embedding:
    """Faces and regions of a set of edges on the sphere"""

    def __init__(self, vertices: Sequence[DessinVertex], edges: Sequence[DessinEdge]):
        self.vertices = list(vertices)
        self.edges = list(edges)
        self.rotation = self._rotation()
        self.orbits = self._orbits()
        self.components = self._components()
        self.component_ids = sorted(set(self.components.values()))

        points = np.vstack([e.strand for e in self.edges]) if self.edges else np.zeros((0, 3))
        extra = np.array([v.position.vector for v in self.vertices])
        self.center, clearance = best_center(np.vstack([points, extra]) if len(extra) else points)
        logger.debug(f"Projection center {np.round(self.center, 4).tolist()} (clearance {clearance:.3g})")
        self.chart = PlaneChart(self.center)

        self.polygons = [self._polygon(orbit) for orbit in self.orbits]
        self.areas = [signed_area(p) for p in self.polygons]
        self.orbit_component = [self.components[self.origin(orbit[0])] for orbit in self.orbits]
        self.outer = self._outer_orbits()
        self.region_of_orbit, self.region_orbits, self.region_addresses = self._regions()

    # combinatorial map

    def origin(self, dart: int) -> int:
        edge = self.edges[dart // 2]
        return edge.endpoints[0] if dart % 2 == 0 else edge.endpoints[1]

    def _rotation(self) -> Dict[int, List[int]]:
        angles: Dict[int, List[Tuple[float, int]]] = {}
        for edge in self.edges:
            for dart in (2 * edge.id, 2 * edge.id + 1):
                line = dart_polyline(edge, dart)
                origin = line[0]
                toward = next((p for p in line[1:] if np.linalg.norm(p - origin) > 1e-12), line[-1])
                angles.setdefault(self.origin(dart), []).append((_tangent_angle(origin, toward), dart))
        return {v: [d for _, d in sorted(items)] for v, items in angles.items()}

    def next_dart(self, dart: int) -> int:
        """Next dart along the face on the right (rotations are counter-clockwise)"""
        back = dart_reverse(dart)
        around = self.rotation[self.origin(back)]
        return around[(around.index(back) + 1) % len(around)]

    def _orbits(self) -> List[List[int]]:
        seen = set()
        orbits = []
        for edge in self.edges:
            for start in (2 * edge.id, 2 * edge.id + 1):
                if start in seen:
                    continue
                orbit = []
                dart = start
                while dart not in seen:
                    seen.add(dart)
                    orbit.append(dart)
                    dart = self.next_dart(dart)
                if dart != start:
                    raise InconsistentEmbedding("face walk does not close", {"dart": start})
                orbits.append(orbit)
        return orbits

    def _components(self) -> Dict[int, int]:
        graph = nx.Graph()
        graph.add_nodes_from(v.id for v in self.vertices if v.kind != VertexKind.CROSS)
        graph.add_edges_from(e.endpoints for e in self.edges)
        mapping = {}
        ordered = sorted(nx.connected_components(graph), key=min)
        for index, comp in enumerate(c for c in ordered if len(c) > 1 or any(self.rotation.get(v) for v in c)):
            for v in comp:
                mapping[v] = index
        return mapping

    # geometry

    def _polygon(self, orbit: List[int]) -> np.ndarray:
        parts = [dart_polyline(self.edges[d // 2], d)[:-1] for d in orbit]
        return self.chart.project(np.vstack(parts))

    def _outer_orbits(self) -> Dict[int, int]:
        outer: Dict[int, int] = {}
        for comp in self.component_ids:
            members = [i for i, c in enumerate(self.orbit_component) if c == comp]
            # walks keep their face on the right, so only the outer face has positive area
            outer[comp] = max(members, key=lambda i: self.areas[i])
        return outer

    def face_in_component(self, comp: int, w: complex) -> int:
        """Orbit of the given component whose face contains the plane point w"""
        for i, c in enumerate(self.orbit_component):
            if c != comp or i == self.outer[comp]:
                continue
            if winding_number(self.polygons[i], w) == -1:
                return i
        return self.outer[comp]

    def _component_point(self, comp: int) -> complex:
        vid = next(v for v, c in self.components.items() if c == comp)
        return complex(self.chart.project(self.vertices[vid].position.vector)[0])

    def _regions(self):
        reps = {comp: self._component_point(comp) for comp in self.component_ids}
        addresses: Dict[Tuple[int, ...], List[int]] = {}
        for i, comp in enumerate(self.orbit_component):
            address = tuple(
                i if other == comp else self.face_in_component(other, reps[comp])
                for other in self.component_ids
            )
            addresses.setdefault(address, []).append(i)
        ordered = sorted(addresses.items(), key=lambda item: min(item[1]))
        region_of_orbit = {}
        region_orbits = []
        region_addresses = {}
        for rid, (address, orbits) in enumerate(ordered):
            region_orbits.append(orbits)
            region_addresses[address] = rid
            for i in orbits:
                region_of_orbit[i] = rid
        return region_of_orbit, region_orbits, region_addresses

    def locate(self, point: np.ndarray) -> int:
        w = complex(self.chart.project(np.asarray(point))[0])
        address = tuple(self.face_in_component(comp, w) for comp in self.component_ids)
        if address not in self.region_addresses:
            raise InconsistentEmbedding("point falls in no region", {"address": list(address)})
        return self.region_addresses[address]
