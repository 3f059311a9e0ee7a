# trigonal/services/analysis/maximality.py
"""
Maximal dessins: the maximality test, the real preimage graph that decides
whether the crosses of a region can be merged, and the two graph surgeries
(merging crosses, connecting components) that lead to a maximal dessin.
"""
import logging
from dataclasses import replace
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from trigonal.core.errors import InconsistentEmbedding, NoSameColorPair, NotMergeable
from trigonal.models.analysis import Maximality, RealPreimageGraph
from trigonal.models.curve import TrigonalCurve
from trigonal.models.dessin import Dessin, DessinEdge, DessinVertex, Region, VertexKind, dart_reverse
from trigonal.services.cross_ratio_graph import ABOVE_EDGES, BELOW_EDGES, BAND_UNIT, band_of
from trigonal.services.dessin_service import _edges_from_segments, build_dessin, trace_arcs, vertex_table
from trigonal.services.jmap import real_critical_points, special_points

logger = logging.getLogger(__name__)


def is_maximal(d: Dessin) -> Maximality:
    """Connected, no monochrome vertex, one cross vertex in every region"""
    reasons: List[str] = []
    if d.component_count != 1:
        reasons.append(f"disconnected ({d.component_count} components)")
    if d.monochrome:
        reasons.append(f"{len(d.monochrome)} monochrome vertices")
    for region in d.regions:
        if region.cross_count != 1:
            reasons.append(f"region {region.id} has {region.cross_count} crosses")
    return Maximality(not reasons, reasons)


def _strand_interior(edge: DessinEdge) -> np.ndarray:
    if len(edge.strand) > 2:
        return edge.strand[len(edge.strand) // 2]
    mid = edge.strand.mean(axis=0)
    return mid / np.linalg.norm(mid)


def real_preimage(
    c: TrigonalCurve,
    resolution: Optional[int] = None,
    seed: Optional[int] = None,
    dessin: Optional[Dessin] = None,
) -> RealPreimageGraph:
    """
    Trace the twelve arcs over (1, inf) and (-inf, 0) next to the dessin.
    Critical points with a real j-value off [0, 1] become vertices of the
    graph that are not on the dessin.
    """
    d = dessin if dessin is not None else build_dessin(c, resolution, seed)
    resolution = d.resolution if resolution is None else resolution
    sp = d.special_points if d.special_points is not None else special_points(c)

    # a fresh table keeps the dessin's vertex list untouched; ids agree
    table = vertex_table(sp)
    extra = [p for p in real_critical_points(c) if band_of(p.jvalue) != BAND_UNIT]
    for point in extra:
        table.add_monochrome(point, in_dessin=False)

    segments = trace_arcs(c, table, ABOVE_EDGES + BELOW_EDGES, resolution, seed)
    extension = _edges_from_segments(segments, first_id=len(d.edges))
    graph = RealPreimageGraph(dessin=d, vertices=table.vertices, extension=extension)
    for edge in extension:
        graph.edge_region[edge.id] = d.locate(_strand_interior(edge))
    logger.info(f"Real preimage traced: {len(extension)} extension strands, {len(extra)} extra critical points")
    return graph


def merge_hub(d: Dessin, g: RealPreimageGraph, region_id: int) -> Optional[int]:
    """
    A vertex of the real preimage from which every cross of the region is
    reached by strands inside the region, or None. Strands ending on the
    region boundary do not connect through it.
    """
    region = d.regions[region_id]
    crosses = list(region.crosses_inside)
    if len(crosses) < 2:
        raise ValueError(f"region {region_id} has {len(crosses)} cross(es); merging needs at least 2")

    inner = nx.Graph()
    inner.add_nodes_from(crosses)
    for edge in g.extension:
        if g.edge_region.get(edge.id) != region_id:
            continue
        nodes = []
        for vid in edge.endpoints:
            if g.vertices[vid].kind in (VertexKind.BLACK, VertexKind.WHITE):
                nodes.append(("boundary", edge.id, vid))
            else:
                nodes.append(vid)
        inner.add_edge(*nodes)

    reach = nx.node_connected_component(inner, crosses[0])
    if not all(c in reach for c in crosses):
        return None
    hubs = [
        v for v in reach if isinstance(v, int) and g.vertices[v].kind == VertexKind.MONOCHROME
    ]
    if not hubs:
        return crosses[0]
    return max(hubs, key=lambda v: (inner.degree(v), -v))


def mergeable_region(d: Dessin, g: RealPreimageGraph, region_id: int) -> bool:
    return merge_hub(d, g, region_id) is not None


def _reindex(d: Dessin, vertices: List[DessinVertex], edges: List[DessinEdge], drop: Iterable[int]) -> Dessin:
    """Remove vertices and renumber so that ids stay list positions"""
    drop = set(drop)
    mapping: Dict[int, int] = {}
    kept: List[DessinVertex] = []
    for v in vertices:
        if v.id in drop:
            continue
        mapping[v.id] = len(kept)
        kept.append(replace(v, id=len(kept)))
    new_edges = [replace(e, endpoints=(mapping[e.endpoints[0]], mapping[e.endpoints[1]])) for e in edges]
    rotation = {mapping[v]: list(darts) for v, darts in d.rotation.items() if v in mapping}
    components = {mapping[v]: comp for v, comp in d.components.items() if v in mapping}
    regions = [
        replace(r, crosses_inside=[mapping[c] for c in r.crosses_inside if c in mapping]) for r in d.regions
    ]
    return replace(d, vertices=kept, edges=new_edges, rotation=rotation, components=components, regions=regions)


def merge_crosses(d: Dessin, region_id: int, preimage: Optional[RealPreimageGraph] = None) -> Dessin:
    """
    Degenerate the region's crosses into one cross of the summed multiplicity,
    placed at the connecting vertex. Regions and edges are untouched.
    Raises NotMergeable.
    """
    region = d.regions[region_id]
    if region.cross_count < 2:
        raise NotMergeable(f"region {region_id} holds {region.cross_count} cross(es)", {"region": region_id})
    if preimage is None:
        if d.curve is None:
            raise NotMergeable("no curve to trace the real preimage from", {"region": region_id})
        preimage = real_preimage(d.curve, d.resolution, dessin=d)
    hub = merge_hub(d, preimage, region_id)
    if hub is None:
        raise NotMergeable(
            f"crosses of region {region_id} are not joined by the real preimage",
            {"region": region_id, "crosses": list(region.crosses_inside)},
        )

    crosses = [d.vertex(c) for c in region.crosses_inside]
    keeper = crosses[0]
    anchor = preimage.vertices[hub]
    vertices = list(d.vertices)
    vertices[keeper.id] = replace(
        keeper,
        x=anchor.x,
        position=anchor.position,
        multiplicity=sum(c.multiplicity for c in crosses),
    )
    regions = list(d.regions)
    regions[region_id] = replace(region, crosses_inside=[keeper.id])
    merged = _reindex(replace(d, regions=regions), vertices, list(d.edges), [c.id for c in crosses[1:]])
    logger.info(f"Merged {len(crosses)} crosses of region {region_id} into multiplicity {merged.vertex(keeper.id).multiplicity}")
    return merged


def merge_all_crosses(d: Dessin, preimage: Optional[RealPreimageGraph] = None) -> Dessin:
    """merge_crosses on every region holding two or more crosses"""
    if preimage is None and any(r.cross_count > 1 for r in d.regions):
        preimage = real_preimage(d.curve, d.resolution, dessin=d)
    for rid in range(len(d.regions)):
        region = d.regions[rid]
        if region.cross_count > 1:
            d = merge_crosses(d, rid, preimage)
            # later crosses shifted down; the preimage ids must follow
            preimage = _shift_preimage(preimage, d, region)
    return d


def _shift_preimage(g: RealPreimageGraph, d: Dessin, region: Region) -> RealPreimageGraph:
    dropped = set(region.crosses_inside[1:])
    keeper = region.crosses_inside[0]
    mapping: Dict[int, int] = {}
    kept: List[DessinVertex] = []
    for v in g.vertices:
        if v.id in dropped:
            continue
        mapping[v.id] = len(kept)
        kept.append(replace(v, id=len(kept)))
    extension = []
    for e in g.extension:
        a, b = e.endpoints
        # strands of absorbed crosses now end at the merged cross
        a = keeper if a in dropped else a
        b = keeper if b in dropped else b
        extension.append(replace(e, endpoints=(mapping[a], mapping[b])))
    return RealPreimageGraph(dessin=d, vertices=kept, extension=extension, edge_region=dict(g.edge_region))


# connecting components

def _face_walks(d: Dessin) -> List[List[int]]:
    seen = set()
    walks = []
    for edge in d.edges:
        for start in (2 * edge.id, 2 * edge.id + 1):
            if start in seen:
                continue
            walk = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                walk.append(dart)
                back = dart_reverse(dart)
                around = d.rotation[d.dart_origin(back)]
                dart = around[(around.index(back) + 1) % len(around)]
            if dart != start:
                raise InconsistentEmbedding("face walk does not close", {"dart": start})
            walks.append(walk)
    return walks


def _white_corners(d: Dessin, walk: List[int]) -> List[Tuple[int, int]]:
    """(white vertex, incoming dart) for every white corner of a boundary walk"""
    corners = []
    for i, dart in enumerate(walk):
        incoming = walk[i - 1]
        vid = d.dart_origin(dart)
        if d.vertex(vid).kind == VertexKind.WHITE:
            corners.append((vid, incoming))
    return corners


def _nearest_pair(d: Dessin):
    best = None
    for region in d.regions:
        if len(region.boundary) < 2:
            continue
        corners = []
        for walk in region.boundary:
            comp = d.components.get(d.dart_origin(walk[0]))
            corners.extend((comp, vid, incoming) for vid, incoming in _white_corners(d, walk))
        for i, (comp_a, a, in_a) in enumerate(corners):
            for comp_b, b, in_b in corners[i + 1:]:
                if comp_a == comp_b or d.vertex(a).color != d.vertex(b).color:
                    continue
                dist = float(np.linalg.norm(d.vertex(a).position.vector - d.vertex(b).position.vector))
                key = (dist, min(a, b), max(a, b))
                if best is None or key < best[0]:
                    first, second = ((a, in_a), (b, in_b)) if a < b else ((b, in_b), (a, in_a))
                    best = (key, first, second)
    return best


def _splice(rotation: List[int], after: int, inserted: List[int], last: int) -> List[int]:
    """Insert a rotation cycle ending in `last` right after the dart `after`"""
    j = inserted.index(last)
    cycle = inserted[j + 1:] + inserted[: j + 1]
    i = rotation.index(after)
    return rotation[: i + 1] + cycle + rotation[i + 1:]


def connect_components(d: Dessin) -> Dessin:
    """
    Merge the nearest same-colored white vertices of two components sharing
    a region until the dessin is connected. Region sizes are preserved.
    Raises NoSameColorPair.
    """
    while d.component_count > 1:
        pair = _nearest_pair(d)
        if pair is None:
            raise NoSameColorPair(
                "no region offers same-colored white vertices from two components",
                {"components": d.component_count},
            )
        _, (a, in_a), (b, in_b) = pair
        va, vb = d.vertex(a), d.vertex(b)
        rotation = dict(d.rotation)
        rotation[a] = _splice(rotation[a], dart_reverse(in_a), rotation[b], dart_reverse(in_b))
        del rotation[b]

        edges = [
            replace(e, endpoints=tuple(a if v == b else v for v in e.endpoints)) for e in d.edges
        ]
        vertices = list(d.vertices)
        vertices[a] = replace(va, multiplicity=va.multiplicity + vb.multiplicity, degree=va.degree + vb.degree)
        comp_a, comp_b = d.components[a], d.components[b]
        components = {v: (comp_a if comp == comp_b else comp) for v, comp in d.components.items()}

        staged = replace(d, rotation=rotation, edges=edges, components=components, embedding=None)
        staged = _reindex(staged, vertices, edges, [b])
        staged.component_count = len(set(staged.components.values()))
        staged.regions = _regions_after_surgery(d, staged)
        logger.info(f"Joined components through white vertices {a} and {b} ({va.color})")
        d = staged
    return d


def _regions_after_surgery(before: Dessin, after: Dessin) -> List[Region]:
    region_of_dart = {dart: r.id for r in before.regions for walk in r.boundary for dart in walk}
    walks: Dict[int, List[List[int]]] = {r.id: [] for r in before.regions}
    for walk in _face_walks(after):
        walks[region_of_dart[walk[0]]].append(walk)
    regions = []
    for region in after.regions:
        size = sum(
            1 for walk in walks[region.id] for dart in walk if after.vertex(after.dart_origin(dart)).kind == VertexKind.WHITE
        )
        if size != region.size:
            raise InconsistentEmbedding(
                f"region {region.id} changed size from {region.size} to {size}", {"region": region.id}
            )
        regions.append(replace(region, boundary=walks[region.id]))
    return regions


def maximal_degeneration(d: Dessin, preimage: Optional[RealPreimageGraph] = None) -> Dessin:
    """Cross merging followed by component joining"""
    return connect_components(merge_all_crosses(d, preimage))
