# trigonal/schemas/reports.py
"""
Output documents. Complex numbers are [re, im]; points at infinity are null.
"""
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from trigonal.models.analysis import LocusPoint, MoveEvent, Snapshot, SweepResult
from trigonal.models.dessin import Dessin
from trigonal.models.poly import is_infinite

Pair = Tuple[float, float]
Vector = Tuple[float, float, float]


def pair(z: Optional[complex]) -> Optional[Pair]:
    if z is None or is_infinite(z):
        return None
    return (float(z.real), float(z.imag))


class VertexRead(BaseModel):
    id: int
    kind: str
    color: Optional[str] = None
    x: Optional[Pair] = None
    at_infinity: bool = False
    sphere: Vector
    degree: int = 0
    multiplicity: int = 1
    jvalue: Optional[float] = None


class EdgeRead(BaseModel):
    id: int
    endpoints: Tuple[int, int]
    arc: str
    band: str = "unit"
    strand: List[Vector]


class RegionRead(BaseModel):
    id: int
    color_pair: Optional[str] = None
    size: int
    crosses: List[int]
    boundary: List[List[int]]


class CheckRead(BaseModel):
    name: str
    passed: bool
    measured: Any = None
    expected: Any = None


class StructuralRead(BaseModel):
    passed: bool
    checks: List[CheckRead]


class DessinReport(BaseModel):
    curve: Dict[str, List[List[float]]]
    n: int
    degree: int
    resolution: int
    vertices: List[VertexRead]
    edges: List[EdgeRead]
    edge_count: int
    regions: List[RegionRead]
    type: List[int]
    component_count: int
    structural: StructuralRead
    simple: bool
    maximal: bool
    maximal_reasons: List[str]
    signature: str

    model_config = ConfigDict(from_attributes=True)


def dessin_report(d: Dessin) -> DessinReport:
    # local imports keep the schema layer free of import cycles
    from trigonal.services.analysis.maximality import is_maximal
    from trigonal.services.dessin_service import combinatorial_sizes, is_simple, signature, structural_report

    maximality = is_maximal(d)
    return DessinReport(
        curve=d.curve.to_pairs() if d.curve is not None else {},
        n=d.curve_n,
        degree=d.n,
        resolution=d.resolution,
        vertices=[
            VertexRead(
                id=v.id,
                kind=v.kind.value,
                color=v.color,
                x=pair(v.x),
                at_infinity=v.at_infinity,
                sphere=v.position.as_list(),
                degree=v.degree,
                multiplicity=v.multiplicity,
                jvalue=v.jvalue,
            )
            for v in d.vertices
            if v.in_dessin
        ],
        edges=[
            EdgeRead(id=e.id, endpoints=e.endpoints, arc=e.lam_edge, band=e.band, strand=e.strand.tolist())
            for e in d.edges
        ],
        edge_count=d.merged_edge_count,
        regions=[
            RegionRead(id=r.id, color_pair=r.color_pair, size=r.size, crosses=r.crosses_inside, boundary=r.boundary)
            for r in d.regions
        ],
        type=combinatorial_sizes(d),
        component_count=d.component_count,
        structural=structural_report(d),
        simple=is_simple(d),
        maximal=maximality.maximal,
        maximal_reasons=maximality.reasons,
        signature=signature(d),
    )


class SnapshotRead(BaseModel):
    a: Pair
    degenerate: bool = False
    reason: Optional[str] = None
    type: Optional[List[int]] = None
    vertex_profile: Dict[str, int] = {}
    monochrome: int = 0
    simple: bool = False


class EventRead(BaseModel):
    kind: str
    window: Tuple[Pair, Pair]
    witness: List[Optional[Pair]]
    changes: List[str]


class LocusPointRead(BaseModel):
    a: Pair
    flagged: bool
    degenerate: bool = False
    critical_points: List[Optional[Pair]] = []
    critical_values: List[Optional[Pair]] = []


class DeformReport(BaseModel):
    param: str
    snapshots: List[SnapshotRead]
    events: List[EventRead]
    locus: List[LocusPointRead]


def snapshot_read(s: Snapshot) -> SnapshotRead:
    return SnapshotRead(
        a=pair(s.a),
        degenerate=s.degenerate,
        reason=s.reason,
        type=s.sizes,
        vertex_profile=s.vertex_profile,
        monochrome=s.monochrome,
        simple=s.simple,
    )


def event_read(e: MoveEvent) -> EventRead:
    return EventRead(
        kind=e.kind.value,
        window=(pair(e.window[0]), pair(e.window[1])),
        witness=[pair(x) for x in e.witness],
        changes=e.changes,
    )


def locus_read(p: LocusPoint) -> LocusPointRead:
    return LocusPointRead(
        a=pair(p.a),
        flagged=p.flagged,
        degenerate=p.degenerate,
        critical_points=[pair(x) for x in p.critical_points],
        critical_values=[pair(v) for v in p.critical_values],
    )


def deform_report(param: str, sweep: Optional[SweepResult], locus: List[LocusPoint]) -> DeformReport:
    return DeformReport(
        param=param,
        snapshots=[snapshot_read(s) for s in sweep.snapshots] if sweep else [],
        events=[event_read(e) for e in sweep.events] if sweep else [],
        locus=[locus_read(p) for p in locus],
    )
