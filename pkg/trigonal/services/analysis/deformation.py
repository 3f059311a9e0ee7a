# trigonal/services/analysis/deformation.py
"""
One-parameter families: build a dessin per sample, diff consecutive
snapshots and bisect every change down to a narrow parameter window, then
name the elementary move from the critical value that crosses [0, 1].
"""
import logging
from collections import Counter
from typing import List, Optional, Tuple

from trigonal.core.config import settings
from trigonal.core.errors import TrigonalError
from trigonal.core.parallel import parallel_map
from trigonal.models.analysis import Family, MoveEvent, MoveKind, Snapshot, SweepResult
from trigonal.models.dessin import VertexKind
from trigonal.models.poly import POLE
from trigonal.services.curve_service import make_curve
from trigonal.services.dessin_service import build_dessin, combinatorial_sizes, is_simple, signature
from trigonal.services.jmap import lambda_critical_points

logger = logging.getLogger(__name__)

# critical values this close to [0, 1] at the end of a bisection explain the change
WALL_TOLERANCE = 1e-3
# j-values within this of 0 or 1 count as reaching a vertex; a monochrome
# crossing near a black vertex can sit at j ~ 4e-3
ENDPOINT_TOLERANCE = 1e-3


def family_curve(f: Family, a: complex):
    return make_curve(*f.member(a))


def snapshot(f: Family, a: complex, resolution: int, seed: Optional[int] = None) -> Snapshot:
    """Dessin summary at one parameter value; failures are flagged, not raised"""
    try:
        d = build_dessin(family_curve(f, a), resolution, seed)
    except TrigonalError as exc:
        logger.warning(f"Degenerate sample a={a}: {exc.code} ({exc.message})")
        return Snapshot(a=a, degenerate=True, reason=exc.code)
    profile = Counter(
        f"{v.kind.value}:{v.degree}" for v in d.vertices if v.in_dessin and v.kind != VertexKind.CROSS
    )
    return Snapshot(
        a=a,
        sizes=combinatorial_sizes(d),
        vertex_profile=dict(profile),
        monochrome=len(d.monochrome),
        simple=is_simple(d),
        signature=signature(d),
    )


def _snapshot_task(args: Tuple[Family, complex, int, Optional[int]]) -> Snapshot:
    return snapshot(*args)


def wall_distance(j) -> float:
    """Distance of a critical value to the segment [0, 1]"""
    if j is POLE:
        return float("inf")
    if 0.0 <= j.real <= 1.0:
        return abs(j.imag)
    return abs(j - (0.0 if j.real < 0 else 1.0))


def classify(f: Family, lo: Snapshot, hi: Snapshot) -> MoveEvent:
    """Name the move inside a narrow window from the critical values near [0, 1]"""
    mid = 0.5 * (lo.a + hi.a)
    changes = hi.changes_from(lo)
    try:
        points = lambda_critical_points(family_curve(f, mid))
    except TrigonalError:
        return MoveEvent(MoveKind.COMPOUND, (lo.a, hi.a), [], changes)

    near = [p for p in points if wall_distance(p.jvalue) <= WALL_TOLERANCE]
    kinds = set()
    for p in near:
        j = p.jvalue
        if abs(j) <= ENDPOINT_TOLERANCE:
            with_mono = lo.monochrome > 0 or hi.monochrome > 0
            kinds.add(MoveKind.MERGE_BLACK_MONOCHROME if with_mono else MoveKind.MERGE_BLACK)
        elif abs(j - 1) <= ENDPOINT_TOLERANCE:
            kinds.add(MoveKind.MERGE_WHITE)
        else:
            kinds.add(MoveKind.MONOCHROME_MODIFICATION)
    # conjugate critical points of a real family cross together and count as one move
    kind = kinds.pop() if len(kinds) == 1 else MoveKind.COMPOUND
    return MoveEvent(kind, (lo.a, hi.a), [p.x for p in near], changes)


def _locate(
    f: Family, lo: Snapshot, hi: Snapshot, resolution: int, seed: Optional[int], width: float, depth: int = 0
) -> List[MoveEvent]:
    if abs(hi.a - lo.a) <= width:
        return [classify(f, lo, hi)]
    mid = snapshot(f, 0.5 * (lo.a + hi.a), resolution, seed)
    if mid.degenerate:
        logger.debug(f"Bisection stopped at degenerate a={mid.a} (depth {depth})")
        event = classify(f, lo, hi)
        event.changes.append("degenerate")
        return [event]
    events: List[MoveEvent] = []
    if mid.key() != lo.key():
        events.extend(_locate(f, lo, mid, resolution, seed, width, depth + 1))
    if mid.key() != hi.key():
        events.extend(_locate(f, mid, hi, resolution, seed, width, depth + 1))
    return events


def sweep_family(
    f: Family,
    resolution: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    width: Optional[float] = None,
) -> SweepResult:
    """Snapshots along the family's samples and the moves between them"""
    resolution = settings.DEFAULT_RESOLUTION if resolution is None else resolution
    width = settings.BISECTION_WIDTH if width is None else width
    samples = f.samples()
    if len(samples) < 2:
        raise ValueError("a sweep needs at least two samples")

    snapshots = parallel_map(_snapshot_task, [(f, a, resolution, seed) for a in samples], workers)
    valid = [s for s in snapshots if not s.degenerate]
    events: List[MoveEvent] = []
    for lo, hi in zip(valid, valid[1:]):
        if lo.key() != hi.key():
            events.extend(_locate(f, lo, hi, resolution, seed, width))
    logger.info(
        f"Sweep finished: {len(snapshots)} samples ({len(snapshots) - len(valid)} degenerate), {len(events)} events"
    )
    return SweepResult(snapshots=snapshots, events=events)
