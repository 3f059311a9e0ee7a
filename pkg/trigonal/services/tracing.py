# trigonal/services/tracing.py
"""
Strand tracing along one arc of the cross-ratio graph (or of its real
extension): solve the fiber over a grid of parameter values, link
consecutive root sets by minimal-cost assignment on chordal distance and
bisect wherever the link is ambiguous.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from trigonal.core.config import settings
from trigonal.core.errors import InconsistentEmbedding, TraceAmbiguity
from trigonal.models.curve import TrigonalCurve
from trigonal.models.sphere import chordal_matrix, to_sphere
from trigonal.services.cross_ratio_graph import LambdaEdge
from trigonal.services.jmap import fiber

logger = logging.getLogger(__name__)

END_REFINEMENT = (1e-6, 1e-5, 1e-4, 1e-3)
STOP_REFINEMENT = (1e-6, 1e-4, 1e-2)
COINCIDENT = 1e-7


@dataclass(frozen=True)
class VertexSlot:
    """A vertex sitting in the fiber: id, position and how many strands it absorbs"""

    vertex_id: int
    x: complex
    multiplicity: int


@dataclass
class Frame:
    t: float
    points: np.ndarray  # complex, one entry per strand
    ids: List[Optional[int]]
    sphere: np.ndarray = field(init=False)

    def __post_init__(self):
        self.sphere = to_sphere(self.points)

    def permuted(self, order: np.ndarray) -> "Frame":
        return Frame(self.t, self.points[order], [self.ids[i] for i in order])


@dataclass
class TracedSegment:
    start: int
    end: int
    points: List[complex]
    lam_edge: str
    band: str


def _expand(slots: Sequence[VertexSlot]) -> Tuple[np.ndarray, List[Optional[int]]]:
    points: List[complex] = []
    ids: List[Optional[int]] = []
    for slot in slots:
        points.extend([slot.x] * slot.multiplicity)
        ids.extend([slot.vertex_id] * slot.multiplicity)
    return np.asarray(points, dtype=complex), ids


def parameter_grid(resolution: int, stops: Sequence[float] = ()) -> List[float]:
    ts = set(np.linspace(0.0, 1.0, resolution + 1).tolist())
    for eps in END_REFINEMENT:
        ts.update((eps, 1.0 - eps))
    for t_c in stops:
        ts.add(t_c)
        for eps in STOP_REFINEMENT:
            for t in (t_c - eps, t_c + eps):
                if 0.0 < t < 1.0:
                    ts.add(t)
    return sorted(ts)


def link_frames(a: Frame, b: Frame) -> Tuple[np.ndarray, bool]:
    """
    Minimal-cost matching of two consecutive root sets. The link is trusted
    when no strand moves more than half the smallest gap between strands.
    """
    cost = chordal_matrix(a.sphere, b.sphere)
    _, col = linear_sum_assignment(cost)
    displacement = float(cost[np.arange(len(col)), col].max()) if len(col) else 0.0

    da = chordal_matrix(a.sphere, a.sphere)
    db = chordal_matrix(b.sphere, b.sphere)[np.ix_(col, col)]
    # strands meeting at a shared vertex on either side do not constrain the step
    distinct = (da > COINCIDENT) & (db > COINCIDENT)
    if not distinct.any():
        return col, True
    gap = float(min(da[distinct].min(), db[distinct].min()))
    return col, displacement <= 0.5 * gap


class EdgeTracer:
    """Traces the d strands lying over one lambda-arc"""

    def __init__(
        self,
        curve: TrigonalCurve,
        edge: LambdaEdge,
        start: Sequence[VertexSlot],
        end: Sequence[VertexSlot],
        stops: Optional[Dict[float, List[VertexSlot]]] = None,
        min_step: Optional[float] = None,
        seed: Optional[int] = None,
    ):
        self.curve = curve
        self.edge = edge
        self.start = list(start)
        self.end = list(end)
        self.stops = stops or {}
        self.min_step = settings.MIN_TRACE_STEP if min_step is None else min_step
        self.seed = seed
        self.bisections = 0

        for label, slots in (("start", self.start), ("end", self.end)):
            total = sum(s.multiplicity for s in slots)
            if total != curve.d:
                raise InconsistentEmbedding(
                    f"{edge.key}: {label} vertices absorb {total} strands, expected {curve.d}",
                    {"edge": edge.key},
                )

    def _solved(self, t: float) -> Frame:
        points = np.asarray(fiber(self.curve, self.edge.lam(t), seed=self.seed).points(), dtype=complex)
        return Frame(t, points, [None] * len(points))

    def _frame(self, t: float) -> Frame:
        if t == 0.0:
            return Frame(0.0, *_expand(self.start))
        if t == 1.0:
            return Frame(1.0, *_expand(self.end))
        frame = self._solved(t)
        if t in self.stops:
            frame = self._snap(frame, self.stops[t])
        return frame

    def _snap(self, frame: Frame, slots: List[VertexSlot]) -> Frame:
        points = frame.points.copy()
        ids = list(frame.ids)
        taken = np.zeros(len(points), dtype=bool)
        for slot in slots:
            dist = np.linalg.norm(frame.sphere - to_sphere([slot.x])[0], axis=1)
            dist[taken] = np.inf
            for i in np.argsort(dist)[: slot.multiplicity]:
                points[i] = slot.x
                ids[i] = slot.vertex_id
                taken[i] = True
        return Frame(frame.t, points, ids)

    def trace(self, resolution: int) -> List[TracedSegment]:
        grid = parameter_grid(resolution, list(self.stops))
        frames = [self._frame(grid[0])]
        for t in grid[1:]:
            pending = [self._frame(t)]
            while pending:
                current, target = frames[-1], pending[-1]
                order, ok = link_frames(current, target)
                if ok:
                    frames.append(target.permuted(order))
                    pending.pop()
                    continue
                if target.t - current.t < self.min_step:
                    raise TraceAmbiguity(
                        f"strands over {self.edge.key} cannot be separated near t = {current.t:.12g}",
                        {"edge": self.edge.key, "t": current.t},
                    )
                self.bisections += 1
                pending.append(self._frame(0.5 * (current.t + target.t)))
        if self.bisections:
            logger.debug(f"{self.edge.key}: {self.bisections} bisection(s)")
        return self._segments(frames)

    def _segments(self, frames: List[Frame]) -> List[TracedSegment]:
        segments: List[TracedSegment] = []
        for k in range(len(frames[0].points)):
            start = frames[0].ids[k]
            points = [complex(frames[0].points[k])]
            for frame in frames[1:]:
                points.append(complex(frame.points[k]))
                vid = frame.ids[k]
                if vid is None:
                    continue
                segments.append(TracedSegment(start, vid, points, self.edge.key, self.edge.band))
                start, points = vid, [complex(frame.points[k])]
        return segments


def trace_edge(
    curve: TrigonalCurve,
    edge: LambdaEdge,
    start: Sequence[VertexSlot],
    end: Sequence[VertexSlot],
    stops: Optional[Dict[float, List[VertexSlot]]] = None,
    resolution: Optional[int] = None,
    seed: Optional[int] = None,
) -> List[TracedSegment]:
    resolution = settings.DEFAULT_RESOLUTION if resolution is None else resolution
    return EdgeTracer(curve, edge, start, end, stops, seed=seed).trace(resolution)
