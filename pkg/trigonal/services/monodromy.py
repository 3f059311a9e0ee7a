# trigonal/services/monodromy.py
"""
Region sizes read off the branch data of the cross-ratio map, without the
traced embedding.

Each face of the cross-ratio graph is the convex set {|mu| < 1, Re mu < 1/2}
in one of the charts mu = lambda (RB), 1 - lambda (BG) or 1/lambda (RG),
with the face's pole at mu = 0. The components over a face are the orbits
of the loops around its branch values acting on the fiber over a base point
near the pole; an orbit of length k is a region of size 2k. A cheaper bound
enumerates the component degrees Riemann-Hurwitz allows.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np
from scipy.optimize import linear_sum_assignment

from trigonal.core.config import settings
from trigonal.core.errors import SizeGuard, TraceAmbiguity
from trigonal.models.curve import TrigonalCurve
from trigonal.models.poly import INFINITY, is_infinite
from trigonal.models.sphere import chordal_matrix
from trigonal.services.jmap import fiber, lambda_critical_points
from trigonal.services.tracing import Frame, link_frames

logger = logging.getLogger(__name__)

FACES = ("RB", "BG", "RG")
FACE_POLES: Dict[str, complex] = {"RB": 0j, "BG": 1 + 0j, "RG": INFINITY}
# critical values closer than this to the graph (in the face chart) lie on it
FACE_TOLERANCE = 1e-7
# loop disks take this share of the distance to their nearest obstacle
LOOP_FRACTION = 0.3
LOOP_SAMPLES = 48
MAX_SEGMENT_SAMPLES = 4000
FEASIBLE_MAX_DEGREE = 8


def to_chart(face: str, lam: complex) -> complex:
    if face == "RG":
        if is_infinite(lam):
            return 0j
        return INFINITY if lam == 0 else 1 / lam
    if is_infinite(lam):
        return INFINITY
    return lam if face == "RB" else 1 - lam


def from_chart(face: str, mu: complex) -> complex:
    if face == "RB":
        return mu
    if face == "BG":
        return 1 - mu
    return 1 / mu


def boundary_distance(mu: complex) -> float:
    """Distance from mu to the edge of the face chart; negative outside"""
    if is_infinite(mu):
        return -math.inf
    return min(1 - abs(mu), 0.5 - mu.real)


def face_of(lam: complex, tol: float = FACE_TOLERANCE) -> Optional[str]:
    """Face of the cross-ratio graph containing lambda; None on the graph"""
    for face in FACES:
        if boundary_distance(to_chart(face, lam)) > tol:
            return face
    return None


@dataclass
class BranchValue:
    mu: complex
    # local degrees of the critical points over this value
    ramification: List[int]


@dataclass
class FaceCover:
    face: str
    crosses: List[int]  # multiplicities of the points over the pole
    branch: List[BranchValue]
    orbits: List[int] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return sum(self.crosses)

    def sizes(self) -> List[int]:
        return sorted((2 * k for k in self.orbits), reverse=True)


def _pole_multiplicities(c: TrigonalCurve, face: str) -> List[int]:
    over = fiber(c, FACE_POLES[face])
    mults = [r.multiplicity for r in over.roots]
    if over.degree_deficit:
        mults.append(over.degree_deficit)
    return sorted(mults, reverse=True)


def face_covers(c: TrigonalCurve) -> List[FaceCover]:
    """Crosses and branch values of each face; critical values on the graph belong to no face"""
    covers = {face: FaceCover(face, _pole_multiplicities(c, face), []) for face in FACES}
    for p in lambda_critical_points(c):
        face = face_of(p.lam)
        if face is None:
            continue
        mu = to_chart(face, p.lam)
        if abs(mu) <= FACE_TOLERANCE:
            # a multiple cross, already counted over the pole
            continue
        cover = covers[face]
        for b in cover.branch:
            if abs(b.mu - mu) <= FACE_TOLERANCE * max(1.0, abs(mu)):
                b.ramification.append(p.ramification)
                break
        else:
            cover.branch.append(BranchValue(mu, [p.ramification]))
    return [covers[face] for face in FACES]


# Riemann-Hurwitz bound

def _set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def feasible_orbits(cover: FaceCover) -> Set[Tuple[int, ...]]:
    """
    Component degrees allowed over one face. A planar component of degree d
    with ramification r has 2 - d + r boundary circles, at least one and at
    most d; its degree is the sum of the crosses it contains.
    """
    if cover.degree > FEASIBLE_MAX_DEGREE:
        raise SizeGuard(
            f"feasible types are enumerated up to degree {FEASIBLE_MAX_DEGREE}",
            {"degree": cover.degree, "limit": FEASIBLE_MAX_DEGREE},
        )
    points = [e for b in cover.branch for e in b.ramification]
    found: Set[Tuple[int, ...]] = set()
    for groups in _set_partitions(cover.crosses):
        degrees = [sum(g) for g in groups]
        states = {tuple(sum(m - 1 for m in g) for g in groups)}
        for e in points:
            states = {
                s[:k] + (s[k] + e - 1,) + s[k + 1:]
                for s in states
                for k in range(len(groups))
                if e <= degrees[k] and s[k] + e - 1 <= 2 * degrees[k] - 2
            }
        if any(all(r >= d - 1 for d, r in zip(degrees, s)) for s in states):
            found.add(tuple(sorted(degrees, reverse=True)))
    return found


def feasible_types(c: TrigonalCurve) -> List[List[int]]:
    """Every combinatorial type compatible with the branch data, largest first"""
    per_face = [feasible_orbits(cover) for cover in face_covers(c)]
    types = {
        tuple(sorted((2 * k for orbits in combo for k in orbits), reverse=True))
        for combo in product(*per_face)
    }
    return [list(t) for t in sorted(types, reverse=True)]


# Monodromy

def _base_angle(values: Sequence[complex]) -> float:
    """Direction of the widest gap between the branch values, seen from the pole"""
    if not values:
        return 0.0
    angles = sorted(cmath.phase(v) for v in values)
    gaps = [((angles[(i + 1) % len(angles)] - a) % (2 * math.pi)) or 2 * math.pi for i, a in enumerate(angles)]
    i = int(np.argmax(gaps))
    return angles[i] + 0.5 * gaps[i]


class FaceMonodromy:
    """Loops inside one face chart and their lifts to the fiber"""

    def __init__(self, curve: TrigonalCurve, cover: FaceCover, min_step: Optional[float] = None,
                 seed: Optional[int] = None):
        self.curve = curve
        self.cover = cover
        self.min_step = settings.MIN_TRACE_STEP if min_step is None else min_step
        self.seed = seed
        self.bisections = 0

        values = [b.mu for b in cover.branch]
        self.radius: Dict[int, float] = {}
        for i, mu in enumerate(values):
            obstacles = [abs(mu - v) for j, v in enumerate(values) if j != i] + [abs(mu), boundary_distance(mu)]
            self.radius[i] = LOOP_FRACTION * min(obstacles)
        self.epsilon = LOOP_FRACTION * min([abs(v) for v in values] + [0.5])
        self.theta = _base_angle(values)
        smallest = min([self.epsilon] + list(self.radius.values()))
        self.step = 0.5 * smallest

    # paths

    @staticmethod
    def _arc(center: complex, radius: float, start: float, sweep: float) -> List[complex]:
        count = max(2, int(math.ceil(LOOP_SAMPLES * abs(sweep) / (2 * math.pi))))
        return [center + radius * cmath.exp(1j * (start + sweep * k / count)) for k in range(count + 1)]

    def _segment(self, a: complex, b: complex) -> List[complex]:
        count = min(MAX_SEGMENT_SAMPLES, max(1, int(math.ceil(abs(b - a) / self.step))))
        return [a + (b - a) * k / count for k in range(count + 1)]

    def _approach(self, index: int) -> List[complex]:
        """From the base point to the loop circle of one branch value, staying in the face"""
        target = self.cover.branch[index].mu
        u = target / abs(target)
        sweep = (cmath.phase(target) - self.theta) % (2 * math.pi)
        path = self._arc(0j, self.epsilon, self.theta, sweep)

        detours = []
        for j, b in enumerate(self.cover.branch):
            if j == index:
                continue
            # along the ray: real part is the distance, imaginary part the offset
            rel = b.mu / u
            r = self.radius[j]
            if abs(rel.imag) < r and self.epsilon < rel.real < abs(target):
                h = math.sqrt(r * r - rel.imag ** 2)
                detours.append((rel.real - h, rel.real + h, j))

        cursor = self.epsilon * u
        for t_in, t_out, j in sorted(detours):
            center = self.cover.branch[j].mu
            entry, leave = t_in * u, t_out * u
            path += self._segment(cursor, entry)[1:]
            a1 = cmath.phase(entry - center)
            turn = (cmath.phase(leave - center) - a1 + math.pi) % (2 * math.pi) - math.pi
            path += self._arc(center, self.radius[j], a1, turn)[1:]
            cursor = leave
        path += self._segment(cursor, (abs(target) - self.radius[index]) * u)[1:]
        return path

    def loop(self, index: Optional[int]) -> List[complex]:
        """Closed path from the base point around one branch value (None: around the pole)"""
        if index is None:
            return self._arc(0j, self.epsilon, self.theta, 2 * math.pi)
        approach = self._approach(index)
        center = self.cover.branch[index].mu
        circle = self._arc(center, self.radius[index], cmath.phase(approach[-1] - center), 2 * math.pi)
        return approach + circle[1:] + approach[::-1][1:]

    # lifting

    def _frame(self, mu: complex) -> Frame:
        lam = from_chart(self.cover.face, mu)
        points = np.asarray(fiber(self.curve, lam, seed=self.seed).points(), dtype=complex)
        return Frame(0.0, points, [None] * len(points))

    def permutation(self, path: List[complex]) -> np.ndarray:
        """Sheet i over the base point ends on sheet sigma[i] after following the path"""
        base = self._frame(path[0])
        current, current_mu = base, path[0]
        for target_mu in path[1:]:
            pending = [target_mu]
            while pending:
                mu = pending[-1]
                target = self._frame(mu)
                order, ok = link_frames(current, target)
                if ok:
                    current, current_mu = target.permuted(order), mu
                    pending.pop()
                    continue
                if abs(mu - current_mu) < self.min_step:
                    raise TraceAmbiguity(
                        f"sheets over face {self.cover.face} cannot be separated near mu = {current_mu:.6g}",
                        {"face": self.cover.face, "mu": [current_mu.real, current_mu.imag]},
                    )
                self.bisections += 1
                pending.append(0.5 * (current_mu + mu))
        cost = chordal_matrix(current.sphere, base.sphere)
        _, sigma = linear_sum_assignment(cost)
        return sigma

    def orbits(self) -> List[int]:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.curve.d))
        for index in [None] + list(range(len(self.cover.branch))):
            sigma = self.permutation(self.loop(index))
            graph.add_edges_from((i, int(s)) for i, s in enumerate(sigma))
        return sorted((len(comp) for comp in nx.connected_components(graph)), reverse=True)


def monodromy_covers(c: TrigonalCurve, seed: Optional[int] = None) -> List[FaceCover]:
    covers = face_covers(c)
    for cover in covers:
        monodromy = FaceMonodromy(c, cover, seed=seed)
        cover.orbits = monodromy.orbits()
        logger.debug(
            f"Face {cover.face}: crosses {cover.crosses}, {len(cover.branch)} branch value(s), "
            f"orbits {cover.orbits} ({monodromy.bisections} bisection(s))"
        )
    return covers


def monodromy_type(c: TrigonalCurve, seed: Optional[int] = None) -> List[int]:
    """Region sizes from the monodromy over the three faces, largest first"""
    return sorted((s for cover in monodromy_covers(c, seed) for s in cover.sizes()), reverse=True)
