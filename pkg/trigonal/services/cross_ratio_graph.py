# trigonal/services/cross_ratio_graph.py
"""
The fixed degree-6 map j = 4(l^2 - l + 1)^3 / (27 l^2 (l - 1)^2) on the
lambda-sphere and the arcs of its real preimage.

The six arcs over [0, 1] form the cross-ratio graph (two black vertices
e^{+-i pi/3}, three white vertices -1, 1/2, 2). Six more arcs run over
(1, inf) from the white vertices to the poles, and six over (-inf, 0) from
the black vertices to the poles. Every arc is parametrized by t in [0, 1]
from its start vertex to its end vertex.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from scipy.optimize import brentq

from trigonal.models.poly import INFINITY, POLE, JValue, is_infinite

OMEGA_PLUS = cmath.exp(1j * math.pi / 3)
OMEGA_MINUS = cmath.exp(-1j * math.pi / 3)

BLACK_VALUES: Dict[str, complex] = {"cyan": OMEGA_PLUS, "yellow": OMEGA_MINUS}
WHITE_VALUES: Dict[str, complex] = {"red": -1.0 + 0j, "blue": 0.5 + 0j, "green": 2.0 + 0j}
# cross-ratio value at a singular fiber of each component pair
POLE_VALUES: Dict[str, complex] = {"13": 0j, "12": 1.0 + 0j, "23": INFINITY}

BAND_UNIT = "unit"      # j in [0, 1]
BAND_ABOVE = "above"    # j in [1, inf]
BAND_BELOW = "below"    # j in [-inf, 0]


def j_of_lambda(lam: complex, tol: float = 1e-12) -> JValue:
    """j-invariant of the cross ratio; POLE for lambda in {0, 1, inf}"""
    if is_infinite(lam) or abs(lam) > 1.0 / tol:
        return POLE
    if abs(lam) <= tol or abs(lam - 1) <= tol:
        return POLE
    return 4 * (lam * lam - lam + 1) ** 3 / (27 * lam * lam * (lam - 1) ** 2)


def lambda_orbit(lam: complex) -> List[complex]:
    """The six cross ratios of the same unordered quadruple"""
    return [mobius(k, lam) for k in range(6)]


def mobius(k: int, lam: complex) -> complex:
    """The anharmonic group: l, 1-l, 1/l, 1/(1-l), 1-1/l, l/(l-1)"""
    if is_infinite(lam):
        return (INFINITY, INFINITY, 0j, 0j, 1 + 0j, 1 + 0j)[k]
    if k == 0:
        return lam
    if k == 1:
        return 1 - lam
    if k == 2:
        return INFINITY if lam == 0 else 1 / lam
    if k == 3:
        return INFINITY if lam == 1 else 1 / (1 - lam)
    if k == 4:
        return INFINITY if lam == 0 else 1 - 1 / lam
    if k == 5:
        return INFINITY if lam == 1 else lam / (lam - 1)
    raise ValueError(f"no anharmonic map with index {k}")


def _unit_cos(t: float) -> float:
    """cos(theta) of the unit-circle point with j = t, theta in [pi/3, pi]"""
    if t <= 0.0:
        return 0.5
    if t >= 1.0:
        return -1.0
    return brentq(lambda c: 2 * (1 - 2 * c) ** 3 - 27 * t * (1 - c), -1.0, 0.5, xtol=1e-15)


def _above_real(t: float) -> float:
    """Real lambda in [1/2, 1] with j = 1/(1-t)"""
    if t <= 0.0:
        return 0.5
    if t >= 1.0:
        return 1.0
    return brentq(
        lambda s: 4 * (1 - t) * (s * s - s + 1) ** 3 - 27 * s * s * (s - 1) ** 2, 0.5, 1.0, xtol=1e-15
    )


def _below_cos(t: float) -> float:
    """cos(phi) of the unit-circle point with j = -t/(1-t), phi in [0, pi/3]"""
    if t <= 0.0:
        return 0.5
    if t >= 1.0:
        return 1.0
    return brentq(lambda c: 2 * (1 - 2 * c) ** 3 * (1 - t) + 27 * t * (1 - c), 0.5, 1.0, xtol=1e-15)


def band_base(band: str, t: float) -> complex:
    if band == BAND_UNIT:
        c = _unit_cos(t)
        return complex(c, math.sqrt(max(0.0, 1 - c * c)))
    if band == BAND_ABOVE:
        return complex(_above_real(t), 0.0)
    c = _below_cos(t)
    return complex(c, math.sqrt(max(0.0, 1 - c * c)))


def r_of_t(band: str, t: float) -> float:
    if band == BAND_UNIT:
        return t
    if band == BAND_ABOVE:
        return math.inf if t >= 1.0 else 1.0 / (1.0 - t)
    return -math.inf if t >= 1.0 else -t / (1.0 - t)


def t_of_r(band: str, r: float) -> float:
    if band == BAND_UNIT:
        return r
    if band == BAND_ABOVE:
        return 1.0 - 1.0 / r
    return r / (r - 1.0)


def band_of(r: float) -> str:
    if 0.0 <= r <= 1.0:
        return BAND_UNIT
    return BAND_ABOVE if r > 1.0 else BAND_BELOW


@dataclass(frozen=True)
class LambdaEdge:
    """One arc of the real preimage of j in the lambda-sphere"""

    key: str
    band: str
    start_kind: str
    start_label: str
    end_kind: str
    end_label: str
    transform: int
    conjugate: bool

    def lam(self, t: float) -> complex:
        base = band_base(self.band, t)
        if self.conjugate:
            base = base.conjugate()
        return mobius(self.transform, base)

    def r(self, t: float) -> float:
        return r_of_t(self.band, t)

    @property
    def in_dessin(self) -> bool:
        return self.band == BAND_UNIT


def _edge(start_kind, start_label, end_kind, end_label, band, transform, conjugate) -> LambdaEdge:
    return LambdaEdge(
        key=f"{start_label}-{end_label}",
        band=band,
        start_kind=start_kind,
        start_label=start_label,
        end_kind=end_kind,
        end_label=end_label,
        transform=transform,
        conjugate=conjugate,
    )


DESSIN_EDGES: Tuple[LambdaEdge, ...] = (
    _edge("black", "cyan", "white", "red", BAND_UNIT, 0, False),
    _edge("black", "yellow", "white", "red", BAND_UNIT, 0, True),
    _edge("black", "cyan", "white", "green", BAND_UNIT, 1, True),
    _edge("black", "yellow", "white", "green", BAND_UNIT, 1, False),
    _edge("black", "cyan", "white", "blue", BAND_UNIT, 5, True),
    _edge("black", "yellow", "white", "blue", BAND_UNIT, 5, False),
)

ABOVE_EDGES: Tuple[LambdaEdge, ...] = (
    _edge("white", "blue", "pole", "12", BAND_ABOVE, 0, False),
    _edge("white", "blue", "pole", "13", BAND_ABOVE, 1, False),
    _edge("white", "green", "pole", "12", BAND_ABOVE, 2, False),
    _edge("white", "green", "pole", "23", BAND_ABOVE, 3, False),
    _edge("white", "red", "pole", "13", BAND_ABOVE, 4, False),
    _edge("white", "red", "pole", "23", BAND_ABOVE, 5, False),
)

BELOW_EDGES: Tuple[LambdaEdge, ...] = (
    _edge("black", "cyan", "pole", "12", BAND_BELOW, 0, False),
    _edge("black", "yellow", "pole", "12", BAND_BELOW, 0, True),
    _edge("black", "cyan", "pole", "13", BAND_BELOW, 1, True),
    _edge("black", "yellow", "pole", "13", BAND_BELOW, 1, False),
    _edge("black", "cyan", "pole", "23", BAND_BELOW, 5, True),
    _edge("black", "yellow", "pole", "23", BAND_BELOW, 5, False),
)

ALL_EDGES: Tuple[LambdaEdge, ...] = DESSIN_EDGES + ABOVE_EDGES + BELOW_EDGES


def sphere_distance(a: complex, b: complex) -> float:
    """Chordal distance on the lambda-sphere"""
    if is_infinite(a) and is_infinite(b):
        return 0.0
    if is_infinite(a):
        return 2.0 / math.sqrt(1 + abs(b) ** 2)
    if is_infinite(b):
        return 2.0 / math.sqrt(1 + abs(a) ** 2)
    return 2 * abs(a - b) / math.sqrt((1 + abs(a) ** 2) * (1 + abs(b) ** 2))


def locate_on_edges(lam: complex, r: float) -> Optional[Tuple[LambdaEdge, float]]:
    """Arc and parameter of a cross ratio whose j-value r is real and not 0, 1 or inf"""
    band = band_of(r)
    t = t_of_r(band, r)
    if not 0.0 < t < 1.0:
        return None
    candidates = [e for e in ALL_EDGES if e.band == band]
    best = min(candidates, key=lambda e: sphere_distance(e.lam(t), lam))
    return best, t


def triple_shape(z1: complex, z2: complex, z3: complex) -> Dict[str, object]:
    """
    Shape of three distinct points read off the real value of their j-invariant:
    j >= 1 means collinear, j <= 1 means isosceles, otherwise generic.
    """
    lam = (z1 - z3) / (z2 - z3)
    j = j_of_lambda(lam)
    if j is POLE:
        raise ValueError("points must be distinct")
    shape: Dict[str, object] = {"j": j}
    if abs(j.imag) > 1e-9 * (1 + abs(j)):
        shape["shape"] = "generic"
        return shape
    pts = sorted([z1, z2, z3], key=lambda z: (z.real, z.imag))
    if j.real >= 1 - 1e-12:
        a, b = abs(pts[1] - pts[0]), abs(pts[2] - pts[1])
        shape["shape"] = "collinear"
        shape["ratio"] = min(a, b) / max(a, b)
        return shape
    # apex = the point equidistant from the other two
    for i in range(3):
        p, q, s = (z1, z2, z3)[i], (z1, z2, z3)[(i + 1) % 3], (z1, z2, z3)[(i + 2) % 3]
        if abs(abs(q - p) - abs(s - p)) <= 1e-9 * (abs(q - p) + abs(s - p)):
            angle = abs(cmath.phase((s - p) / (q - p)))
            shape["shape"] = "isosceles"
            shape["apex_angle"] = angle
            return shape
    shape["shape"] = "generic"
    return shape
