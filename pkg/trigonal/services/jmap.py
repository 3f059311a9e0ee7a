# trigonal/services/jmap.py
"""
The cross-ratio map lambda = P/Q of a curve, its j-invariant, level sets
and the colored special points (dessin vertices, crosses, monochrome points).
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from trigonal.core.config import settings
from trigonal.models.curve import SingularFibers, TrigonalCurve
from trigonal.models.poly import INFINITY, POLE, JValue, Poly, RationalMap, RootSet, is_infinite
from trigonal.services.algebra import normalize, rational_derivative_numerator, solve, solve_on_sphere
from trigonal.services.cross_ratio_graph import (
    BLACK_VALUES,
    WHITE_VALUES,
    j_of_lambda,
)
from trigonal.services.curve_service import singular_fibers

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossRatioMap:
    """lambda = P / Q"""

    base: RationalMap

    def __call__(self, x: complex) -> complex:
        P, Q = self.base.num, self.base.den
        if is_infinite(x):
            if P.degree > Q.degree:
                return INFINITY
            if P.degree < Q.degree:
                return 0j
            return P.leading / Q.leading
        q = Q(x)
        if q == 0:
            return INFINITY
        return complex(P(x) / q)

    @property
    def degree(self) -> int:
        return self.base.degree


@dataclass(frozen=True)
class CriticalPoint:
    x: complex
    jvalue: JValue
    lam: complex
    # local degree of the cross-ratio map at x
    ramification: int
    kind: str = "lambda"


@dataclass(frozen=True)
class MonochromePoint:
    x: complex
    jvalue: float
    lam: complex
    ramification: int


@dataclass
class SpecialPoints:
    black: Dict[str, RootSet]
    white: Dict[str, RootSet]
    crosses: SingularFibers
    monochrome: List[MonochromePoint] = field(default_factory=list)

    @property
    def black_cyan(self) -> RootSet:
        return self.black["cyan"]

    @property
    def black_yellow(self) -> RootSet:
        return self.black["yellow"]

    @property
    def white_red(self) -> RootSet:
        return self.white["red"]

    @property
    def white_blue(self) -> RootSet:
        return self.white["blue"]

    @property
    def white_green(self) -> RootSet:
        return self.white["green"]

    @property
    def points_at_infinity(self) -> Dict[str, int]:
        flags = {color: s.degree_deficit for color, s in {**self.black, **self.white}.items()}
        flags.update({label: s.degree_deficit for label, s in self.crosses.by_label().items()})
        return flags


def cross_ratio(c: TrigonalCurve) -> CrossRatioMap:
    return CrossRatioMap(RationalMap(c.P, c.Q))


def j_eval(c: TrigonalCurve, x: complex, tol: float = 1e-12) -> JValue:
    """j_C(x); POLE when the cross ratio is 0, 1 or infinity"""
    lam = cross_ratio(c)(x)
    return j_of_lambda(lam, tol)


def j_rational(c: TrigonalCurve) -> RationalMap:
    P, Q = c.P, c.Q
    D = P - Q
    num = (P * P - P * Q + Q * Q) ** 3 * 4.0
    den = (P * P) * (Q * Q) * (D * D) * 27.0
    return RationalMap(num, den)


def level_set(c: TrigonalCurve, r: float) -> RootSet:
    """Roots of 4(P^2 - PQ + Q^2)^3 - 27 r P^2 Q^2 (P - Q)^2 on the sphere (nominal degree 6n)"""
    f = j_rational(c)
    poly = f.num - f.den * r
    return solve_on_sphere(poly, 6 * c.n)


def fiber_poly(c: TrigonalCurve, lam: complex) -> Poly:
    """Polynomial whose roots are the x with cross ratio lam, scaled for conditioning"""
    if is_infinite(lam):
        return c.Q
    if abs(lam) > 1.0:
        return c.P * (1.0 / lam) - c.Q
    return c.P - c.Q * lam


def fiber(c: TrigonalCurve, lam: complex, seed: Optional[int] = None) -> RootSet:
    """The d points over a cross-ratio value, with the deficit at infinity"""
    return solve_on_sphere(fiber_poly(c, lam), c.d, seed=seed)


def lambda_critical_points(c: TrigonalCurve) -> List[CriticalPoint]:
    """Ramification points of the cross-ratio map, infinity included"""
    lam_map = cross_ratio(c)
    N = normalize(rational_derivative_numerator(lam_map.base))
    points: List[CriticalPoint] = []
    finite_total = 0
    if N.degree > 0:
        for root in solve(N).roots:
            finite_total += root.multiplicity
            lam = lam_map(root.value)
            points.append(CriticalPoint(root.value, j_of_lambda(lam), lam, root.multiplicity + 1))
    elif N.is_zero:
        return points
    at_infinity = 2 * c.d - 2 - finite_total
    if at_infinity > 0:
        lam = lam_map(INFINITY)
        points.append(CriticalPoint(INFINITY, j_of_lambda(lam), lam, at_infinity + 1))
    return points


def _is_monochrome(j: JValue, tol: float) -> bool:
    if j is POLE:
        return False
    delta = tol
    return abs(j.imag) <= tol * (1 + abs(j)) and delta < j.real < 1 - delta


def _is_real_interior(j: JValue, tol: float) -> bool:
    """Real critical value away from 0 and 1 (any sign, finite)"""
    if j is POLE:
        return False
    return abs(j.imag) <= tol * (1 + abs(j)) and abs(j.real) > tol and abs(j.real - 1) > tol


def special_points(c: TrigonalCurve) -> SpecialPoints:
    """Vertex sets from the linear conditions P - lambda Q = 0, crosses and monochrome points"""
    black = {color: fiber(c, value) for color, value in BLACK_VALUES.items()}
    white = {color: fiber(c, value) for color, value in WHITE_VALUES.items()}
    crosses = singular_fibers(c, nominal=c.d)
    tol = settings.MONOCHROME_TOLERANCE
    monochrome = [
        MonochromePoint(p.x, float(p.jvalue.real), p.lam, p.ramification)
        for p in lambda_critical_points(c)
        if _is_monochrome(p.jvalue, tol)
    ]
    if monochrome:
        logger.debug(f"{len(monochrome)} monochrome point(s) found")
    return SpecialPoints(black=black, white=white, crosses=crosses, monochrome=monochrome)


def real_critical_points(c: TrigonalCurve) -> List[MonochromePoint]:
    """Critical points of lambda whose j-value is real, finite and not 0 or 1"""
    tol = settings.MONOCHROME_TOLERANCE
    return [
        MonochromePoint(p.x, float(p.jvalue.real), p.lam, p.ramification)
        for p in lambda_critical_points(c)
        if _is_real_interior(p.jvalue, tol)
    ]


def critical_points(c: TrigonalCurve) -> List[CriticalPoint]:
    """
    Finite critical points of j_C with their critical values: the ramification
    points of lambda, black vertices (j = 0), white vertices (j = 1) and
    crosses (POLE). Points already listed as a vertex or cross are not repeated.
    """
    points: List[CriticalPoint] = []
    seen: List[complex] = []

    def add(point: CriticalPoint) -> None:
        if is_infinite(point.x):
            return
        scale = 1.0 + abs(point.x)
        if any(abs(point.x - s) <= settings.CLUSTER_TOLERANCE * 100 * scale for s in seen):
            return
        seen.append(point.x)
        points.append(point)

    for color, value in BLACK_VALUES.items():
        for root in fiber(c, value).roots:
            add(CriticalPoint(root.value, 0j, value, root.multiplicity, kind="black"))
    for color, value in WHITE_VALUES.items():
        for root in fiber(c, value).roots:
            add(CriticalPoint(root.value, 1 + 0j, value, root.multiplicity, kind="white"))
    for label, fibers in singular_fibers(c, nominal=c.d).by_label().items():
        for root in fibers.roots:
            add(CriticalPoint(root.value, POLE, cross_ratio(c)(root.value), root.multiplicity, kind="cross"))
    for point in lambda_critical_points(c):
        add(point)
    return points
