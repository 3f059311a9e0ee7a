# trigonal/services/curve_service.py
"""
Curve construction, validation and singular fibers.
"""
import logging
from typing import Optional

import numpy as np

from trigonal.core.errors import DegenerateComponents, TripleIntersection, ZeroDegree
from trigonal.models.curve import SingularFibers, TrigonalCurve
from trigonal.models.poly import Poly
from trigonal.services.algebra import common_roots, compose_affine, normalize, solve_on_sphere

logger = logging.getLogger(__name__)


def make_curve(y1: Poly, y2: Poly, y3: Poly) -> TrigonalCurve:
    """
    Validate three sections and build the curve.
    Raises DegenerateComponents, ZeroDegree or TripleIntersection.
    """
    y1, y2, y3 = normalize(y1), normalize(y2), normalize(y3)
    P = y1 - y3
    Q = y2 - y3
    for label, diff in (("y1-y3", P), ("y2-y3", Q), ("y1-y2", P - Q)):
        if diff.is_zero:
            raise DegenerateComponents(f"components are identical ({label} = 0)", {"pair": label})

    n = max(y1.degree, y2.degree, y3.degree)
    if n <= 0:
        raise ZeroDegree("all three components are constant", {"n": n})
    d = max(P.degree, Q.degree)
    if d <= 0:
        raise ZeroDegree("the cross ratio of the components is constant", {"n": n, "d": d})

    if P.degree > 0 and Q.degree > 0:
        shared = common_roots(P, Q)
        if shared:
            raise TripleIntersection(
                "all three components meet over one point",
                {"x": [[z.real, z.imag] for z in shared]},
            )
    if d < n:
        logger.warning(f"Leading terms cancel: cross ratio has degree {d} < n = {n}")
    return TrigonalCurve(y1=y1, y2=y2, y3=y3, P=P, Q=Q, n=n, d=d)


def maximal_degree(c: TrigonalCurve) -> int:
    return c.n


def singular_fibers(c: TrigonalCurve, nominal: Optional[int] = None) -> SingularFibers:
    """Roots of P - Q, Q and P; a difference of degree below nominal meets at infinity"""
    nominal = c.n if nominal is None else nominal
    return SingularFibers(
        s12=solve_on_sphere(c.P - c.Q, nominal),
        s23=solve_on_sphere(c.Q, nominal),
        s13=solve_on_sphere(c.P, nominal),
    )


def affine_pullback(c: TrigonalCurve, alpha: complex, beta: complex) -> TrigonalCurve:
    """The curve with x replaced by alpha * x + beta in every component"""
    return make_curve(*(compose_affine(y, alpha, beta) for y in c.components()))


def random_curve(n: int, seed: int, real: bool = False) -> TrigonalCurve:
    """A generic curve of maximal degree n with coefficients in the unit box"""
    rng = np.random.default_rng(seed)
    while True:
        comps = []
        for _ in range(3):
            coeffs = rng.uniform(-1, 1, n + 1)
            if not real:
                coeffs = coeffs + 1j * rng.uniform(-1, 1, n + 1)
            comps.append(Poly(tuple(coeffs)))
        try:
            return make_curve(*comps)
        except (TripleIntersection, DegenerateComponents, ZeroDegree):
            continue
