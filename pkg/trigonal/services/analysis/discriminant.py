# trigonal/services/analysis/discriminant.py
"""
Discriminant locus of a family: parameter values where a critical value of
the cross-ratio part of j lands on [0, 1].
"""
import logging
from typing import Iterable, List, Optional, Tuple

from trigonal.core.errors import TrigonalError
from trigonal.core.parallel import parallel_map
from trigonal.models.analysis import Family, LocusPoint
from trigonal.models.poly import POLE
from trigonal.services.analysis.deformation import family_curve, wall_distance
from trigonal.services.jmap import lambda_critical_points

logger = logging.getLogger(__name__)

LOCUS_TOLERANCE = 1e-2


def locus_point(f: Family, a: complex, tolerance: float = LOCUS_TOLERANCE) -> LocusPoint:
    try:
        points = lambda_critical_points(family_curve(f, a))
    except TrigonalError as exc:
        logger.debug(f"a={a} is degenerate: {exc.code}")
        return LocusPoint(a=a, flagged=True, degenerate=True)
    values = [None if p.jvalue is POLE else complex(p.jvalue) for p in points]
    flagged = any(wall_distance(p.jvalue) <= tolerance for p in points)
    return LocusPoint(a=a, flagged=flagged, critical_points=[p.x for p in points], critical_values=values)


def _locus_task(args: Tuple[Family, complex, float]) -> LocusPoint:
    return locus_point(*args)


def discriminant_locus(
    f: Family,
    grid: Optional[Iterable[complex]] = None,
    tolerance: float = LOCUS_TOLERANCE,
    workers: Optional[int] = None,
) -> List[LocusPoint]:
    """One point per grid value; flagged where a critical value sits on [0, 1] within tolerance"""
    values = list(f.grid.points() if grid is None else grid)
    if not values:
        raise ValueError("the parameter grid is empty")
    cloud = parallel_map(_locus_task, [(f, a, tolerance) for a in values], workers)
    logger.info(f"Discriminant locus: {sum(p.flagged for p in cloud)} of {len(cloud)} samples flagged")
    return cloud


def flagged_values(cloud: List[LocusPoint]) -> List[complex]:
    return [p.a for p in cloud if p.flagged]
