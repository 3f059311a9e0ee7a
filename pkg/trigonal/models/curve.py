# trigonal/models/curve.py
"""
Completely reducible trigonal curve (y - y1)(y - y2)(y - y3) = 0 and its
singular fibers.
"""
from dataclasses import dataclass
from typing import Dict

from trigonal.models.poly import Poly, RootSet

PAIR_LABELS = ("12", "23", "13")


@dataclass(frozen=True)
class TrigonalCurve:
    y1: Poly
    y2: Poly
    y3: Poly
    P: Poly
    Q: Poly
    n: int
    # degree of the cross ratio P/Q; smaller than n when leading terms cancel
    d: int

    def components(self):
        return (self.y1, self.y2, self.y3)

    def to_pairs(self) -> Dict[str, list]:
        return {"y1": self.y1.to_pairs(), "y2": self.y2.to_pairs(), "y3": self.y3.to_pairs()}


@dataclass(frozen=True)
class SingularFibers:
    """x-positions where two components meet; the deficit is the fiber at infinity"""

    s12: RootSet
    s23: RootSet
    s13: RootSet

    def by_label(self) -> Dict[str, RootSet]:
        return {"12": self.s12, "23": self.s23, "13": self.s13}

    @property
    def infinity_flags(self) -> Dict[str, bool]:
        return {label: s.degree_deficit > 0 for label, s in self.by_label().items()}
