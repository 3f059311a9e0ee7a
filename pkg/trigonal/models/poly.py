# trigonal/models/poly.py
"""
Polynomial value types: Poly, RationalMap, RootSet and the pole marker.
"""
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npoly

INFINITY = complex(math.inf, 0.0)


def is_infinite(z: complex) -> bool:
    return math.isinf(z.real) or math.isinf(z.imag)


class PoleMarker:
    """Symbolic j = infinity (cross ratio in {0, 1, infinity})"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "POLE"

    def __reduce__(self):
        return (PoleMarker, ())


POLE = PoleMarker()

JValue = Union[complex, PoleMarker]


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial with complex coefficients, ascending powers"""

    coeffs: Tuple[complex, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: Union[complex, float, int]) -> "Poly":
        return cls(tuple(coeffs))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0.0, 1.0))

    @classmethod
    def constant(cls, value: complex) -> "Poly":
        return cls((value,))

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return -1

    @property
    def is_zero(self) -> bool:
        return self.degree < 0

    @property
    def leading(self) -> complex:
        return self.coeffs[self.degree] if self.degree >= 0 else 0j

    @property
    def array(self) -> np.ndarray:
        if not self.coeffs:
            return np.zeros(1, dtype=complex)
        return np.asarray(self.coeffs, dtype=complex)

    def __call__(self, z):
        return npoly.polyval(z, self.array)

    def abs_bound(self, radius):
        """Value of the absolute-coefficient polynomial at |z|; scales residuals"""
        return npoly.polyval(radius, np.abs(self.array))

    def __add__(self, other: "Poly") -> "Poly":
        from trigonal.services.algebra import arith
        return arith(self, other, "add")

    def __sub__(self, other: "Poly") -> "Poly":
        from trigonal.services.algebra import arith
        return arith(self, other, "sub")

    def __mul__(self, other: Union["Poly", complex, float, int]) -> "Poly":
        from trigonal.services.algebra import arith
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return arith(self, other, "mul")

    __rmul__ = __mul__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __pow__(self, k: int) -> "Poly":
        result = Poly.constant(1.0)
        for _ in range(k):
            result = result * self
        return result

    def to_pairs(self) -> List[List[float]]:
        return [[c.real, c.imag] for c in self.coeffs[: self.degree + 1]]

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs[: self.degree + 1]):
            if c == 0:
                continue
            coeff = f"{c.real:g}" if c.imag == 0 else f"({c.real:g}{c.imag:+g}j)"
            terms.append(coeff if i == 0 else f"{coeff}*x^{i}")
        return "Poly(" + (" + ".join(terms) or "0") + ")"


@dataclass(frozen=True)
class RationalMap:
    """Quotient num/den of two polynomials"""

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero:
            from trigonal.core.errors import InvalidPolynomial
            raise InvalidPolynomial("rational map with zero denominator")

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __call__(self, z):
        return self.num(z) / self.den(z)


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int = 1


@dataclass(frozen=True)
class RootSet:
    """Solutions of a polynomial equation on the Riemann sphere"""

    roots: Tuple[Root, ...] = field(default_factory=tuple)
    degree_deficit: int = 0

    @property
    def total(self) -> int:
        return sum(r.multiplicity for r in self.roots) + self.degree_deficit

    @property
    def values(self) -> List[complex]:
        return [r.value for r in self.roots]

    @property
    def finite_count(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def points(self) -> List[complex]:
        """Every root repeated by multiplicity, then infinity for the deficit"""
        expanded: List[complex] = []
        for r in self.roots:
            expanded.extend([r.value] * r.multiplicity)
        expanded.extend([INFINITY] * self.degree_deficit)
        return expanded

    def with_multiplicity(self, factor: int) -> "RootSet":
        return RootSet(
            tuple(Root(r.value, r.multiplicity * factor) for r in self.roots),
            self.degree_deficit * factor,
        )

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def merge_root_sets(sets: Iterable[RootSet]) -> RootSet:
    roots: List[Root] = []
    deficit = 0
    for s in sets:
        roots.extend(s.roots)
        deficit += s.degree_deficit
    return RootSet(tuple(roots), deficit)


def poly_from_pairs(pairs: Sequence[Sequence[float]]) -> Poly:
    return Poly(tuple(complex(re, im) for re, im in pairs))
