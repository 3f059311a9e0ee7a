# trigonal/models/sphere.py
"""
Riemann sphere geometry: stereographic coordinates, chordal distance and
the plane chart seen from an arbitrary projection center.
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from trigonal.models.poly import INFINITY

NORTH = np.array([0.0, 0.0, 1.0])


def to_sphere(points) -> np.ndarray:
    """Stereographic image of complex points (infinity -> north pole), shape (N, 3)"""
    z = np.atleast_1d(np.asarray(points, dtype=complex))
    out = np.empty((len(z), 3))
    inf = ~np.isfinite(z)
    big = (np.abs(z) > 1.0) & ~inf
    small = ~big & ~inf

    zs = z[small]
    m = np.abs(zs) ** 2
    out[small, 0] = 2 * zs.real / (1 + m)
    out[small, 1] = 2 * zs.imag / (1 + m)
    out[small, 2] = (m - 1) / (m + 1)

    # w = 1/x keeps huge roots finite
    w = 1.0 / z[big]
    m = np.abs(w) ** 2
    out[big, 0] = 2 * w.real / (1 + m)
    out[big, 1] = -2 * w.imag / (1 + m)
    out[big, 2] = (1 - m) / (1 + m)

    out[inf] = NORTH
    return out


def from_sphere(v: np.ndarray) -> complex:
    x, y, z = v
    if z >= 1.0 - 1e-15:
        return INFINITY
    return complex(x, y) / (1.0 - z)


def chordal(a, b) -> float:
    return float(np.linalg.norm(to_sphere([a])[0] - to_sphere([b])[0]))


def chordal_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise chordal distances between two sets of sphere vectors"""
    return np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)


@dataclass(frozen=True)
class SpherePoint:
    """Unit 3-vector on the Riemann sphere"""

    x: float
    y: float
    z: float

    @classmethod
    def from_complex(cls, value: complex) -> "SpherePoint":
        v = to_sphere([value])[0]
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "SpherePoint":
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def to_complex(self) -> complex:
        return from_sphere(self.vector)

    @property
    def is_infinity(self) -> bool:
        return self.z >= 1.0 - 1e-15

    def as_list(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.z)


def rotation_to_north(center: np.ndarray) -> np.ndarray:
    """Proper rotation sending center to the north pole (Rodrigues)"""
    c = center / np.linalg.norm(center)
    axis = np.cross(c, NORTH)
    s = np.linalg.norm(axis)
    cos = float(np.dot(c, NORTH))
    if s < 1e-12:
        if cos > 0:
            return np.eye(3)
        return np.diag([1.0, -1.0, -1.0])
    k = axis / s
    K = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return np.eye(3) + s * K + (1 - cos) * (K @ K)


class PlaneChart:
    """
    Plane coordinates of the sphere seen from a projection center: the center
    goes to infinity, every other point to a finite complex number. The map
    is a Mobius transformation, so orientation matches the x-plane.
    """

    def __init__(self, center: np.ndarray):
        self.center = np.asarray(center, dtype=float)
        self.rotation = rotation_to_north(self.center)

    def project(self, vectors: np.ndarray) -> np.ndarray:
        v = np.atleast_2d(vectors) @ self.rotation.T
        denom = 1.0 - v[:, 2]
        denom = np.where(denom < 1e-15, 1e-15, denom)
        return (v[:, 0] + 1j * v[:, 1]) / denom


def fibonacci_sphere(count: int) -> np.ndarray:
    """Deterministic, nearly uniform points on the unit sphere"""
    i = np.arange(count) + 0.5
    phi = np.arccos(1 - 2 * i / count)
    theta = np.pi * (1 + 5 ** 0.5) * i
    return np.stack([np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)], axis=1)


def best_center(points: np.ndarray, candidates: int = 256) -> Tuple[np.ndarray, float]:
    """Candidate direction farthest (chordally) from every given point; north pole preferred on ties"""
    cands = np.vstack([NORTH, fibonacci_sphere(candidates)])
    if len(points) == 0:
        return NORTH.copy(), 2.0
    # chordal distance = sqrt(2 - 2 cos)
    cos = cands @ np.asarray(points).T
    nearest = np.sqrt(np.clip(2 - 2 * cos.max(axis=1), 0, None))
    idx = int(np.argmax(nearest))
    return cands[idx], float(nearest[idx])


def winding_number(polygon: np.ndarray, point: complex) -> int:
    """Winding number of a closed complex polygon around a point"""
    rel = polygon - point
    if np.any(np.abs(rel) == 0):
        return 0
    turns = np.angle(np.roll(rel, -1) / rel)
    return int(round(float(turns.sum()) / (2 * np.pi)))


def signed_area(polygon: np.ndarray) -> float:
    x, y = polygon.real, polygon.imag
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))
