# trigonal/services/algebra.py
"""
Complex polynomial arithmetic, rational maps and the simultaneous
(Aberth-Ehrlich) all-roots solver with multiplicity-aware clustering.
"""
import logging
import math
from typing import List, Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.special import comb

from trigonal.core.config import settings
from trigonal.core.errors import InvalidPolynomial, NonConvergence
from trigonal.models.poly import Poly, RationalMap, Root, RootSet

logger = logging.getLogger(__name__)

STRIP_TOLERANCE = 1e-12
LARGE_ROOT = 1e6


def normalize(p: Poly) -> Poly:
    """Strip trailing coefficients that are negligible relative to the largest one"""
    coeffs = list(p.coeffs)
    if not coeffs:
        return Poly(())
    top = max(abs(c) for c in coeffs)
    if top == 0:
        return Poly(())
    while coeffs and abs(coeffs[-1]) <= STRIP_TOLERANCE * top:
        coeffs.pop()
    return Poly(tuple(coeffs))


def arith(p: Poly, q: Poly, op: str) -> Poly:
    a, b = p.array, q.array
    if op == "add":
        out = npoly.polyadd(a, b)
    elif op == "sub":
        out = npoly.polysub(a, b)
    elif op == "mul":
        out = npoly.polymul(a, b)
    else:
        raise ValueError(f"unknown polynomial operation {op!r}")
    return normalize(Poly(tuple(out)))


def derivative(p: Poly) -> Poly:
    if p.degree <= 0:
        return Poly(())
    return normalize(Poly(tuple(npoly.polyder(p.array[: p.degree + 1]))))


def rational_derivative_numerator(f: RationalMap) -> Poly:
    """num' * den - num * den'; its roots are the finite critical points of f"""
    return derivative(f.num) * f.den - f.num * derivative(f.den)


def _taylor_bounds(c: np.ndarray, radius: float, order: int) -> np.ndarray:
    """B_j(radius) = sum_i |c_i| C(i, j) radius^(i-j) for j < order"""
    mags = np.abs(c)
    powers = np.arange(len(c))
    bounds = np.empty(order)
    for j in range(order):
        idx = powers[j:]
        bounds[j] = np.sum(mags[j:] * comb(idx, j) * radius ** (idx - j))
    return bounds


def _taylor_coefficients(c: np.ndarray, z: complex, order: int) -> np.ndarray:
    """p^(j)(z) / j! for j < order"""
    out = np.empty(order, dtype=complex)
    current = c.astype(complex)
    for j in range(order):
        out[j] = npoly.polyval(z, current) / math.factorial(j)
        current = npoly.polyder(current) if len(current) > 1 else np.zeros(1, dtype=complex)
    return out


def _aberth(c: np.ndarray, tol: float, seed: int, max_iterations: int) -> np.ndarray:
    deg = len(c) - 1
    monic = c / c[-1]
    radius = 1.0 + float(np.max(np.abs(monic[:-1])))
    rng = np.random.default_rng(seed)
    offset = rng.uniform(0.0, 2.0 * math.pi / deg)
    z = radius * np.exp(1j * (2.0 * math.pi * np.arange(deg) / deg + offset))
    dc = npoly.polyder(c)
    abs_c = np.abs(c)

    settled = 0
    for iteration in range(max_iterations):
        pz = npoly.polyval(z, c)
        dpz = npoly.polyval(z, dc)
        residual_ok = np.abs(pz) <= tol * npoly.polyval(np.abs(z), abs_c)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
        bad = ~np.isfinite(step)
        if bad.any():
            step[bad] = 1e-8 * (1.0 + np.abs(z[bad])) * np.exp(1j * rng.uniform(0, 2 * math.pi, bad.sum()))
        z = z - step
        if residual_ok.all():
            # keep iterating briefly so copies of a multiple root settle symmetrically
            settled += 1
            if settled > 8 or np.max(np.abs(step) / (1.0 + np.abs(z))) < 1e-15:
                logger.debug(f"Aberth converged after {iteration + 1} iterations (degree {deg})")
                return z
        else:
            settled = 0
    raise NonConvergence(
        "root finder hit the iteration cap before reaching the residual target",
        {"degree": deg, "iterations": max_iterations},
    )


def _polish(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Newton refinement of isolated roots; stops as soon as the residual stops shrinking"""
    dc = npoly.polyder(c)
    out = z.copy()
    for i, zi in enumerate(z):
        others = np.delete(z, i)
        if others.size and np.min(np.abs(others - zi)) < 1e-3 * (1.0 + abs(zi)):
            continue
        best, best_res = zi, abs(npoly.polyval(zi, c))
        for _ in range(3):
            d = npoly.polyval(best, dc)
            if d == 0:
                break
            cand = best - npoly.polyval(best, c) / d
            res = abs(npoly.polyval(cand, c))
            if res >= best_res:
                break
            best, best_res = cand, res
        out[i] = best
    return out


def _linkage(points: np.ndarray, radius: float) -> List[List[int]]:
    """Single-linkage groups of indices whose chains stay within radius"""
    n = len(points)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    dist = np.abs(points[:, None] - points[None, :])
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i, j] <= radius:
                parent[find(i)] = find(j)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _is_multiple_root(c: np.ndarray, centre: complex, k: int, eta: float) -> bool:
    coeffs = _taylor_coefficients(c, centre, k)
    bounds = _taylor_bounds(c, abs(centre), k)
    return bool(np.all(np.abs(coeffs) <= eta * bounds))


def _refine_multiple(c: np.ndarray, centre: complex, k: int, radius: float) -> complex:
    """Newton on the (k-1)-th derivative, which has a simple root at a k-fold root of p"""
    high = c.astype(complex)
    for _ in range(k - 1):
        high = npoly.polyder(high)
    dhigh = npoly.polyder(high) if len(high) > 1 else np.zeros(1, dtype=complex)
    z = centre
    for _ in range(5):
        d = npoly.polyval(z, dhigh)
        if d == 0:
            break
        z = z - npoly.polyval(z, high) / d
    return complex(z) if abs(z - centre) <= radius else centre


def _cluster(c: np.ndarray, z: np.ndarray, cluster_tol: float, eta: float) -> List[Root]:
    scale = 1.0 + float(np.max(np.abs(z)))
    tight = cluster_tol * scale
    roots: List[Root] = []

    def resolve(indices: List[int], radius: float) -> None:
        members = z[indices]
        if len(indices) == 1:
            roots.append(Root(complex(members[0]), 1))
            return
        centre = _refine_multiple(c, complex(np.mean(members)), len(indices), radius)
        if _is_multiple_root(c, centre, len(indices), eta) or radius <= tight:
            roots.append(Root(centre, len(indices)))
            return
        sub_radius = max(radius / 10.0, tight)
        for sub in _linkage(members, sub_radius):
            resolve([indices[i] for i in sub], sub_radius)

    loose = 1e-2 * scale
    for group in _linkage(z, loose):
        resolve(group, loose)
    roots.sort(key=lambda r: (round(r.value.real, 9), round(r.value.imag, 9)))
    return roots


def all_roots(
    p: Poly,
    tol: Optional[float] = None,
    *,
    seed: Optional[int] = None,
    cluster_tol: Optional[float] = None,
    max_iterations: Optional[int] = None,
) -> RootSet:
    """
    All complex roots of p, clustered into distinct values with multiplicity.
    The degree deficit is always 0 here; callers that work on the sphere
    account for roots at infinity themselves.
    """
    tol = settings.ROOT_TOLERANCE if tol is None else tol
    seed = settings.ROOT_SEED if seed is None else seed
    cluster_tol = settings.CLUSTER_TOLERANCE if cluster_tol is None else cluster_tol
    max_iterations = settings.MAX_ITERATIONS if max_iterations is None else max_iterations

    p = normalize(p)
    if p.is_zero:
        raise InvalidPolynomial("the zero polynomial has no finite root set")
    deg = p.degree
    if deg == 0:
        return RootSet()
    c = p.array[: deg + 1]
    if deg == 1:
        return RootSet((Root(complex(-c[0] / c[1]), 1),))

    z = _aberth(c, tol, seed, max_iterations)
    z = _polish(c, z)
    return RootSet(tuple(_cluster(c, z, cluster_tol, settings.MULTIPLICITY_TOLERANCE)))


def solve(p: Poly, tol: Optional[float] = None, *, seed: Optional[int] = None) -> RootSet:
    """all_roots with retries from perturbed starting circles"""
    base = settings.ROOT_SEED if seed is None else seed
    last_error: Optional[NonConvergence] = None
    for attempt in range(settings.SOLVER_RETRIES):
        try:
            return all_roots(p, tol, seed=base + attempt)
        except NonConvergence as exc:
            logger.warning(f"Root solve of degree {p.degree} failed (attempt {attempt + 1}), retrying")
            last_error = exc
    raise last_error


def _reversed_newton(c: np.ndarray, nominal: int, x: complex) -> complex:
    """Refine a huge root in the chart w = 1/x"""
    rev = np.zeros(nominal + 1, dtype=complex)
    rev[nominal - (len(c) - 1):] = c[::-1]
    drev = npoly.polyder(rev)
    w = 1.0 / x
    for _ in range(4):
        d = npoly.polyval(w, drev)
        if d == 0:
            break
        w = w - npoly.polyval(w, rev) / d
    return 1.0 / w if w != 0 else x


def solve_on_sphere(p: Poly, nominal_degree: int, *, seed: Optional[int] = None) -> RootSet:
    """
    Roots of p viewed as a section of degree nominal_degree on the sphere:
    the missing degree becomes the deficit at infinity.
    """
    q = normalize(p)
    if q.is_zero:
        raise InvalidPolynomial("cannot solve the zero polynomial")
    deficit = nominal_degree - q.degree
    if deficit < 0:
        raise InvalidPolynomial(f"degree {q.degree} exceeds nominal degree {nominal_degree}")
    found = solve(q, seed=seed)
    c = q.array[: q.degree + 1]
    roots = []
    for r in found.roots:
        value = r.value
        if abs(value) > LARGE_ROOT and r.multiplicity == 1:
            value = _reversed_newton(c, q.degree, value)
        roots.append(Root(value, r.multiplicity))
    return RootSet(tuple(roots), deficit)


def common_roots(p: Poly, q: Poly, tol: Optional[float] = None) -> List[complex]:
    """Roots of p that are also roots of q within the coincidence tolerance"""
    p, q = normalize(p), normalize(q)
    if p.is_zero or q.is_zero:
        raise InvalidPolynomial("common_roots needs two nonzero polynomials")
    tol = settings.CLUSTER_TOLERANCE if tol is None else tol
    rp = solve(p).values
    rq = solve(q).values
    if not rp or not rq:
        return []
    scale = 1.0 + max(abs(z) for z in rp + rq)
    shared = []
    for z in rp:
        close = min(abs(z - w) for w in rq) <= tol * scale
        # centroids of multiple roots can sit outside the distance radius
        vanishes = abs(q(z)) <= settings.MULTIPLICITY_TOLERANCE * q.abs_bound(abs(z))
        if close or vanishes:
            shared.append(z)
    return shared


def poly_from_roots(roots: Sequence[Root], leading: complex = 1.0) -> Poly:
    coeffs = np.array([leading], dtype=complex)
    for r in roots:
        for _ in range(r.multiplicity):
            coeffs = npoly.polymul(coeffs, np.array([-r.value, 1.0]))
    return Poly(tuple(coeffs))


def compose_affine(p: Poly, alpha: complex, beta: complex) -> Poly:
    """p(alpha * x + beta)"""
    inner = Poly((beta, alpha))
    result = Poly(())
    power = Poly.constant(1.0)
    for c in p.coeffs[: p.degree + 1]:
        result = result + power * c
        power = power * inner
    return result
