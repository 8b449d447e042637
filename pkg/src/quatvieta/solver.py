"""All roots of a one-sided quaternionic polynomial.

Pipeline: strip zero roots, form the real basic polynomial, find its
conjugate-pair clusters ``x0 +- i r``, then decide for each cluster whether
the whole 2-sphere ``{Sc(w) = x0, |Vec(w)| = r}`` consists of roots or only
one point on it does.

For ``w`` on that sphere, with ``rho = x0**2 + r**2``::

    R(w) = S w - rho T + A_0,   S = sum_{m>=1} A_m Q_m,  T = sum_{m>=1} A_m P_m

where ``Q_m``, ``P_m`` depend only on ``(x0, rho)``. The sphere is a root set
exactly when ``S = 0``; otherwise the single root is ``w = S^-1 (rho T - A_0)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from . import kernels
from .croots import ComplexRootCluster, SolverConfig, find_roots_detailed
from .errors import ClusterError, ResidualTooLargeError
from .qpoly import (RIGHT, QuatPolynomial, RealPolynomial, basic_polynomial,
                    divide_by_real, evaluate, normalize)
from .quaternion import I, J, K, Quaternion, mul

__all__ = [
    "IsolatedRoot",
    "SphericalRoot",
    "QuatRoot",
    "RootSet",
    "SPHERE_PROBES",
    "criterion_sums",
    "sphericity_scale",
    "residual_scale",
    "classify_cluster",
    "solve",
    "conjugate_root_check",
    "sphere_point",
]

_INV_SQRT3 = 1.0 / math.sqrt(3.0)
SPHERE_PROBES = (I, J, K, Quaternion(0.0, _INV_SQRT3, _INV_SQRT3, _INV_SQRT3))


@dataclass(frozen=True)
class IsolatedRoot:
    point: Quaternion
    multiplicity: int = 1

    def to_json(self) -> dict:
        return {"type": "isolated", "point": self.point.as_list(),
                "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class SphericalRoot:
    """Every ``w`` with ``Sc(w) = x0`` and ``|Vec(w)| = r`` is a root."""

    x0: float
    r: float
    multiplicity: int = 1

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("a spherical root needs r > 0")

    def point(self, direction: Quaternion) -> Quaternion:
        return sphere_point(self.x0, self.r, direction)

    def to_json(self) -> dict:
        return {"type": "spherical", "x0": self.x0, "r": self.r,
                "multiplicity": self.multiplicity}


QuatRoot = Union[IsolatedRoot, SphericalRoot]


def sphere_point(x0: float, r: float, direction: Quaternion) -> Quaternion:
    """``x0 + r u`` with ``u`` the normalized vector part of ``direction``."""
    vn = direction.vecnorm()
    return Quaternion(x0, r * direction[1] / vn, r * direction[2] / vn, r * direction[3] / vn)


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    zero_root_multiplicity: int
    degree: int
    polynomial: QuatPolynomial | None = None
    reduced: QuatPolynomial | None = None
    basic: RealPolynomial | None = None
    clusters: tuple = ()
    iterations: int = 0
    residuals: tuple = field(default=())

    def accounting(self) -> tuple[int, int, int]:
        """``(zero, isolated, spherical)`` multiplicity totals."""
        iso = sum(r.multiplicity for r in self.roots if isinstance(r, IsolatedRoot))
        sph = sum(r.multiplicity for r in self.roots if isinstance(r, SphericalRoot))
        return self.zero_root_multiplicity, iso, sph

    def balanced(self) -> bool:
        zero, iso, sph = self.accounting()
        return zero + iso + 2 * sph == self.degree

    def isolated(self) -> list[IsolatedRoot]:
        return [r for r in self.roots if isinstance(r, IsolatedRoot)]

    def spherical(self) -> list[SphericalRoot]:
        return [r for r in self.roots if isinstance(r, SphericalRoot)]

    def find(self, w: Quaternion, tol: float = 1e-7):
        """The reported root containing ``w``, or None.

        Spheres are checked first so a point lying on a sphere is attributed
        to it. The zero root is reported as ``IsolatedRoot(0, k)``.
        """
        sc, vn = w[0], w.vecnorm()
        for root in self.spherical():
            if abs(sc - root.x0) <= tol * max(1.0, abs(root.x0)) and \
                    abs(vn - root.r) <= tol * max(1.0, root.r):
                return root
        for root in self.isolated():
            if abs(w - root.point) <= tol * max(1.0, abs(root.point)):
                return root
        if self.zero_root_multiplicity and abs(w) <= tol:
            return IsolatedRoot(Quaternion(), self.zero_root_multiplicity)
        return None

    def to_json(self) -> dict:
        return {
            "roots": [r.to_json() for r in self.roots],
            "zero_root_multiplicity": self.zero_root_multiplicity,
            "degree": self.degree,
        }


def criterion_sums(poly: QuatPolynomial, x0: float, rho: float) -> tuple[Quaternion, Quaternion]:
    """``S = sum_{m>=1} A_m Q_m(x0, rho)`` and ``T = sum_{m>=1} A_m P_m(x0, rho)``.

    ``Q_m`` and ``P_m`` are real, so the left-polynomial sums coincide.
    """
    s, t = kernels.qp_sums(poly.coefficients, x0, rho)
    return Quaternion(*s), Quaternion(*t)


def sphericity_scale(poly: QuatPolynomial, rho: float) -> float:
    return poly.coefficient_scale(math.sqrt(rho), start=1)


def residual_scale(poly: QuatPolynomial, rho: float) -> float:
    return poly.coefficient_scale(math.sqrt(rho), start=0)


def _is_spherical(poly: QuatPolynomial, x0: float, rho: float, cfg: SolverConfig) -> bool:
    if poly.degree < 2:
        return False
    s, _ = criterion_sums(poly, x0, rho)
    return abs(s) <= cfg.sphericity_tol * sphericity_scale(poly, rho)


def _extract_point(poly: QuatPolynomial, x0: float, rho: float) -> Quaternion:
    s, t = criterion_sums(poly, x0, rho)
    rhs = t * rho - poly.coefficients[0]
    if poly.side == RIGHT:
        return mul(s.inverse(), rhs)
    return mul(rhs, s.inverse())


def _check_point(poly: QuatPolynomial, w: Quaternion, cfg: SolverConfig) -> float:
    rho = w.norm2()
    res = abs(evaluate(poly, w))
    bound = cfg.residual_tol * residual_scale(poly, rho)
    if not res <= bound:
        raise ResidualTooLargeError(
            "root %s leaves residual %.3g > %.3g" % (w, res, bound), residual=res, bound=bound)
    return res


def classify_cluster(poly: QuatPolynomial, cluster: ComplexRootCluster,
                     cfg: SolverConfig = SolverConfig()) -> list:
    """Quaternion roots carried by one conjugate-pair cluster of the basic polynomial.

    Usually a single root. A cluster of complex multiplicity ``c`` can hold
    ``s`` copies of a sphere plus ``c - 2s`` copies of an isolated point on
    that sphere; spheres are peeled off by dividing out the real factor
    ``w**2 - 2 x0 w + rho`` while the remaining quotient still passes the
    sphericity test.

    Raises ResidualTooLargeError when a produced root does not satisfy the
    polynomial, and ClusterError for an odd-multiplicity real cluster.
    """
    x0, r, c = cluster.x0, cluster.r, cluster.complex_multiplicity
    if r <= cfg.real_axis_tol:
        if c % 2:
            raise ClusterError("real cluster at %r has odd multiplicity %d" % (x0, c))
        point = Quaternion(x0)
        _check_point(poly, point, cfg)
        return [IsolatedRoot(point, c // 2)]

    rho = x0 * x0 + r * r
    quotient = poly
    spheres = 0
    remaining = c
    while remaining >= 2 and _is_spherical(quotient, x0, rho, cfg):
        quotient, _ = divide_by_real(quotient, (rho, -2.0 * x0, 1.0))
        spheres += 1
        remaining -= 2

    out = []
    if spheres:
        sphere = SphericalRoot(x0, r, spheres)
        for u in SPHERE_PROBES:
            _check_point(poly, sphere.point(u), cfg)
        out.append(sphere)
    if remaining:
        try:
            point = _extract_point(quotient, x0, rho)
        except ZeroDivisionError:
            raise ResidualTooLargeError(
                "sphericity sum vanishes but cluster multiplicity %d is odd" % c) from None
        _check_point(poly, point, cfg)
        out.append(IsolatedRoot(point, remaining))
    return out


def solve(poly: QuatPolynomial, cfg: SolverConfig = SolverConfig()) -> RootSet:
    """Find and classify every root of ``poly``.

    >>> rs = solve(QuatPolynomial.from_lists([[1, 0, 0, 0], 0, [1, 0, 0, 0]]))
    >>> rs.roots
    (SphericalRoot(x0=0.0, r=1.0, multiplicity=1),)
    """
    reduced, zero_mult = normalize(poly)
    degree = reduced.degree + zero_mult
    trimmed = QuatPolynomial(poly.coefficients[:degree + 1], poly.side)
    if reduced.degree == 0:
        return RootSet((), zero_mult, degree, trimmed, reduced)
    basic = basic_polynomial(reduced)
    found = find_roots_detailed(basic, cfg)
    roots = []
    for cluster in found.clusters:
        roots.extend(classify_cluster(reduced, cluster, cfg))
    rs = RootSet(tuple(roots), zero_mult, degree, trimmed, reduced, basic,
                 found.clusters, found.iterations)
    if not rs.balanced():
        raise ClusterError("root multiplicities do not add up to the degree")
    return rs


def conjugate_root_check(rootset: RootSet, w: Quaternion,
                         cfg: SolverConfig = SolverConfig()) -> bool:
    """True iff both ``w`` and ``conj(w)`` satisfy the polynomial of ``rootset``."""
    poly = rootset.polynomial
    for v in (w, w.conjugate()):
        bound = cfg.residual_tol * residual_scale(poly, v.norm2())
        if not abs(evaluate(poly, v)) <= bound:
            return False
    return True

