"""Vieta-type identities checked against a solved root set.

For a polynomial of degree ``n`` with roots ``w_1 .. w_n`` (each sphere
contributing two representatives)::

    prod |w_m|              = |A_0| / |A_n|
    sum Sc(w_m)             = -dot(A_n, A_{n-1}) / |A_n|**2
    sum Sc(w_m) / |w_m|**2  = -dot(A_1, A_0) / |A_0|**2     (A_0 != 0)

When every root is a pure vector, ``dot(A_n, A_{n-1})`` and ``dot(A_1, A_0)``
vanish.

All checks run on the polynomial with zero roots divided out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PreconditionViolated
from .qpoly import QuatPolynomial
from .quaternion import ZERO, Quaternion, dot
from .solver import IsolatedRoot, RootSet, SphericalRoot

__all__ = [
    "VietaReport",
    "representatives",
    "check_product_moduli",
    "check_sum_scalars",
    "check_sum_sc_over_modsq",
    "check_pure_vector_corollaries",
    "vieta_report",
]


def _relative(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def representatives(rootset: RootSet, include_zero: bool = True) -> list[Quaternion]:
    """Roots listed with multiplicity; a sphere gives ``x0 + r i`` and ``x0 - r i``."""
    reps = []
    for root in rootset.roots:
        if isinstance(root, IsolatedRoot):
            reps.extend([root.point] * root.multiplicity)
        elif isinstance(root, SphericalRoot):
            pair = [Quaternion(root.x0, root.r), Quaternion(root.x0, -root.r)]
            reps.extend(pair * root.multiplicity)
    if include_zero:
        reps.extend([ZERO] * rootset.zero_root_multiplicity)
    return reps


def check_product_moduli(poly: QuatPolynomial, reps) -> tuple[float, float, float]:
    lhs = math.prod(abs(w) for w in reps)
    rhs = abs(poly.coefficients[0]) / abs(poly.leading)
    return lhs, rhs, _relative(lhs, rhs)


def check_sum_scalars(poly: QuatPolynomial, reps) -> tuple[float, float, float]:
    a = poly.coefficients
    if len(a) < 2:
        return 0.0, 0.0, 0.0
    lhs = math.fsum(w[0] for w in reps)
    rhs = -dot(a[-1], a[-2]) / a[-1].norm2()
    return lhs, rhs, _relative(lhs, rhs)


def check_sum_sc_over_modsq(poly: QuatPolynomial, reps) -> tuple[float, float, float]:
    a = poly.coefficients
    if a[0] == ZERO:
        raise PreconditionViolated("identity for sum Sc(w)/|w|^2 requires A_0 != 0")
    if len(a) < 2:
        return 0.0, 0.0, 0.0
    lhs = math.fsum(w[0] / w.norm2() for w in reps)
    rhs = -dot(a[1], a[0]) / a[0].norm2()
    return lhs, rhs, _relative(lhs, rhs)


def check_pure_vector_corollaries(poly: QuatPolynomial, reps, tol: float = 1e-9
                                  ) -> tuple[bool, float, float]:
    """``(applies, dot(A_n, A_{n-1}), dot(A_1, A_0))``.

    ``applies`` is true when every representative has ``|Sc| <= tol``; the
    two dot products are then expected to be zero to the same tolerance,
    relative to the coefficient scale.
    """
    a = poly.coefficients
    applies = all(abs(w[0]) <= tol for w in reps)
    if len(a) < 2:
        return applies, 0.0, 0.0
    return applies, dot(a[-1], a[-2]), dot(a[1], a[0])


@dataclass(frozen=True)
class VietaReport:
    product_moduli_lhs: float
    product_moduli_rhs: float
    sum_sc_lhs: float
    sum_sc_rhs: float
    sum_sc_over_modsq_lhs: float | None
    sum_sc_over_modsq_rhs: float | None
    residuals: tuple
    corollary_dots: tuple | None = None
    zero_root_multiplicity: int = 0

    def worst(self) -> float:
        return max(r for r in self.residuals if r is not None)

    def passed(self, tol: float) -> bool:
        return self.worst() <= tol

    def to_json(self) -> dict:
        return {
            "product_moduli": {"lhs": self.product_moduli_lhs, "rhs": self.product_moduli_rhs,
                               "residual": self.residuals[0]},
            "sum_scalar_parts": {"lhs": self.sum_sc_lhs, "rhs": self.sum_sc_rhs,
                                 "residual": self.residuals[1]},
            "sum_scalar_over_modulus_squared": None if self.sum_sc_over_modsq_lhs is None else {
                "lhs": self.sum_sc_over_modsq_lhs, "rhs": self.sum_sc_over_modsq_rhs,
                "residual": self.residuals[2]},
            "pure_vector_dots": None if self.corollary_dots is None else list(self.corollary_dots),
            "zero_root_multiplicity": self.zero_root_multiplicity,
        }


def vieta_report(rootset: RootSet, tol: float = 1e-9, require_all: bool = False) -> VietaReport:
    """Evaluate all three identities on ``rootset``.

    The last identity needs ``A_0 != 0`` in the original polynomial; when
    zero roots were present it is omitted, or PreconditionViolated is raised
    if ``require_all`` is set.
    """
    poly = rootset.reduced
    reps = representatives(rootset, include_zero=False)
    p_lhs, p_rhs, p_res = check_product_moduli(poly, reps)
    s_lhs, s_rhs, s_res = check_sum_scalars(poly, reps)
    if rootset.zero_root_multiplicity:
        if require_all:
            raise PreconditionViolated(
                "A_0 = 0: sum Sc(w)/|w|^2 identity is undefined (zero root of multiplicity %d)"
                % rootset.zero_root_multiplicity)
        m_lhs = m_rhs = m_res = None
    else:
        m_lhs, m_rhs, m_res = check_sum_sc_over_modsq(poly, reps)
    applies, top, bottom = check_pure_vector_corollaries(poly, reps, tol)
    return VietaReport(p_lhs, p_rhs, s_lhs, s_rhs, m_lhs, m_rhs, (p_res, s_res, m_res),
                       (top, bottom) if applies else None, rootset.zero_root_multiplicity)
