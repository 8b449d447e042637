"""Quaternion powers through two real coefficient sequences.

Every power of a quaternion ``w`` with ``x0 = Sc(w)`` and ``rho = |w|**2``
lies in the real span of ``1`` and ``w``::

    w**n = Q_n * w - P_n * rho

with ``Q_1 = 1, P_1 = 0`` and, for ``n >= 2``::

    Q_n = 2 * x0 * Q_{n-1} - P_{n-1} * rho
    P_n = Q_{n-1}

The recurrence is started at ``n = 1`` so nothing divides by ``rho``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .quaternion import ONE, Quaternion, mul

__all__ = ["PowerCoefficients", "qp_coeffs", "power", "power_by_multiplication"]


@dataclass(frozen=True)
class PowerCoefficients:
    n: int
    q: float
    p: float
    x0: float
    rho: float


def qp_coeffs(n: int, x0: float, rho: float) -> list[tuple[float, float]]:
    """Return ``[(Q_1, P_1), ..., (Q_n, P_n)]`` for the given ``x0`` and ``rho``.

    >>> qp_coeffs(3, 0.5, 2.0)
    [(1.0, 0.0), (1.0, 1.0), (-1.0, 1.0)]
    """
    if n < 1:
        raise DomainError("degree must be >= 1, got %r" % (n,))
    if rho < 0:
        raise DomainError("rho = |w|^2 must be non-negative, got %r" % (rho,))
    x0 = float(x0)
    rho = float(rho)
    out = [(1.0, 0.0)]
    q, p = 1.0, 0.0
    for _ in range(2, n + 1):
        q, p = 2.0 * x0 * q - p * rho, q
        out.append((q, p))
    return out


def power_coefficients(n: int, w: Quaternion) -> PowerCoefficients:
    rho = w.norm2()
    q, p = qp_coeffs(n, w[0], rho)[-1]
    return PowerCoefficients(n, q, p, w[0], rho)


def power(w: Quaternion, n: int) -> Quaternion:
    """``w**n`` for ``n >= 0`` via the ``Q_n``, ``P_n`` recurrence."""
    if n < 0:
        raise DomainError("negative powers are not supported")
    if n == 0:
        return ONE
    rho = w.norm2()
    q, p = qp_coeffs(n, w[0], rho)[-1]
    return Quaternion(q * w[0] - p * rho, q * w[1], q * w[2], q * w[3])


def power_by_multiplication(w: Quaternion, n: int) -> Quaternion:
    """``w**n`` as an n-fold Hamilton product; the independent reference."""
    acc = ONE
    for _ in range(n):
        acc = mul(acc, w)
    return acc
