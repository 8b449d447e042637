"""Real quaternions ``x0 + x1 i + x2 j + x3 k`` as an immutable value type.

The multiplication table is the usual Hamilton one::

    i*i = j*j = k*k = -1,   i*j = k,  j*k = i,  k*i = j

Equality is exact componentwise comparison; tolerance-based comparison is
left to callers.

>>> i, j = Quaternion(0, 1), Quaternion(0, 0, 1)
>>> i * j
Quaternion(x0=0.0, x1=0.0, x2=0.0, x3=1.0)
>>> (Quaternion(1, 1) * Quaternion(1, 0, 1)).as_list()
[1.0, 1.0, 1.0, 1.0]
"""

from __future__ import annotations

import math
from collections import namedtuple
from numbers import Real

from .errors import ZeroDivisorError

__all__ = [
    "Quaternion",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "mul",
    "conj",
    "decompose",
    "inverse",
    "dot",
    "as_quaternion",
]


class Quaternion(namedtuple("Quaternion", "x0 x1 x2 x3")):
    __slots__ = ()

    def __new__(cls, x0=0.0, x1=0.0, x2=0.0, x3=0.0):
        return super().__new__(cls, float(x0), float(x1), float(x2), float(x3))

    # -- parts -----------------------------------------------------------
    @property
    def scalar(self) -> float:
        """Scalar part ``Sc(w) = x0``."""
        return self[0]

    @property
    def vector(self) -> Quaternion:
        """Vector part ``x1 i + x2 j + x3 k`` as a pure quaternion."""
        return Quaternion(0.0, self[1], self[2], self[3])

    def vecnorm(self) -> float:
        return math.sqrt(self[1] * self[1] + self[2] * self[2] + self[3] * self[3])

    def norm2(self) -> float:
        x0, x1, x2, x3 = self
        return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    def conjugate(self) -> Quaternion:
        return Quaternion(self[0], -self[1], -self[2], -self[3])

    def inverse(self) -> Quaternion:
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisorError("zero quaternion has no inverse")
        return Quaternion(self[0] / n2, -self[1] / n2, -self[2] / n2, -self[3] / n2)

    def is_real(self) -> bool:
        return self[1] == 0.0 and self[2] == 0.0 and self[3] == 0.0

    def as_list(self) -> list[float]:
        return [self[0], self[1], self[2], self[3]]

    # -- arithmetic ------------------------------------------------------
    def __neg__(self):
        return Quaternion(-self[0], -self[1], -self[2], -self[3])

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self[0] + other[0], self[1] + other[1],
                              self[2] + other[2], self[3] + other[3])
        if isinstance(other, Real):
            return Quaternion(self[0] + other, self[1], self[2], self[3])
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self[0] - other[0], self[1] - other[1],
                              self[2] - other[2], self[3] - other[3])
        if isinstance(other, Real):
            return Quaternion(self[0] - other, self[1], self[2], self[3])
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Real):
            return Quaternion(other - self[0], -self[1], -self[2], -self[3])
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, Real):
            return Quaternion(self[0] * other, self[1] * other,
                              self[2] * other, self[3] * other)
        return NotImplemented

    def __rmul__(self, other):
        # only reached for non-Quaternion left operands; reals commute
        if isinstance(other, Real):
            return Quaternion(self[0] * other, self[1] * other,
                              self[2] * other, self[3] * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Quaternion(self[0] / other, self[1] / other,
                              self[2] / other, self[3] / other)
        # right division a / b := a * b^-1; ambiguous in general, so only reals
        return NotImplemented

    def __repr__(self):
        return "Quaternion(x0=%r, x1=%r, x2=%r, x3=%r)" % tuple(self)

    def __str__(self):
        x0, x1, x2, x3 = self
        return "%g%+gi%+gj%+gk" % (x0, x1, x2, x3)


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def as_quaternion(value) -> Quaternion:
    """Coerce a real, a 4-sequence or a Quaternion into a Quaternion."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, Real):
        return Quaternion(value)
    comps = tuple(value)
    if len(comps) != 4:
        raise ValueError("quaternion needs exactly 4 components, got %d" % len(comps))
    return Quaternion(*comps)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a*b``."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conj(w: Quaternion) -> Quaternion:
    return w.conjugate()


def decompose(w: Quaternion) -> tuple[float, float, float]:
    """Return ``(Sc(w), |Vec(w)|, |w|)``.

    >>> decompose(Quaternion(5))
    (5.0, 0.0, 5.0)
    """
    return w[0], w.vecnorm(), abs(w)


def inverse(w: Quaternion) -> Quaternion:
    """``conj(w) / |w|**2``; raises ZeroDivisorError for ``w == 0``."""
    return w.inverse()


def dot(w: Quaternion, v: Quaternion) -> float:
    """Euclidean scalar product of the component 4-vectors.

    Equals the real quaternion ``(w*conj(v) + v*conj(w)) / 2``.
    """
    return w[0] * v[0] + w[1] * v[1] + w[2] * v[2] + w[3] * v[3]
