"""One-sided quaternionic polynomials and their real basic polynomials.

A *right* polynomial has its coefficients to the left of the powers,
``R(w) = sum A_m w**m``; a *left* polynomial is ``L(w) = sum w**m A_m``.
Coefficients are stored in ascending degree.

The basic polynomial of either is the real polynomial with coefficients
``B_m = sum_k dot(A_k, A_{m-k})``. On the real axis it equals ``|R(x)|**2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import SchemaError, ZeroPolynomialError
from .quaternion import ZERO, Quaternion, as_quaternion, dot, mul

__all__ = [
    "RIGHT",
    "LEFT",
    "QuatPolynomial",
    "RealPolynomial",
    "normalize",
    "basic_polynomial",
    "quaternion_form_coefficients",
    "form_symmetry_check",
    "realness_defect",
    "divide_by_real",
]

RIGHT = "right"
LEFT = "left"
_SIDES = (RIGHT, LEFT)


@dataclass(frozen=True)
class RealPolynomial:
    """Real polynomial, ascending coefficients ``B_0 .. B_d``."""

    coefficients: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(float(c) for c in self.coefficients))
        if not self.coefficients:
            raise ValueError("a polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return kernels.horner_real(self.coefficients, x)

    def abs_bound(self, x) -> float:
        """``sum |B_m| |x|**m``: the scale of rounding error in ``self(x)``."""
        ax = abs(x)
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * ax + abs(c)
        return acc


@dataclass(frozen=True)
class QuatPolynomial:
    """One-sided polynomial with quaternion coefficients ``A_0 .. A_n``."""

    coefficients: tuple[Quaternion, ...]
    side: str = RIGHT

    def __post_init__(self):
        coeffs = tuple(as_quaternion(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if self.side not in _SIDES:
            raise ValueError("side must be 'right' or 'left', got %r" % (self.side,))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_lists(cls, coeffs: Iterable, side: str = RIGHT) -> QuatPolynomial:
        return cls(tuple(as_quaternion(c) for c in coeffs), side)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Quaternion:
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return all(c == ZERO for c in self.coefficients)

    def with_side(self, side: str) -> QuatPolynomial:
        return QuatPolynomial(self.coefficients, side)

    def __call__(self, w) -> Quaternion:
        return evaluate(self, w)

    def __add__(self, other: QuatPolynomial) -> QuatPolynomial:
        if not isinstance(other, QuatPolynomial):
            return NotImplemented
        if other.side != self.side:
            raise ValueError("cannot add polynomials of different sides")
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (ZERO,) * (n - len(self.coefficients))
        b = other.coefficients + (ZERO,) * (n - len(other.coefficients))
        return QuatPolynomial(tuple(x + y for x, y in zip(a, b)), self.side)

    def scale(self, factor: float) -> QuatPolynomial:
        return QuatPolynomial(tuple(c * factor for c in self.coefficients), self.side)

    def coefficient_scale(self, modulus: float = 1.0, start: int = 0) -> float:
        """``sum_{m >= start} |A_m| * max(1, modulus)**m``."""
        base = max(1.0, modulus)
        total = 0.0
        powm = base ** start
        for a in self.coefficients[start:]:
            total += abs(a) * powm
            powm *= base
        return total

    # -- JSON schema -----------------------------------------------------
    def to_json(self) -> dict:
        return {"side": self.side, "coefficients": [c.as_list() for c in self.coefficients]}

    @classmethod
    def from_json(cls, obj) -> QuatPolynomial:
        if not isinstance(obj, dict):
            raise SchemaError("polynomial must be a JSON object")
        side = obj.get("side", RIGHT)
        if side not in _SIDES:
            raise SchemaError("'side' must be \"right\" or \"left\"")
        coeffs = obj.get("coefficients")
        if not isinstance(coeffs, list) or not coeffs:
            raise SchemaError("'coefficients' must be a non-empty list")
        out = []
        for idx, c in enumerate(coeffs):
            if (not isinstance(c, list) or len(c) != 4
                    or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in c)):
                raise SchemaError("coefficient %d must be a list of 4 numbers" % idx)
            out.append(Quaternion(*c))
        return cls(tuple(out), side)


def evaluate(poly: QuatPolynomial, w) -> Quaternion:
    """Evaluate ``poly`` at ``w``.

    Uses ``w**m = Q_m w - P_m |w|**2``, so the whole polynomial collapses to
    ``S w - |w|**2 T + A_0`` (right) or ``w S - |w|**2 T + A_0`` (left).
    """
    w = as_quaternion(w)
    rho = w.norm2()
    s, t = kernels.qp_sums(poly.coefficients, w[0], rho)
    s = Quaternion(*s)
    a0 = poly.coefficients[0]
    sw = mul(s, w) if poly.side == RIGHT else mul(w, s)
    return Quaternion(sw[0] - rho * t[0] + a0[0], sw[1] - rho * t[1] + a0[1],
                      sw[2] - rho * t[2] + a0[2], sw[3] - rho * t[3] + a0[3])


def normalize(poly: QuatPolynomial) -> tuple[QuatPolynomial, int]:
    """Strip zero leading and zero low-order coefficients.

    Returns the reduced polynomial (with ``A_0 != 0`` and ``A_n != 0``) and the
    number of low-order zeros removed, which is the multiplicity of the
    root ``w = 0``.

    >>> p, k = normalize(QuatPolynomial.from_lists([0, 0, 1]))
    >>> p.degree, k
    (0, 2)
    """
    coeffs = list(poly.coefficients)
    while coeffs and coeffs[-1] == ZERO:
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomialError("polynomial is identically zero")
    k = 0
    while coeffs[k] == ZERO:
        k += 1
    return QuatPolynomial(tuple(coeffs[k:]), poly.side), k


def basic_polynomial(poly: QuatPolynomial) -> RealPolynomial:
    """Real basic polynomial of degree ``2n``; identical for both sides."""
    a = poly.coefficients
    n = len(a) - 1
    out = []
    for m in range(2 * n + 1):
        lo = max(0, m - n)
        hi = min(m, n)
        out.append(sum(dot(a[k], a[m - k]) for k in range(lo, hi + 1)))
    return RealPolynomial(tuple(out))


def quaternion_form_coefficients(poly: QuatPolynomial, side: str | None = None) -> list[Quaternion]:
    """Basic-polynomial coefficients as full quaternion sums.

    Right: ``sum_k conj(A_k) A_{m-k}``; left: ``sum_k A_k conj(A_{m-k})``.
    Mathematically their vector parts vanish; numerically they do not quite.
    """
    side = poly.side if side is None else side
    a = poly.coefficients
    n = len(a) - 1
    out = []
    for m in range(2 * n + 1):
        acc = ZERO
        for k in range(max(0, m - n), min(m, n) + 1):
            if side == RIGHT:
                acc = acc + mul(a[k].conjugate(), a[m - k])
            else:
                acc = acc + mul(a[k], a[m - k].conjugate())
        out.append(acc)
    return out


def _product_scale(a: Sequence[Quaternion], m: int) -> float:
    n = len(a) - 1
    return sum(abs(a[k]) * abs(a[m - k]) for k in range(max(0, m - n), min(m, n) + 1))


def form_symmetry_check(poly: QuatPolynomial) -> float:
    """Largest componentwise gap between the right and left quaternion forms."""
    right = quaternion_form_coefficients(poly, RIGHT)
    left = quaternion_form_coefficients(poly, LEFT)
    worst = 0.0
    for f, g in zip(right, left):
        worst = max(worst, max(abs(x - y) for x, y in zip(f, g)))
    return worst


def coefficient_product_scale(poly: QuatPolynomial) -> float:
    """``max_m sum_k |A_k||A_{m-k}|``, the natural size of basic coefficients."""
    a = poly.coefficients
    return max(_product_scale(a, m) for m in range(2 * (len(a) - 1) + 1))


def realness_defect(poly: QuatPolynomial) -> list[tuple[float, float]]:
    """Per coefficient: ``(|Vec(sum conj(A_k) A_{m-k})|, sum |A_k||A_{m-k}|)``."""
    a = poly.coefficients
    return [(q.vecnorm(), _product_scale(a, m))
            for m, q in enumerate(quaternion_form_coefficients(poly, RIGHT))]


def divide_by_real(poly: QuatPolynomial, divisor: Sequence[float]) -> tuple[QuatPolynomial, QuatPolynomial]:
    """Long division by a real polynomial, componentwise.

    Real coefficients commute with everything, so ``poly = quotient * divisor
    + remainder`` holds as a product of coefficient sequences on either side.
    """
    divisor = [float(c) for c in divisor]
    while len(divisor) > 1 and divisor[-1] == 0.0:
        divisor.pop()
    dd = len(divisor) - 1
    lead = divisor[-1]
    if lead == 0.0:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [list(c) for c in poly.coefficients]
    n = len(rem) - 1
    if n < dd:
        return QuatPolynomial((ZERO,), poly.side), poly
    quot = [[0.0] * 4 for _ in range(n - dd + 1)]
    for i in range(n - dd, -1, -1):
        coef = [x / lead for x in rem[i + dd]]
        quot[i] = coef
        for j in range(dd + 1):
            r = rem[i + j]
            for c in range(4):
                r[c] -= coef[c] * divisor[j]
    remainder = rem[:dd] if dd > 0 else [[0.0] * 4]
    return (QuatPolynomial(tuple(Quaternion(*q) for q in quot), poly.side),
            QuatPolynomial(tuple(Quaternion(*r) for r in remainder), poly.side))
