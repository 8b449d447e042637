"""Polynomials with planted roots, and an evaluation oracle independent of the solver.

Two facts make planting exact:

* a real quadratic ``w**2 - 2 x0 w + (x0**2 + r**2)`` vanishes on the whole
  sphere ``Sc(w) = x0, |Vec(w)| = r``, and real coefficients commute with
  everything, so convolving by it keeps that sphere a root set;
* for the right polynomial ``P * (w - w0)`` (coefficient product with the
  linear factor rightmost) the value at ``w0`` is zero, since ``w0`` commutes
  with its own powers.

Only the last linear factor keeps its root; earlier non-real linear factors
get their roots moved by what follows, so they are never claimed.

Random numbers come from xoshiro256** seeded through splitmix64, so a
given seed yields the same polynomials on every platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError
from .powers import power_by_multiplication
from .qpoly import RIGHT, QuatPolynomial
from .quaternion import ONE, ZERO, Quaternion, as_quaternion, mul
from .solver import SPHERE_PROBES, IsolatedRoot, SphericalRoot, sphere_point

__all__ = [
    "Xoshiro256",
    "PlantIsolated",
    "PlantSphere",
    "GeneratorSpec",
    "convolve",
    "plant_isolated",
    "central_quadratic",
    "generate",
    "random_spec",
    "pure_vector_spec",
    "brute_eval",
    "oracle_residual",
]

_MASK = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


class Xoshiro256:
    """xoshiro256** 1.0 (Blackman and Vigna), state filled by splitmix64."""

    def __init__(self, seed: int = 0, stream: int = 0):
        sm = (int(seed) ^ (int(stream) * 0xD1B54A32D192ED03)) & _MASK
        s = []
        for _ in range(4):
            sm, out = _splitmix64(sm)
            s.append(out)
        self.s = s

    @classmethod
    def from_state(cls, state) -> Xoshiro256:
        obj = cls.__new__(cls)
        obj.s = [int(x) & _MASK for x in state]
        return obj

    def next_u64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & _MASK, 7) * 9) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Integer in ``[lo, hi]`` inclusive (modulo bias is negligible here)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def quaternion(self, scale: float) -> Quaternion:
        return Quaternion(*(self.uniform(-scale, scale) for _ in range(4)))

    def unit_pure(self) -> Quaternion:
        z = self.uniform(-1.0, 1.0)
        phi = self.uniform(0.0, 2.0 * math.pi)
        s = math.sqrt(max(0.0, 1.0 - z * z))
        return Quaternion(0.0, s * math.cos(phi), s * math.sin(phi), z)


@dataclass(frozen=True)
class PlantIsolated:
    w0: Quaternion


@dataclass(frozen=True)
class PlantSphere:
    x0: float
    r: float


PlantAction = Union[PlantIsolated, PlantSphere]


@dataclass(frozen=True)
class GeneratorSpec:
    seed: int = 0
    degree_bound: int = 6
    coefficient_scale: float = 4.0
    planted: tuple = ()
    # explicit filler factor; drawn at random when None
    filler: QuatPolynomial | None = None
    side: str = RIGHT

    def __post_init__(self):
        object.__setattr__(self, "planted", tuple(self.planted))
        isolated = [k for k, a in enumerate(self.planted) if isinstance(a, PlantIsolated)]
        if len(isolated) > 1:
            raise DomainError("at most one isolated root can be planted")
        if isolated and isolated[0] != len(self.planted) - 1:
            raise DomainError("the isolated plant must be the last action")


def convolve(p: QuatPolynomial, q: QuatPolynomial) -> QuatPolynomial:
    """Coefficient product ``C_j = sum_k p_k q_{j-k}`` (p's coefficients on the left)."""
    if p.side != q.side:
        raise ValueError("convolution needs polynomials of the same side")
    a, b = p.coefficients, q.coefficients
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + mul(x, y)
    return QuatPolynomial(tuple(out), p.side)


def plant_isolated(prefix: QuatPolynomial, w0) -> QuatPolynomial:
    """``prefix * (w - w0)``; for a right polynomial ``w0`` is then a root."""
    w0 = as_quaternion(w0)
    return convolve(prefix, QuatPolynomial((-w0, ONE), prefix.side))


def central_quadratic(x0: float, r: float, side: str = RIGHT) -> QuatPolynomial:
    """``w**2 - 2 x0 w + (x0**2 + r**2)``: vanishes on the sphere ``(x0, r)``."""
    if not r > 0:
        raise DomainError("sphere radius must be positive, got %r" % (r,))
    return QuatPolynomial((Quaternion(x0 * x0 + r * r), Quaternion(-2.0 * x0), ONE), side)


def _random_poly(rng: Xoshiro256, degree: int, scale: float, side: str) -> QuatPolynomial:
    coeffs = [rng.quaternion(scale) for _ in range(degree + 1)]
    # keep the leading and constant coefficients away from zero
    for idx in {0, degree}:
        while abs(coeffs[idx]) < 0.1 * scale:
            coeffs[idx] = rng.quaternion(scale)
    return QuatPolynomial(tuple(coeffs), side)


def generate(spec: GeneratorSpec) -> tuple[QuatPolynomial, tuple]:
    """Build the polynomial described by ``spec``.

    Returns the polynomial and the roots it is guaranteed to have: every
    planted sphere (repeated spheres merged into one with multiplicity) and
    the planted point, if any.
    """
    side = spec.side
    spheres = [a for a in spec.planted if isinstance(a, PlantSphere)]
    isolated = [a for a in spec.planted if isinstance(a, PlantIsolated)]
    if isolated and side != RIGHT:
        raise DomainError("isolated roots can only be planted in right polynomials")
    poly = QuatPolynomial((ONE,), side)
    for s in spheres:
        poly = convolve(poly, central_quadratic(s.x0, s.r, side))
    if spec.filler is not None:
        filler = spec.filler.with_side(side)
    else:
        deg = spec.degree_bound - 2 * len(spheres) - len(isolated)
        if deg < 0:
            raise DomainError("planted roots exceed the degree bound")
        filler = _random_poly(Xoshiro256(spec.seed, stream=1), deg, spec.coefficient_scale, side)
    poly = convolve(poly, filler)
    if isolated:
        poly = plant_isolated(poly, isolated[0].w0)

    expected = []
    counts: dict[tuple[float, float], int] = {}
    for s in spheres:
        counts[(s.x0, s.r)] = counts.get((s.x0, s.r), 0) + 1
    for (x0, r), mult in counts.items():
        expected.append(SphericalRoot(x0, r, mult))
    if isolated:
        expected.append(IsolatedRoot(as_quaternion(isolated[0].w0), 1))
    return poly, tuple(expected)


def random_spec(seed: int, degree_bound: int = 6, coefficient_scale: float = 4.0) -> GeneratorSpec:
    """A seeded mix of spheres, random filler and an optional final point."""
    rng = Xoshiro256(seed)
    half = 0.5 * coefficient_scale
    degree = rng.randint(1, degree_bound)
    n_spheres = rng.randint(0, degree // 2)
    plant_point = degree - 2 * n_spheres >= 1 and rng.random() < 0.75
    planted: list = [PlantSphere(rng.uniform(-half, half), rng.uniform(0.25, 0.25 + half))
                     for _ in range(n_spheres)]
    if plant_point:
        planted.append(PlantIsolated(rng.quaternion(half)))
    return GeneratorSpec(seed, degree, coefficient_scale, tuple(planted))


def pure_vector_spec(seed: int, degree_bound: int = 6, coefficient_scale: float = 4.0) -> GeneratorSpec:
    """Spheres centred at ``x0 = 0``, a constant filler and a final pure point.

    Every root of the result has zero scalar part.
    """
    rng = Xoshiro256(seed, stream=2)
    half = 0.5 * coefficient_scale
    n_spheres = rng.randint(0, (degree_bound - 1) // 2)
    planted: list = [PlantSphere(0.0, rng.uniform(0.25, 0.25 + half)) for _ in range(n_spheres)]
    w0 = rng.quaternion(half)
    planted.append(PlantIsolated(Quaternion(0.0, w0[1], w0[2], w0[3])))
    return GeneratorSpec(seed, 2 * n_spheres + 1, coefficient_scale, tuple(planted))


def brute_eval(poly: QuatPolynomial, w) -> Quaternion:
    """Direct evaluation with every power formed by repeated multiplication."""
    w = as_quaternion(w)
    acc = ZERO
    for m, a in enumerate(poly.coefficients):
        wm = power_by_multiplication(w, m)
        acc = acc + (mul(a, wm) if poly.side == RIGHT else mul(wm, a))
    return acc


def oracle_residual(poly: QuatPolynomial, root, samples: int = 32, seed: int = 0) -> float:
    """``|poly(root)|`` for a point; the worst over sampled directions for a sphere.

    Sphere probes are the fixed axis set plus ``samples`` seeded random unit
    pure quaternions.
    """
    if isinstance(root, IsolatedRoot):
        return abs(brute_eval(poly, root.point))
    rng = Xoshiro256(seed, stream=3)
    dirs = list(SPHERE_PROBES) + [rng.unit_pure() for _ in range(samples)]
    return max(abs(brute_eval(poly, sphere_point(root.x0, root.r, u))) for u in dirs)

