"""Complex roots of real polynomials, grouped into conjugate-pair clusters.

The roots are found all at once by Aberth-Ehrlich iteration on the monic
polynomial, symmetrized under complex conjugation, then merged into
clusters whose size is the multiplicity. Only clusters in the closed upper
half-plane are reported; the lower half is implied.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from . import kernels
from .errors import ClusterError, DegenerateInputError, DomainError, NoConvergenceError
from .qpoly import RealPolynomial

__all__ = ["SolverConfig", "ComplexRootCluster", "RootFinderResult", "find_roots",
           "find_roots_detailed", "initial_guesses", "cauchy_bound"]


@dataclass(frozen=True)
class SolverConfig:
    """Numerical knobs shared by the root finder and the quaternion solver."""

    max_iterations: int = 200
    convergence_tol: float = 1e-14
    cluster_radius: float = 1e-6
    real_axis_tol: float = 1e-9
    multiplicity_tol: float = 1e-10
    sphericity_tol: float = 1e-8
    residual_tol: float = 1e-8
    seed: int = 0

    def __post_init__(self):
        for name in ("convergence_tol", "cluster_radius", "real_axis_tol", "multiplicity_tol",
                     "sphericity_tol", "residual_tol"):
            if not getattr(self, name) > 0:
                raise DomainError("%s must be positive" % name)
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be >= 1")


@dataclass(frozen=True)
class ComplexRootCluster:
    x0: float
    r: float
    complex_multiplicity: int

    @property
    def root(self) -> complex:
        return complex(self.x0, self.r)


@dataclass(frozen=True)
class RootFinderResult:
    clusters: tuple[ComplexRootCluster, ...]
    roots: tuple[complex, ...]
    raw_roots: tuple[complex, ...]
    iterations: int
    worst_residual: float


def cauchy_bound(coeffs) -> float:
    lead = coeffs[-1]
    return 1.0 + max((abs(c / lead) for c in coeffs[:-1]), default=0.0)


def initial_guesses(coeffs, seed: int) -> list[complex]:
    """Points on the Cauchy-bound circle, rotated by a seeded angle.

    The rotation stays away from multiples of ``pi / d`` so no start lies
    on the real axis and the start set is not conjugate-symmetric.
    """
    d = len(coeffs) - 1
    radius = cauchy_bound(coeffs)
    step = 2.0 * math.pi / d
    phase = (0.2 + 0.2 * random.Random(seed).random()) * step
    return [cmath.rect(radius, phase + k * step) for k in range(d)]


def _snap_conjugates(roots: list[complex], real_tol: float) -> list[complex]:
    out = []
    upper, lower = [], []
    for z in roots:
        if abs(z.imag) <= real_tol * max(1.0, abs(z)):
            out.append(complex(z.real, 0.0))
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)
    # greedy nearest matching of each upper root with a mirrored lower root
    mirrored = [z.conjugate() for z in lower]
    pairs = sorted(
        ((abs(u - m), iu, im) for iu, u in enumerate(upper) for im, m in enumerate(mirrored)),
    )
    used_u, used_m = set(), set()
    for _, iu, im in pairs:
        if iu in used_u or im in used_m:
            continue
        used_u.add(iu)
        used_m.add(im)
        avg = 0.5 * (upper[iu] + mirrored[im])
        out.append(avg)
        out.append(avg.conjugate())
    # an unpaired root cannot be one half of a conjugate pair; project it
    for iu, u in enumerate(upper):
        if iu not in used_u:
            out.append(complex(u.real, 0.0))
    for im, m in enumerate(mirrored):
        if im not in used_m:
            out.append(complex(m.real, 0.0))
    return out


def _cluster(roots: list[complex], radius: float, accept=None) -> list[list[complex]]:
    """Single-linkage merging with a size-dependent radius ``radius**(1/m)``.

    ``accept(members)``, when given, must also approve each merge.
    """
    n = len(roots)
    parent = list(range(n))
    size = [1] * n

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges = sorted((abs(roots[a] - roots[b]), a, b) for a in range(n) for b in range(a + 1, n))
    for dist, a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        m = size[ra] + size[rb]
        scale = max(1.0, abs(roots[a]), abs(roots[b]))
        if dist > radius ** (1.0 / m) * scale:
            continue
        if accept is not None:
            members = [roots[i] for i in range(n) if find(i) in (ra, rb)]
            if not accept(members):
                continue
        parent[rb] = ra
        size[ra] = m
    groups: dict[int, list[complex]] = {}
    for idx in range(n):
        groups.setdefault(find(idx), []).append(roots[idx])
    return list(groups.values())


def _derivative(coeffs, order):
    c = list(coeffs)
    for _ in range(order):
        c = [k * c[k] for k in range(1, len(c))]
    return c


def _refine_center(coeffs, z: complex, m: int, radius: float) -> complex:
    """Newton on the (m-1)-th derivative, where an m-fold root is simple.

    The mean of a cluster is only accurate to about eps**(1/m); the refined
    centre is kept only if it stays inside the cluster's own radius.
    """
    if m < 2:
        return z
    d0 = _derivative(coeffs, m - 1)
    d1 = _derivative(d0, 1)
    if len(d1) == 0:
        return z
    w = z
    for _ in range(20):
        f = kernels.horner_real(d0, w)
        df = kernels.horner_real(d1, w)
        if df == 0:
            break
        step = f / df
        w = w - step
        if abs(step) <= 4.0 * 2.220446049250313e-16 * max(1.0, abs(w)):
            break
    if abs(w - z) <= radius ** (1.0 / m) * max(1.0, abs(z)):
        return w
    return z


def _taylor(coeffs, c, order):
    """First ``order + 1`` Taylor coefficients ``p^(j)(c) / j!`` by repeated synthetic division."""
    a = list(reversed(coeffs))
    out = []
    for _ in range(order + 1):
        acc = 0.0 * c
        quotient = []
        for coef in a:
            acc = acc * c + coef
            quotient.append(acc)
        out.append(quotient[-1])
        a = quotient[:-1]
        if not a:
            break
    return out


def _is_multiple_root(coeffs, members, radius: float, tol: float) -> bool:
    """True if ``members`` look like one root of multiplicity ``len(members)``.

    Two nearby distinct roots pass a pure distance test; they fail here
    because some low-order Taylor coefficient at the refined centre stays
    well above the rounding level.
    """
    m = len(members)
    centre = _refine_center(coeffs, sum(members) / m, m, radius)
    t = _taylor(coeffs, centre, m - 1)
    bounds = _taylor([abs(c) for c in coeffs], abs(centre), m - 1)
    return all(abs(tj) <= tol * bj for tj, bj in zip(t, bounds))


def find_roots_detailed(p: RealPolynomial, cfg: SolverConfig = SolverConfig()) -> RootFinderResult:
    coeffs = p.coefficients
    if len(coeffs) < 2:
        raise DegenerateInputError("polynomial of degree 0 has no roots")
    lead = coeffs[-1]
    if lead == 0.0:
        raise DegenerateInputError("leading coefficient is zero")
    monic = [c / lead for c in coeffs]
    d = len(monic) - 1
    if d == 1:
        raw = [complex(-monic[0], 0.0)]
        iterations, worst = 0, 0.0
    else:
        raw, iterations, worst, converged = kernels.aberth(
            monic, initial_guesses(monic, cfg.seed), cfg.max_iterations, cfg.convergence_tol)
        if not converged:
            raise NoConvergenceError(
                "root iteration did not converge in %d iterations (worst residual %.3g)"
                % (iterations, worst), iterations=iterations, residual=worst)
    snapped = _snap_conjugates(raw, cfg.real_axis_tol)
    clusters = []
    accept = lambda members: _is_multiple_root(monic, members, cfg.cluster_radius,
                                               cfg.multiplicity_tol)
    for group in _cluster(snapped, cfg.cluster_radius, accept):
        ims = [z.imag for z in group]
        m = len(group)
        if min(ims) > 0:
            centre = complex(sum(z.real for z in group) / m, sum(ims) / m)
            centre = _refine_center(monic, centre, m, cfg.cluster_radius)
            clusters.append(ComplexRootCluster(centre.real, abs(centre.imag), m))
        elif max(ims) >= 0:
            # straddles or touches the real axis: self-conjugate cluster
            centre = sum(z.real for z in group) / m
            centre = _refine_center(monic, centre, m, cfg.cluster_radius)
            clusters.append(ComplexRootCluster(float(centre.real), 0.0, m))
    count = sum(2 * c.complex_multiplicity if c.r > 0 else c.complex_multiplicity
                for c in clusters)
    if count != d:
        raise ClusterError("clusters account for %d of %d roots" % (count, d),
                           iterations=iterations, residual=worst)
    clusters.sort(key=lambda c: (c.x0, c.r))
    return RootFinderResult(tuple(clusters), tuple(snapped), tuple(raw), iterations, worst)


def find_roots(p: RealPolynomial, cfg: SolverConfig = SolverConfig()) -> list[ComplexRootCluster]:
    """Conjugate-pair clusters of the roots of ``p``.

    Examples
    --------
    >>> find_roots(RealPolynomial((1.0, 0.0, 2.0, 0.0, 1.0)))
    [ComplexRootCluster(x0=0.0, r=1.0, complex_multiplicity=2)]
    """
    return list(find_roots_detailed(p, cfg).clusters)
