"""Pure-Python implementations of the numerical kernels.

These are the reference versions; ``_ckernels.pyx`` mirrors them operation
for operation. Keep the two in sync.
"""

_EPS = 2.220446049250313e-16


def qp_sums(coeffs, x0, rho):
    """Return ``(S, T)`` with ``S = sum A_m Q_m``, ``T = sum A_m P_m`` over m >= 1.

    ``coeffs`` is a sequence of 4-sequences ``A_0 .. A_n``; ``Q_m``, ``P_m``
    follow the recurrence started at ``Q_1 = 1, P_1 = 0``.
    """
    s0 = s1 = s2 = s3 = 0.0
    t0 = t1 = t2 = t3 = 0.0
    q, p = 1.0, 0.0
    two_x0 = 2.0 * x0
    for m in range(1, len(coeffs)):
        if m > 1:
            q, p = two_x0 * q - p * rho, q
        a = coeffs[m]
        s0 += a[0] * q
        s1 += a[1] * q
        s2 += a[2] * q
        s3 += a[3] * q
        t0 += a[0] * p
        t1 += a[1] * p
        t2 += a[2] * p
        t3 += a[3] * p
    return (s0, s1, s2, s3), (t0, t1, t2, t3)


def _horner(coeffs, absc, z):
    d = len(coeffs) - 1
    p = complex(coeffs[d])
    dp = 0j
    az = abs(z)
    bound = absc[d]
    for i in range(d - 1, -1, -1):
        dp = dp * z + p
        p = p * z + coeffs[i]
        bound = bound * az + absc[i]
    return p, dp, bound


def aberth(coeffs, guesses, max_iter, tol):
    """Aberth-Ehrlich simultaneous iteration, Gauss-Seidel ordering.

    Parameters
    ----------
    coeffs : sequence of float
        Ascending coefficients, ``coeffs[-1] != 0``.
    guesses : sequence of complex
        One starting point per root, pairwise distinct.
    max_iter : int
    tol : float
        A root is frozen once ``|p(z)| <= tol * sum |c_m| |z|^m`` or its
        correction drops to rounding level.

    Returns
    -------
    roots : list of complex
    iterations : int
    worst : float
        Largest relative residual ``|p(z)| / sum |c_m||z|^m`` at exit.
    converged : bool
    """
    d = len(coeffs) - 1
    absc = [abs(c) for c in coeffs]
    z = [complex(g) for g in guesses]
    active = [True] * d
    iterations = 0
    converged = d == 0
    for it in range(1, max_iter + 1):
        iterations = it
        moved = False
        for k in range(d):
            if not active[k]:
                continue
            zk = z[k]
            p, dp, bound = _horner(coeffs, absc, zk)
            if abs(p) <= tol * bound:
                active[k] = False
                continue
            s = 0j
            for j in range(d):
                if j != k:
                    diff = zk - z[j]
                    if diff != 0:
                        s += 1.0 / diff
            if dp == 0:
                # stationary point: nudge off it
                delta = complex(1e-8 * max(1.0, abs(zk)), 1e-8)
            else:
                ratio = p / dp
                denom = 1.0 - ratio * s
                delta = ratio / denom if denom != 0 else ratio
            znew = zk - delta
            z[k] = znew
            moved = True
            if abs(delta) <= 4.0 * _EPS * abs(znew):
                active[k] = False
        if not moved:
            converged = True
            break
    worst = 0.0
    for zk in z:
        p, _, bound = _horner(coeffs, absc, zk)
        if bound > 0:
            worst = max(worst, abs(p) / bound)
    if not converged:
        converged = all(not a for a in active)
    return z, iterations, worst, converged


def horner_real(coeffs, x):
    """Evaluate a real ascending-coefficient polynomial at ``x`` (real or complex)."""
    acc = 0.0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc

