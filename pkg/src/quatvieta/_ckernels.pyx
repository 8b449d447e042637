# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Same signatures, same operation order; results agree with the Python
reference to rounding.
"""

from libc.stdlib cimport malloc, free
from libc.math cimport fabs

cdef extern from "complex.h":
    double cabs(double complex z) nogil
    double creal(double complex z) nogil
    double cimag(double complex z) nogil

cdef double _EPS = 2.220446049250313e-16


def qp_sums(coeffs, double x0, double rho):
    cdef double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0
    cdef double t0 = 0.0, t1 = 0.0, t2 = 0.0, t3 = 0.0
    cdef double q = 1.0, p = 0.0, qn
    cdef double two_x0 = 2.0 * x0
    cdef double a0, a1, a2, a3
    cdef Py_ssize_t m, n = len(coeffs)
    for m in range(1, n):
        if m > 1:
            qn = two_x0 * q - p * rho
            p = q
            q = qn
        a0, a1, a2, a3 = coeffs[m]
        s0 += a0 * q
        s1 += a1 * q
        s2 += a2 * q
        s3 += a3 * q
        t0 += a0 * p
        t1 += a1 * p
        t2 += a2 * p
        t3 += a3 * p
    return (s0, s1, s2, s3), (t0, t1, t2, t3)


cdef inline void _horner(const double* c, const double* absc, Py_ssize_t d,
                         double complex z, double complex* p_out,
                         double complex* dp_out, double* bound_out) nogil:
    cdef double complex p = c[d]
    cdef double complex dp = 0
    cdef double az = cabs(z)
    cdef double bound = absc[d]
    cdef Py_ssize_t i
    for i in range(d - 1, -1, -1):
        dp = dp * z + p
        p = p * z + c[i]
        bound = bound * az + absc[i]
    p_out[0] = p
    dp_out[0] = dp
    bound_out[0] = bound


def aberth(coeffs, guesses, int max_iter, double tol):
    cdef Py_ssize_t d = len(coeffs) - 1
    cdef Py_ssize_t k, j, i
    cdef int it, iterations = 0
    cdef bint moved, converged = d == 0
    cdef double complex zk, p, dp, s, diff, ratio, denom, delta, znew
    cdef double bound, worst = 0.0, az
    cdef double* c = <double*> malloc((d + 1) * sizeof(double))
    cdef double* absc = <double*> malloc((d + 1) * sizeof(double))
    cdef double complex* z = <double complex*> malloc((d + 1) * sizeof(double complex))
    cdef char* active = <char*> malloc((d + 1) * sizeof(char))
    if c == NULL or absc == NULL or z == NULL or active == NULL:
        free(c); free(absc); free(z); free(active)
        raise MemoryError()
    try:
        for i in range(d + 1):
            c[i] = coeffs[i]
            absc[i] = fabs(c[i])
        for k in range(d):
            z[k] = complex(guesses[k])
            active[k] = 1
        with nogil:
            for it in range(1, max_iter + 1):
                iterations = it
                moved = False
                for k in range(d):
                    if not active[k]:
                        continue
                    zk = z[k]
                    _horner(c, absc, d, zk, &p, &dp, &bound)
                    if cabs(p) <= tol * bound:
                        active[k] = 0
                        continue
                    s = 0
                    for j in range(d):
                        if j != k:
                            diff = zk - z[j]
                            if diff != 0:
                                s = s + 1.0 / diff
                    az = cabs(zk)
                    if dp == 0:
                        delta = (1e-8 * (az if az > 1.0 else 1.0)) + 1e-8j
                    else:
                        ratio = p / dp
                        denom = 1.0 - ratio * s
                        if denom != 0:
                            delta = ratio / denom
                        else:
                            delta = ratio
                    znew = zk - delta
                    z[k] = znew
                    moved = True
                    if cabs(delta) <= 4.0 * _EPS * cabs(znew):
                        active[k] = 0
                if not moved:
                    converged = True
                    break
            for k in range(d):
                _horner(c, absc, d, z[k], &p, &dp, &bound)
                if bound > 0 and cabs(p) / bound > worst:
                    worst = cabs(p) / bound
        if not converged:
            converged = True
            for k in range(d):
                if active[k]:
                    converged = False
                    break
        roots = [complex(creal(z[k]), cimag(z[k])) for k in range(d)]
    finally:
        free(c); free(absc); free(z); free(active)
    return roots, iterations, worst, bool(converged)


def horner_real(coeffs, x):
    acc = 0.0 * x
    for cf in reversed(coeffs):
        acc = acc * x + cf
    return acc
