import math

from quatvieta.quaternion import Quaternion


def qclose(a, b, tol=1e-12):
    return all(math.isclose(x, y, rel_tol=0.0, abs_tol=tol) for x, y in zip(a, b))


def q(*xs):
    return Quaternion(*xs)


def real_convolve(a, b):
    out = [0.0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
