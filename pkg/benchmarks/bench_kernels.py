"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--count N]

Times the two hot kernels in isolation and a full generate -> solve -> Vieta
sweep under each available backend.
"""

import argparse
import time

from quatvieta import kernels
from quatvieta.croots import initial_guesses
from quatvieta.qpoly import basic_polynomial, normalize
from quatvieta.solver import solve
from quatvieta.testgen import generate, random_spec
from quatvieta.vieta import vieta_report


def _best_of(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=300)
    args = parser.parse_args()

    polys = [generate(random_spec(s))[0] for s in range(args.count)]
    reduced = [normalize(p)[0] for p in polys]
    basics = [basic_polynomial(r) for r in reduced if r.degree >= 1]
    monics = [[c / b.coefficients[-1] for c in b.coefficients] for b in basics]
    monics = [m for m in monics if len(m) > 2]
    starts = [initial_guesses(m, 0) for m in monics]

    rows = []
    backends = kernels.available_backends()
    for name, mod in backends.items():
        t_aberth = _best_of(lambda: [mod.aberth(m, g, 200, 1e-14) for m, g in zip(monics, starts)])
        t_sums = _best_of(lambda: [mod.qp_sums(r.coefficients, 0.3, 1.7)
                                   for r in reduced for _ in range(20)])
        previous = kernels.set_backend(name)
        try:
            t_solve = _best_of(lambda: [vieta_report(solve(p)) for p in polys], repeat=1)
        finally:
            kernels.set_backend(previous)
        rows.append((name, t_aberth, t_sums, t_solve))

    print("%-8s %14s %14s %14s" % ("backend", "aberth [s]", "qp_sums [s]", "sweep [s]"))
    for name, a, s, v in rows:
        print("%-8s %14.4f %14.4f %14.4f" % (name, a, s, v))
    if len(rows) == 2:
        (_, a0, s0, v0), (_, a1, s1, v1) = rows
        print("speedup  %13.1fx %13.1fx %13.1fx" % (a0 / a1, s0 / s1, v0 / v1))


if __name__ == "__main__":
    main()
