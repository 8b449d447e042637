"""Command-line front end.

Subcommands: ``solve``, ``vieta``, ``basic``, ``power``, ``gen``, ``selftest``.
JSON is the default (and the contract); ``--text`` gives an aligned
human-readable form. Floats are written with 17 significant digits so every
emitted number parses back to the same double.

Exit codes: 0 success, 2 bad input, 3 no convergence, 4 residual failure,
5 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .croots import SolverConfig, find_roots_detailed
from .errors import (DomainError, NoConvergenceError, PreconditionViolated,
                     ResidualTooLargeError, SchemaError, ZeroPolynomialError)
from .powers import power, qp_coeffs
from .qpoly import QuatPolynomial, basic_polynomial, evaluate, normalize
from .quaternion import Quaternion
from .solver import IsolatedRoot, residual_scale, solve
from .testgen import PlantIsolated, generate, oracle_residual, pure_vector_spec, random_spec
from .vieta import vieta_report

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_CONVERGENCE = 3
EXIT_RESIDUAL = 4
EXIT_PRECONDITION = 5

SELFTEST_VIETA_TOL = 1e-8


# -- output ---------------------------------------------------------------

def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float at 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ["%s%s: %s" % (pad, json.dumps(str(k)), dumps(v, indent, _level + 1))
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError("cannot serialize %r" % type(obj))


def _root_json(root, residual=None) -> dict:
    out = root.to_json()
    if residual is not None:
        out["residual"] = residual
    return out


# -- input ----------------------------------------------------------------

def _read_polynomial(args) -> QuatPolynomial:
    if args.polynomial is not None and args.input is not None:
        raise SchemaError("give the polynomial inline or with --input, not both")
    if args.polynomial is not None:
        text = args.polynomial
    elif args.input == "-" or args.input is None:
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SchemaError("cannot read %s: %s" % (args.input, exc)) from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("invalid JSON: %s" % exc) from None
    # accept the output of `gen` directly
    if isinstance(obj, dict) and "polynomial" in obj and "coefficients" not in obj:
        obj = obj["polynomial"]
    return QuatPolynomial.from_json(obj)


def _parse_quaternion(text: str) -> Quaternion:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("invalid quaternion %r: %s" % (text, exc)) from None
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return Quaternion(value)
    if (not isinstance(value, list) or len(value) != 4
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)):
        raise SchemaError("quaternion must be [x0, x1, x2, x3]")
    return Quaternion(*value)


def _config(args) -> SolverConfig:
    return SolverConfig(
        max_iterations=args.max_iter,
        residual_tol=args.tol_residual,
        sphericity_tol=args.tol_sphericity,
        real_axis_tol=args.tol_real_axis,
        seed=args.seed,
    )


# -- commands -------------------------------------------------------------

def _root_residual(poly, root) -> float:
    if isinstance(root, IsolatedRoot):
        return abs(evaluate(poly, root.point))
    return oracle_residual(poly, root, samples=0)


def cmd_solve(args, out):
    poly = _read_polynomial(args)
    cfg = _config(args)
    rs = solve(poly, cfg)
    zero, iso, sph = rs.accounting()
    report = {
        "input": poly.to_json(),
        "roots": [_root_json(r, _root_residual(rs.polynomial, r)) for r in rs.roots],
        "zero_root_multiplicity": rs.zero_root_multiplicity,
        "degree": rs.degree,
        "accounting": {
            "zero": zero, "isolated": iso, "spherical": sph,
            "balanced": rs.balanced(),
            "line": "%d + %d + 2*%d = %d" % (zero, iso, sph, rs.degree),
        },
        "diagnostics": {
            "iterations": rs.iterations,
            "basic_polynomial": list(rs.basic.coefficients) if rs.basic else [],
            "clusters": [{"x0": c.x0, "r": c.r, "complex_multiplicity": c.complex_multiplicity}
                         for c in rs.clusters],
        },
    }
    if args.check_vieta:
        report["vieta"] = vieta_report(rs).to_json()
    if args.text:
        lines = ["degree %d, zero-root multiplicity %d" % (rs.degree, rs.zero_root_multiplicity)]
        for r in rs.roots:
            res = _root_residual(rs.polynomial, r)
            if isinstance(r, IsolatedRoot):
                lines.append("isolated   %-60s mult %d  residual %.3g"
                             % (" ".join("%+.12g" % x for x in r.point), r.multiplicity, res))
            else:
                lines.append("spherical  x0 %+.12g  r %.12g%s mult %d  residual %.3g"
                             % (r.x0, r.r, " " * 14, r.multiplicity, res))
        lines.append("accounting %s" % report["accounting"]["line"])
        if args.check_vieta:
            lines.extend(_vieta_text(vieta_report(rs)))
        out.write("\n".join(lines) + "\n")
    else:
        out.write(dumps(report) + "\n")
    return EXIT_OK


def _vieta_text(rep) -> list[str]:
    rows = [("product |w_m|", rep.product_moduli_lhs, rep.product_moduli_rhs, rep.residuals[0]),
            ("sum Sc(w_m)", rep.sum_sc_lhs, rep.sum_sc_rhs, rep.residuals[1])]
    if rep.sum_sc_over_modsq_lhs is not None:
        rows.append(("sum Sc/|w|^2", rep.sum_sc_over_modsq_lhs, rep.sum_sc_over_modsq_rhs,
                     rep.residuals[2]))
    lines = ["%-16s %24s %24s %12s" % ("identity", "roots", "coefficients", "residual")]
    for name, lhs, rhs, res in rows:
        lines.append("%-16s %24.16g %24.16g %12.3g" % (name, lhs, rhs, res))
    if rep.sum_sc_over_modsq_lhs is None:
        lines.append("%-16s skipped: A_0 = 0" % "sum Sc/|w|^2")
    if rep.corollary_dots is not None:
        lines.append("all roots pure: dot(A_n, A_n-1) = %.3g, dot(A_1, A_0) = %.3g"
                     % rep.corollary_dots)
    return lines


def cmd_vieta(args, out):
    poly = _read_polynomial(args)
    rs = solve(poly, _config(args))
    rep = vieta_report(rs, require_all=args.strict)
    if args.text:
        out.write("\n".join(_vieta_text(rep)) + "\n")
    else:
        out.write(dumps({"input": poly.to_json(), "vieta": rep.to_json()}) + "\n")
    return EXIT_OK


def cmd_basic(args, out):
    poly = _read_polynomial(args)
    reduced, zero = normalize(poly)
    basic = basic_polynomial(reduced)
    report = {"input": poly.to_json(), "zero_root_multiplicity": zero,
              "basic_polynomial": list(basic.coefficients)}
    if args.roots:
        if basic.degree >= 1:
            found = find_roots_detailed(basic, _config(args))
            clusters = [{"x0": c.x0, "r": c.r, "complex_multiplicity": c.complex_multiplicity}
                        for c in found.clusters]
        else:
            clusters = []
        report["clusters"] = clusters
    if args.text:
        lines = ["B_%d = %.17g" % (m, b) for m, b in enumerate(basic.coefficients)]
        for c in report.get("clusters", []):
            lines.append("cluster x0 %+.15g  r %.15g  mult %d"
                         % (c["x0"], c["r"], c["complex_multiplicity"]))
        out.write("\n".join(lines) + "\n")
    else:
        out.write(dumps(report) + "\n")
    return EXIT_OK


def cmd_power(args, out):
    w = _parse_quaternion(args.w)
    if args.n < 0:
        raise DomainError("n must be non-negative")
    rho = w.norm2()
    table = qp_coeffs(args.n, w[0], rho) if args.n >= 1 else []
    result = power(w, args.n)
    if args.text:
        lines = ["%4s %24s %24s" % ("m", "Q_m", "P_m")]
        lines += ["%4d %24.16g %24.16g" % (m, q, p) for m, (q, p) in enumerate(table, 1)]
        lines.append("w^%d = %s" % (args.n, " ".join("%.17g" % x for x in result)))
        out.write("\n".join(lines) + "\n")
    else:
        out.write(dumps({
            "w": w.as_list(), "n": args.n, "x0": w[0], "rho": rho,
            "coefficients": [{"m": m, "Q": q, "P": p} for m, (q, p) in enumerate(table, 1)],
            "power": result.as_list(),
        }) + "\n")
    return EXIT_OK


def _spec_json(spec) -> dict:
    planted = []
    for a in spec.planted:
        if isinstance(a, PlantIsolated):
            planted.append({"type": "isolated", "point": a.w0.as_list()})
        else:
            planted.append({"type": "spherical", "x0": a.x0, "r": a.r})
    return {"seed": spec.seed, "degree_bound": spec.degree_bound,
            "coefficient_scale": spec.coefficient_scale, "planted": planted}


def cmd_gen(args, out):
    make = pure_vector_spec if args.pure else random_spec
    spec = make(args.seed, args.degree_bound, args.scale)
    poly, expected = generate(spec)
    report = {"spec": _spec_json(spec), "polynomial": poly.to_json(),
              "expected": {"roots": [r.to_json() for r in expected]}}
    out.write(dumps(report) + "\n")
    return EXIT_OK


def selftest(seed: int, count: int, cfg: SolverConfig = SolverConfig(),
             degree_bound: int = 6, scale: float = 4.0) -> dict:
    """Run generate -> solve -> oracle -> Vieta on ``count`` consecutive seeds."""
    passed = 0
    failures = []
    worst_root = 0.0
    worst_vieta = 0.0
    for s in range(seed, seed + count):
        poly, expected = generate(random_spec(s, degree_bound, scale))
        try:
            rs = solve(poly, cfg)
        except (NoConvergenceError, ResidualTooLargeError) as exc:
            failures.append({"seed": s, "reason": "%s: %s" % (type(exc).__name__, exc)})
            continue
        reasons = []
        for root in rs.roots:
            rho = root.point.norm2() if isinstance(root, IsolatedRoot) else root.x0 ** 2 + root.r ** 2
            res = oracle_residual(rs.polynomial, root, 32, s) / residual_scale(rs.reduced, rho)
            worst_root = max(worst_root, res)
            if res > cfg.residual_tol:
                reasons.append("root residual %.3g" % res)
        for exp in expected:
            probe = exp.point if isinstance(exp, IsolatedRoot) else Quaternion(exp.x0, exp.r)
            found = rs.find(probe, 1e-7)
            if found is None or type(found) is not type(exp):
                reasons.append("planted %s not recovered" % type(exp).__name__)
        if not rs.balanced():
            reasons.append("degree accounting does not balance")
        rep = vieta_report(rs)
        worst_vieta = max(worst_vieta, rep.worst())
        if rep.worst() > SELFTEST_VIETA_TOL:
            reasons.append("Vieta residual %.3g" % rep.worst())
        if reasons:
            failures.append({"seed": s, "reason": "; ".join(reasons)})
        else:
            passed += 1
    return {"seed": seed, "count": count, "passed": passed, "failed": len(failures),
            "worst_root_residual": worst_root, "worst_vieta_residual": worst_vieta,
            "failures": failures}


def cmd_selftest(args, out):
    summary = selftest(args.seed, args.count, _config(args), args.degree_bound, args.scale)
    if args.text:
        out.write("passed %d / %d   worst root residual %.3g   worst Vieta residual %.3g\n"
                  % (summary["passed"], summary["count"], summary["worst_root_residual"],
                     summary["worst_vieta_residual"]))
        for f in summary["failures"]:
            out.write("FAIL seed %d: %s\n" % (f["seed"], f["reason"]))
    else:
        out.write(dumps(summary) + "\n")
    if summary["failures"]:
        sys.stderr.write("selftest: first failing seed %d\n" % summary["failures"][0]["seed"])
        return EXIT_RESIDUAL
    return EXIT_OK


# -- parser ---------------------------------------------------------------

def _add_common(p, with_input=True):
    if with_input:
        p.add_argument("polynomial", nargs="?", help="inline polynomial JSON")
        p.add_argument("-i", "--input", help="path to polynomial JSON, or '-' for stdin")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false", help="JSON output (default)")
    fmt.add_argument("--text", dest="text", action="store_true", help="aligned text output")
    p.set_defaults(text=False)
    p.add_argument("--tol-residual", type=float, default=SolverConfig.residual_tol)
    p.add_argument("--tol-sphericity", type=float, default=SolverConfig.sphericity_tol)
    p.add_argument("--tol-real-axis", type=float, default=SolverConfig.real_axis_tol)
    p.add_argument("--max-iter", type=int, default=SolverConfig.max_iterations)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatvieta",
        description="Roots and Vieta-type identities of one-sided quaternionic polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find and classify all roots")
    _add_common(p)
    p.add_argument("--check-vieta", action="store_true", help="append the Vieta identity report")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("vieta", help="check the Vieta-type identities")
    _add_common(p)
    p.add_argument("--strict", action="store_true",
                   help="fail (exit 5) when an identity's hypotheses do not hold")
    p.set_defaults(func=cmd_vieta)

    p = sub.add_parser("basic", help="print the real basic polynomial")
    _add_common(p)
    p.add_argument("--roots", action="store_true", help="also print its root clusters")
    p.set_defaults(func=cmd_basic)

    p = sub.add_parser("power", help="power coefficients Q_m, P_m and w**n")
    _add_common(p, with_input=False)
    p.add_argument("--w", required=True, help="quaternion as JSON [x0, x1, x2, x3]")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("gen", help="emit a polynomial with planted roots")
    _add_common(p, with_input=False)
    p.add_argument("--degree-bound", type=int, default=6)
    p.add_argument("--scale", type=float, default=4.0)
    p.add_argument("--pure", action="store_true", help="all roots with zero scalar part")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="generate, solve and verify many polynomials")
    _add_common(p, with_input=False)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--degree-bound", type=int, default=6)
    p.add_argument("--scale", type=float, default=4.0)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except (SchemaError, ZeroPolynomialError, DomainError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT
    except NoConvergenceError as exc:
        sys.stderr.write("no convergence: %s\n" % exc)
        return EXIT_NO_CONVERGENCE
    except ResidualTooLargeError as exc:
        sys.stderr.write("residual too large: %s\n" % exc)
        return EXIT_RESIDUAL
    except PreconditionViolated as exc:
        sys.stderr.write("precondition violated: %s\n" % exc)
        return EXIT_PRECONDITION


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
