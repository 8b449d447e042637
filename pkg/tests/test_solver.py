import pytest

from quatvieta.croots import ComplexRootCluster, SolverConfig
from quatvieta.errors import ClusterError, ResidualTooLargeError, ZeroPolynomialError
from quatvieta.qpoly import LEFT, QuatPolynomial, evaluate
from quatvieta.quaternion import I, J, K, ONE, ZERO, Quaternion
from quatvieta.solver import (IsolatedRoot, SphericalRoot, classify_cluster, conjugate_root_check,
                              criterion_sums, residual_scale, solve)
from quatvieta.testgen import GeneratorSpec, PlantIsolated, PlantSphere, Xoshiro256, generate, random_spec

from helpers import qclose

LINEAR = QuatPolynomial((J, I))
UNIT_SPHERE = QuatPolynomial.from_lists([1, 0, 1])
REAL_DOUBLE = QuatPolynomial.from_lists([1, -2, 1])
MIXED = QuatPolynomial((-2 * I, ONE, -2 * I, ONE))


def test_criterion_sums_examples(backend):
    assert criterion_sums(LINEAR, 0.0, 1.0) == (I, ZERO)
    assert criterion_sums(UNIT_SPHERE, 0.0, 1.0) == (ZERO, ONE)
    assert criterion_sums(REAL_DOUBLE, 1.0, 1.0) == (ZERO, ONE)
    assert criterion_sums(LINEAR.with_side(LEFT), 0.0, 1.0) == (I, ZERO)


def test_classify_cluster_examples():
    [root] = classify_cluster(LINEAR, ComplexRootCluster(0.0, 1.0, 1))
    assert isinstance(root, IsolatedRoot) and qclose(root.point, K) and root.multiplicity == 1
    assert classify_cluster(UNIT_SPHERE, ComplexRootCluster(0.0, 1.0, 2)) == [SphericalRoot(0.0, 1.0, 1)]
    assert classify_cluster(REAL_DOUBLE, ComplexRootCluster(1.0, 0.0, 2)) == [IsolatedRoot(ONE, 1)]


def test_classify_cluster_errors():
    with pytest.raises(ClusterError):
        classify_cluster(REAL_DOUBLE, ComplexRootCluster(1.0, 0.0, 1))
    # S vanishes at (0, 2) but the radius-2 sphere is not a root set
    with pytest.raises(ResidualTooLargeError):
        classify_cluster(UNIT_SPHERE, ComplexRootCluster(0.0, 2.0, 2))


def test_solve_linear(backend):
    rs = solve(LINEAR)
    assert rs.degree == 1 and len(rs.roots) == 1
    assert qclose(rs.roots[0].point, K, 1e-12)


def test_solve_sphere():
    rs = solve(UNIT_SPHERE)
    [root] = rs.roots
    assert isinstance(root, SphericalRoot) and root.multiplicity == 1
    assert abs(root.x0) <= 1e-12 and abs(root.r - 1) <= 1e-12


@pytest.mark.parametrize("side", ["right", "left"])
def test_solve_mixed(side):
    rs = solve(MIXED.with_side(side))
    assert rs.degree == 3 and rs.balanced()
    sphere, point = rs.spherical(), rs.isolated()
    assert len(sphere) == 1 and abs(sphere[0].r - 1) <= 1e-10 and abs(sphere[0].x0) <= 1e-10
    assert len(point) == 1 and qclose(point[0].point, 2 * I, 1e-10)


def test_left_linear_is_mirrored():
    rs = solve(LINEAR.with_side(LEFT))
    [root] = rs.roots
    assert qclose(root.point, -K, 1e-12)
    assert abs(evaluate(LINEAR.with_side(LEFT), root.point)) <= 1e-12


def test_real_double_root():
    rs = solve(REAL_DOUBLE)
    assert rs.roots == (IsolatedRoot(ONE, 2),) or (
        len(rs.roots) == 1 and qclose(rs.roots[0].point, ONE, 1e-10)
        and rs.roots[0].multiplicity == 2)


def test_double_sphere_and_point_on_sphere():
    # (w^2 + 1)(w - i): the point i lies on the sphere
    poly, _ = generate(GeneratorSpec(planted=(PlantSphere(0, 1), PlantIsolated(I)),
                                     filler=QuatPolynomial((ONE,))))
    rs = solve(poly)
    assert rs.balanced()
    assert [type(r) for r in rs.roots] == [SphericalRoot, IsolatedRoot]
    assert qclose(rs.roots[1].point, I, 1e-7)
    poly, _ = generate(GeneratorSpec(planted=(PlantSphere(0.5, 2), PlantSphere(0.5, 2)),
                                     filler=QuatPolynomial((ONE,))))
    rs = solve(poly)
    assert len(rs.roots) == 1 and rs.roots[0].multiplicity == 2


def test_zero_roots():
    rs = solve(QuatPolynomial((ZERO, ZERO, J, I)))
    assert rs.zero_root_multiplicity == 2 and rs.degree == 3
    assert rs.accounting() == (2, 1, 0)
    assert rs.find(ZERO) == IsolatedRoot(ZERO, 2)
    rs = solve(QuatPolynomial((ZERO, I)))
    assert rs.roots == () and rs.zero_root_multiplicity == 1
    with pytest.raises(ZeroPolynomialError):
        solve(QuatPolynomial((ZERO, ZERO)))


def test_constant_has_no_roots():
    rs = solve(QuatPolynomial((J,)))
    assert rs.roots == () and rs.degree == 0


def test_conjugate_root_check():
    assert conjugate_root_check(solve(UNIT_SPHERE), I)
    assert isinstance(solve(UNIT_SPHERE).find(I), SphericalRoot)
    assert not conjugate_root_check(solve(LINEAR), K)
    rs = solve(REAL_DOUBLE)
    assert conjugate_root_check(rs, ONE) and ONE.vecnorm() == 0


def test_json_shape():
    doc = solve(UNIT_SPHERE).to_json()
    assert doc["degree"] == 2 and doc["zero_root_multiplicity"] == 0
    [root] = doc["roots"]
    assert root["type"] == "spherical" and root["multiplicity"] == 1
    assert root["x0"] == pytest.approx(0.0, abs=1e-15) and root["r"] == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(ValueError):
        SphericalRoot(0.0, 0.0)


@pytest.mark.parametrize("seed", range(150))
def test_generated_invariants(seed):
    poly, expected = generate(random_spec(seed))
    rs = solve(poly)
    cfg = SolverConfig()
    assert rs.balanced()
    clusters = {(c.x0, c.r): c for c in rs.clusters}
    rng = Xoshiro256(seed, stream=9)
    for root in rs.roots:
        if isinstance(root, IsolatedRoot):
            # the point lies on the sphere of one of the clusters
            sc, vn = root.point[0], root.point.vecnorm()
            assert any(abs(sc - x0) <= 1e-8 * max(1, abs(x0)) and abs(vn - r) <= 1e-8 * max(1, r)
                       for x0, r in clusters)
        else:
            scale = residual_scale(rs.reduced, root.x0 ** 2 + root.r ** 2)
            for _ in range(32):
                w = root.point(rng.unit_pure())
                assert abs(evaluate(rs.reduced, w)) <= cfg.residual_tol * scale
    for exp in expected:
        probe = exp.point if isinstance(exp, IsolatedRoot) else Quaternion(exp.x0, exp.r)
        assert type(rs.find(probe)) is type(exp)


def test_solve_is_deterministic():
    poly, _ = generate(random_spec(7))
    assert solve(poly) == solve(poly)
