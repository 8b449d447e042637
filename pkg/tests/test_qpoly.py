import random

import pytest
from hypothesis import given, settings, strategies as st

from quatvieta.errors import SchemaError, ZeroPolynomialError
from quatvieta.qpoly import (LEFT, RIGHT, QuatPolynomial, RealPolynomial, basic_polynomial,
                             coefficient_product_scale, divide_by_real, evaluate, normalize,
                             form_symmetry_check, quaternion_form_coefficients, realness_defect)
from quatvieta.quaternion import I, J, K, ONE, ZERO, Quaternion
from quatvieta.testgen import brute_eval

from helpers import qclose, real_convolve

LINEAR = QuatPolynomial((J, I))                      # i w + j
UNIT_SPHERE = QuatPolynomial.from_lists([1, 0, 1])   # w^2 + 1


def random_poly(rng, degree, scale=4.0, side=RIGHT):
    return QuatPolynomial(tuple(Quaternion(*(rng.uniform(-scale, scale) for _ in range(4)))
                                for _ in range(degree + 1)), side)


def test_eval_examples(backend):
    assert qclose(evaluate(LINEAR, K), ZERO)
    assert qclose(evaluate(UNIT_SPHERE, J), ZERO)
    a0 = Quaternion(1, -2, 3, 0.5)
    assert evaluate(QuatPolynomial((a0,)), Quaternion(9, 1, 1, 1)) == a0
    assert LINEAR(K) == evaluate(LINEAR, K)


def test_left_evaluation_order():
    # w i + j at w = -k: (-k) i + j = -j + j = 0, while i(-k) + j = 2j
    assert qclose(evaluate(LINEAR.with_side(LEFT), -K), ZERO)
    assert qclose(evaluate(LINEAR, -K), 2 * J)


@settings(max_examples=100)
@given(st.integers(0, 2 ** 32), st.integers(0, 6), st.sampled_from([RIGHT, LEFT]))
def test_eval_matches_brute_force(seed, degree, side):
    rng = random.Random(seed)
    p = random_poly(rng, degree, side=side)
    w = Quaternion(*(rng.uniform(-1.5, 1.5) for _ in range(4)))
    scale = p.coefficient_scale(abs(w))
    assert abs(evaluate(p, w) - brute_eval(p, w)) <= 1e-13 * scale


@given(st.integers(0, 2 ** 32))
def test_eval_linearity(seed):
    rng = random.Random(seed)
    p, q = random_poly(rng, 4, 1.0), random_poly(rng, 2, 1.0)
    w = Quaternion(*(rng.uniform(-1, 1) for _ in range(4)))
    assert qclose(evaluate(p + q, w), evaluate(p, w) + evaluate(q, w), 1e-13)


def test_normalize_examples():
    assert normalize(QuatPolynomial((ZERO, I))) == (QuatPolynomial((I,)), 1)
    assert normalize(QuatPolynomial((J, I))) == (QuatPolynomial((J, I)), 0)
    assert normalize(QuatPolynomial.from_lists([0, 0, 1])) == (QuatPolynomial((ONE,)), 2)
    assert normalize(QuatPolynomial((J, I, ZERO, ZERO)))[0].degree == 1
    with pytest.raises(ZeroPolynomialError):
        normalize(QuatPolynomial((ZERO, ZERO)))


def test_basic_polynomial_examples():
    assert basic_polynomial(LINEAR).coefficients == (1.0, 0.0, 1.0)
    assert basic_polynomial(UNIT_SPHERE).coefficients == tuple(real_convolve([1, 0, 1], [1, 0, 1]))
    assert basic_polynomial(QuatPolynomial((ZERO, ONE))).coefficients == (0.0, 0.0, 1.0)


@settings(max_examples=50)
@given(st.integers(0, 2 ** 32), st.integers(1, 6))
def test_basic_is_sum_of_conjugate_products(seed, degree):
    p = random_poly(random.Random(seed), degree)
    basic = basic_polynomial(p)
    assert basic.degree == 2 * degree
    assert basic.coefficients[-1] == pytest.approx(p.leading.norm2(), rel=1e-15)
    assert basic.coefficients[0] == pytest.approx(p.coefficients[0].norm2(), rel=1e-15)
    for b, qf, (vec, scale) in zip(basic.coefficients, quaternion_form_coefficients(p),
                                   realness_defect(p)):
        assert b == pytest.approx(qf[0], abs=1e-13 * scale)
        assert vec <= 1e-13 * scale


@settings(max_examples=50)
@given(st.integers(0, 2 ** 32), st.integers(1, 6))
def test_left_right_basic_agree(seed, degree):
    p = random_poly(random.Random(seed), degree)
    assert basic_polynomial(p) == basic_polynomial(p.with_side(LEFT))
    assert form_symmetry_check(p) <= 1e-13 * coefficient_product_scale(p)


def test_form_symmetry_examples():
    assert form_symmetry_check(LINEAR) <= 1e-13
    assert form_symmetry_check(QuatPolynomial.from_lists([1, -2, 1])) == 0.0
    p = random_poly(random.Random(42), 6)
    assert form_symmetry_check(p) <= 1e-13 * coefficient_product_scale(p)


@settings(max_examples=100)
@given(st.integers(0, 2 ** 32), st.integers(1, 6), st.floats(-4.0, 4.0))
def test_real_axis_identity(seed, degree, x):
    p = random_poly(random.Random(seed), degree)
    value = brute_eval(p, Quaternion(x)).norm2()
    assert abs(basic_polynomial(p)(x) - value) <= 1e-10 * max(1.0, value)


def test_divide_by_real():
    rng = random.Random(7)
    q = random_poly(rng, 3)
    c = QuatPolynomial.from_lists([5, -2, 1])
    from quatvieta.testgen import convolve
    product = convolve(q, c)
    quotient, remainder = divide_by_real(product, [5, -2, 1])
    assert all(qclose(a, b, 1e-12) for a, b in zip(quotient.coefficients, q.coefficients))
    assert all(abs(r) <= 1e-12 for r in remainder.coefficients)


def test_json_roundtrip_and_schema():
    p = QuatPolynomial((J, I, Quaternion(0.1, 1e-300, -3, 2)), LEFT)
    assert QuatPolynomial.from_json(p.to_json()) == p
    for bad in ([], {"coefficients": []}, {"side": "up", "coefficients": [[1, 0, 0, 0]]},
                {"coefficients": [[1, 0, 0]]}, {"coefficients": [[1, 0, 0, "x"]]},
                {"coefficients": [[True, 0, 0, 0]]}):
        with pytest.raises(SchemaError):
            QuatPolynomial.from_json(bad)


def test_real_polynomial_eval():
    p = RealPolynomial((1, 0, 1))
    assert p(2.0) == 5.0
    assert p(1j) == 0
    assert p.abs_bound(-2.0) == 5.0
