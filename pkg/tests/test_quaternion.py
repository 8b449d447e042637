import math

import pytest
from hypothesis import given, strategies as st

from quatvieta.errors import ZeroDivisorError
from quatvieta.quaternion import (I, J, K, ONE, ZERO, Quaternion, as_quaternion, conj,
                                  decompose, dot, inverse, mul)

from helpers import qclose

# unit-scale components; tiny magnitudes would only exercise underflow
comp = st.floats(-1.0, 1.0, allow_nan=False).map(lambda x: round(x, 12))
quats = st.builds(Quaternion, comp, comp, comp, comp)


def test_unit_table():
    assert mul(I, J) == K
    assert mul(J, K) == I
    assert mul(K, I) == J
    for u in (I, J, K):
        assert mul(u, u) == -ONE


def test_anticommutation_exact():
    assert mul(I, J) == -mul(J, I)
    assert mul(J, K) == -mul(K, J)
    assert mul(K, I) == -mul(I, K)
    assert mul(I, J) != mul(J, I)


def test_mul_examples():
    w = Quaternion(0.3, -1.2, 2.5, 7.0)
    assert mul(ONE, w) == w
    assert mul(Quaternion(1, 1), Quaternion(1, 0, 1)) == Quaternion(1, 1, 1, 1)


def test_conj_examples():
    assert conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)
    w = Quaternion(0.1, 0.2, -0.3, 5)
    assert conj(conj(w)) == w
    assert mul(Quaternion(1, 1), conj(Quaternion(1, 1))) == Quaternion(2)


@pytest.mark.parametrize("w, expected", [
    (Quaternion(5), (5.0, 0.0, 5.0)),
    (Quaternion(1, 2, 3, 4), (1.0, math.sqrt(29), math.sqrt(30))),
    (I, (0.0, 1.0, 1.0)),
])
def test_decompose(w, expected):
    assert decompose(w) == pytest.approx(expected, abs=1e-15)


def test_inverse():
    assert inverse(ONE) == ONE
    assert inverse(I) == -I
    with pytest.raises(ZeroDivisorError):
        inverse(ZERO)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_dot_examples():
    assert dot(I, J) == 0.0
    assert dot(Quaternion(1, 1), Quaternion(1, 1)) == 2.0
    assert mul(I, conj(J)) + mul(J, conj(I)) == ZERO


@given(quats, quats)
def test_scalar_product_identity(w, v):
    target = Quaternion(2.0 * dot(w, v))
    assert qclose(mul(w, conj(v)) + mul(v, conj(w)), target, 1e-13)
    assert qclose(mul(conj(w), v) + mul(conj(v), w), target, 1e-13)


@given(quats, quats)
def test_modulus_multiplicative(a, b):
    assert abs(mul(a, b)) == pytest.approx(abs(a) * abs(b), rel=1e-13, abs=1e-300)


@given(quats)
def test_norm_invariants(w):
    assert abs(w) ** 2 == pytest.approx(sum(x * x for x in w), rel=1e-15)
    assert mul(w, conj(w)).vecnorm() <= 1e-15
    assert mul(w, conj(w))[0] == pytest.approx(w.norm2(), rel=1e-15)


@given(quats.filter(lambda w: abs(w) > 1e-3))
def test_inverse_roundtrip(w):
    assert qclose(mul(w, inverse(w)), ONE, 1e-12)
    assert qclose(mul(inverse(w), w), ONE, 1e-12)


def test_operators_and_coercion():
    w = Quaternion(1, 2, 3, 4)
    assert w + 1 == Quaternion(2, 2, 3, 4)
    assert 1 - w == Quaternion(0, -2, -3, -4)
    assert 2 * w == w * 2 == Quaternion(2, 4, 6, 8)
    assert w / 2 == Quaternion(0.5, 1, 1.5, 2)
    assert sum([I, J, K]) == Quaternion(0, 1, 1, 1)
    assert as_quaternion([1, 0, 0, 0]) == ONE
    assert as_quaternion(3) == Quaternion(3)
    with pytest.raises(ValueError):
        as_quaternion([1, 2, 3])
