import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given

from cayleyframes import algebra as alg
from oracles import HAND_TABLE, hamilton, octonion_product, oconj
from strategies import octonions, quaternions, scale

B = alg.basis


@pytest.mark.parametrize("left,right,sign,result", HAND_TABLE)
def test_hand_table(left, right, sign, result):
    npt.assert_array_equal(alg.oct_mul(B(left), B(right)), sign * B(result))


def test_table_matches_oracle_on_all_basis_pairs():
    for left, right, sign, result in alg.multiplication_table():
        expected = octonion_product(B(left), B(right))
        npt.assert_array_equal(expected, sign * B(result))


def test_table_is_signed_permutation():
    table = alg.multiplication_table()
    assert len(table) == 64
    for left in alg.BASIS_NAMES:
        results = [r for l, _, _, r in table if l == left]
        assert sorted(results) == sorted(alg.BASIS_NAMES)


def test_non_associativity_witness():
    npt.assert_array_equal(alg.oct_mul(alg.oct_mul(B("i"), B("j")), B("e")), B("h"))
    npt.assert_array_equal(alg.oct_mul(B("i"), alg.oct_mul(B("j"), B("e"))), -B("h"))
    npt.assert_array_equal(alg.associator(B("i"), B("j"), B("e")), 2 * B("h"))


def test_octonion_keywords():
    npt.assert_array_equal(alg.octonion(re=2, h=-1), 2 * B("1") - B("h"))
    with pytest.raises(KeyError):
        alg.basis("q")


def test_batched_product_broadcasts(rng):
    x = rng.standard_normal((5, 3, 8))
    y = rng.standard_normal((3, 8))
    out = alg.oct_mul(x, y)
    assert out.shape == (5, 3, 8)
    npt.assert_allclose(out[4, 2], octonion_product(x[4, 2], y[2]), atol=1e-13)


@given(quaternions, quaternions)
def test_quat_mul_matches_hamilton(p, q):
    npt.assert_allclose(alg.quat_mul(p, q), hamilton(p, q), atol=1e-12 * scale(p, q) ** 2)


@given(octonions, octonions)
def test_mul_matches_oracle(x, y):
    s = scale(x, y) ** 2
    npt.assert_allclose(alg.oct_mul(x, y), octonion_product(x, y), atol=1e-12 * s)
    npt.assert_allclose(alg.oct_mul_pairs(x, y), octonion_product(x, y), atol=1e-12 * s)


@given(octonions)
def test_conj_matches_oracle(x):
    npt.assert_array_equal(alg.oct_conj(x), oconj(x))


@given(octonions, octonions)
def test_norm_is_multiplicative(x, y):
    assert alg.norm(alg.oct_mul(x, y)) == pytest.approx(alg.norm(x) * alg.norm(y), rel=1e-12, abs=1e-12)


@given(octonions, octonions)
def test_conjugation_reverses_products(x, y):
    lhs = alg.oct_conj(alg.oct_mul(x, y))
    rhs = alg.oct_mul(alg.oct_conj(y), alg.oct_conj(x))
    npt.assert_allclose(lhs, rhs, atol=1e-12 * scale(x, y) ** 2)


@given(octonions, octonions, octonions)
def test_associator_alternating(x, y, z):
    tol = 1e-11 * scale(x, y, z) ** 3
    a = alg.associator(x, y, z)
    npt.assert_allclose(alg.associator(y, x, z), -a, atol=tol)
    npt.assert_allclose(alg.associator(x, z, y), -a, atol=tol)
    npt.assert_allclose(alg.associator(z, x, y), a, atol=tol)


@given(octonions, octonions)
def test_alternative_laws(x, y):
    tol = 1e-11 * scale(x, y) ** 3
    npt.assert_allclose(alg.associator(x, x, y), 0, atol=tol)
    npt.assert_allclose(alg.associator(x, y, y), 0, atol=tol)
    npt.assert_allclose(alg.associator(x, y, alg.oct_conj(x)), 0, atol=tol)


@given(octonions, octonions, octonions)
def test_moufang(x, y, z):
    assert alg.identity_eq2_residual(x, y, z) < 1e-10 * scale(x, y, z) ** 4


@given(octonions, octonions, octonions)
def test_eq1_on_orthogonal_pairs(x, y, w):
    if alg.norm(x) < 1e-3:
        return
    y = y - (alg.inner(x, y) / alg.inner(x, x)) * x
    assert alg.identity_eq1_residual(x, y, w) < 1e-11 * scale(x, y, w) ** 3


def test_eq1_fails_for_non_orthogonal_pair():
    assert alg.identity_eq1_residual(B("i"), B("i"), B("1")) > 1.0


def test_cross2_pins():
    npt.assert_array_equal(alg.cross2(B("i"), B("j")), B("k"))
    npt.assert_array_equal(alg.cross2(B("f"), B("f")), np.zeros(8))


@given(octonions, octonions)
def test_cross2_is_antisymmetric_and_imaginary(x, y):
    c = alg.cross2(x, y)
    assert c[0] == 0.0
    npt.assert_allclose(alg.cross2(y, x), -c, atol=1e-12 * scale(x, y) ** 2)


@given(octonions, octonions)
def test_cross2_orthogonal_to_imaginary_inputs(x, y):
    x, y = alg.im(x), alg.im(y)
    c = alg.cross2(x, y)
    tol = 1e-11 * scale(x, y) ** 3
    assert abs(alg.inner(c, x)) < tol and abs(alg.inner(c, y)) < tol


def test_cross3_pins():
    npt.assert_array_equal(alg.cross3(B("i"), B("j"), B("k")), B("1"))
    npt.assert_array_equal(alg.cross3(B("1"), B("i"), B("j")), -B("k"))


@given(octonions, octonions, octonions)
def test_cross3_alternating(x, y, z):
    tol = 1e-11 * scale(x, y, z) ** 3
    c = alg.cross3(x, y, z)
    npt.assert_allclose(alg.cross3(y, x, z), -c, atol=tol)
    npt.assert_allclose(alg.cross3(x, z, y), -c, atol=tol)


def test_cross3_norm_on_orthonormal_triples(rng):
    from cayleyframes.euclid8 import random_frame

    for _ in range(50):
        x, y, z = random_frame(rng, 3)
        c = alg.cross3(x, y, z)
        assert alg.norm(c) == pytest.approx(1.0, abs=1e-12)
        npt.assert_allclose([c @ x, c @ y, c @ z], 0, atol=1e-12)


@given(octonions, octonions)
def test_mult_matrices(u, x):
    tol = 1e-12 * scale(u, x) ** 2
    npt.assert_allclose(alg.left_mult_matrix(u) @ x, octonion_product(u, x), atol=tol)
    npt.assert_allclose(alg.right_mult_matrix(u) @ x, octonion_product(x, u), atol=tol)


def test_right_mult_by_unit_imaginary_is_complex_structure(rng):
    u = alg.random_unit_imaginary(rng)
    j = alg.right_mult_matrix(u)
    npt.assert_allclose(j @ j, -np.eye(8), atol=1e-13)
    npt.assert_allclose(j.T @ j, np.eye(8), atol=1e-13)


def test_random_samplers(rng):
    u = alg.random_unit_imaginary(rng, size=10)
    assert u.shape == (10, 8)
    npt.assert_allclose(alg.norm(u), 1)
    npt.assert_array_equal(u[:, 0], 0)
    q = alg.random_unit_quaternion(rng, size=4)
    npt.assert_allclose(alg.quat_norm(q), 1)
    x = alg.random_octonion(rng, size=3, normalize=True)
    npt.assert_allclose(alg.norm(x), 1)


def test_structure_tensor_is_read_only():
    with pytest.raises(ValueError):
        alg.STRUCTURE[0, 0, 0] = 2.0
