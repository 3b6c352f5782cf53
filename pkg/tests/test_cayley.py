import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given

from cayleyframes import algebra as alg
from cayleyframes.cayley import (
    CayleyPlane,
    canonical_cayley_frame,
    cayley_frame_residual,
    cayley_plane_from_triple,
    cayley_plane_residual,
    hypercomplex_check,
    hypercomplex_residuals,
    imaginary_intersection,
    is_cayley_frame,
    is_cayley_plane,
    plane_from_tricomplex,
    random_cayley_plane,
    tricomplex_of_plane,
)
from cayleyframes.errors import BadKernelDimension, NotCayley
from cayleyframes.euclid8 import orientation_sign, projector, projector_distance, random_frame
from oracles import cayley_form
from strategies import seeds

B = alg.basis
EXAMPLE_FRAME = np.array([B("1") - B("h"), B("i") + B("g"), B("j") - B("f"), B("k") + B("e")]) / np.sqrt(2)


def _special_orthogonal(rng, n=4):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def test_quaternion_plane_is_cayley():
    assert cayley_plane_residual(np.eye(8)[:4]) < 1e-15
    assert is_cayley_frame(np.eye(8)[:4])


def test_example_plane():
    assert cayley_plane_residual(EXAMPLE_FRAME) < 1e-10
    t = tricomplex_of_plane(EXAMPLE_FRAME)
    npt.assert_allclose(projector(t), projector(np.array([B("i"), B("j"), B("e")])), atol=1e-12)
    back = plane_from_tricomplex([B("i"), B("j"), B("e")])
    assert projector_distance(back.plane, EXAMPLE_FRAME) < 1e-12


def test_generic_plane_is_not_cayley(rng):
    f = random_frame(rng)
    assert not is_cayley_plane(f)
    with pytest.raises(NotCayley):
        CayleyPlane.from_frame(f)
    with pytest.raises(NotCayley):
        tricomplex_of_plane(f)


@given(seeds)
def test_closure_agrees_with_calibration(seed):
    # a 4-plane is Cayley exactly when the Cayley form is +-1 on it
    rng = np.random.default_rng(seed)
    p = random_cayley_plane(rng)
    assert abs(cayley_form(p.frame)) == pytest.approx(1.0, abs=1e-12)
    f = random_frame(rng)
    assert abs(cayley_form(f)) < 1 - 1e-6
    assert not is_cayley_plane(f)


def test_plane_from_triple_is_positively_calibrated(rng):
    x, y, z = random_frame(rng, 3)
    p = cayley_plane_from_triple(x, y, z)
    assert cayley_form(p.frame) == pytest.approx(1.0, abs=1e-12)
    npt.assert_allclose(p.frame[1:], [x, y, z], atol=1e-12)


@given(seeds)
def test_canonical_frame_is_cayley_and_oriented(seed):
    p = random_cayley_plane(np.random.default_rng(seed))
    c = canonical_cayley_frame(p)
    assert cayley_frame_residual(c) < 1e-12
    assert orientation_sign(p.frame, c) == 1


@given(seeds)
def test_every_positive_frame_of_a_cayley_plane_is_cayley(seed):
    rng = np.random.default_rng(seed)
    p = random_cayley_plane(rng)
    g = _special_orthogonal(rng) @ p.frame
    assert cayley_frame_residual(g) < 1e-12


def test_reversed_orientation_is_not_a_cayley_frame(rng):
    f = canonical_cayley_frame(random_cayley_plane(rng)).copy()
    f[[0, 1]] = f[[1, 0]]
    assert is_cayley_plane(f)
    assert not is_cayley_frame(f)


def test_cayley_frame_residual_batches(rng):
    frames = np.array([canonical_cayley_frame(random_cayley_plane(rng)) for _ in range(3)])
    assert cayley_frame_residual(frames).shape == (3,)


def test_imaginary_intersection(rng):
    p = random_cayley_plane(rng)
    v = imaginary_intersection(p)
    assert v.shape == (3, 8)
    npt.assert_array_equal(v[:, 0], 0)
    npt.assert_allclose(v @ v.T, np.eye(3), atol=1e-12)
    npt.assert_allclose(v @ p.projector, v, atol=1e-12)
    # a purely imaginary Cayley plane: span{i, j, e} closes up with cross3(i, j, e)
    q = cayley_plane_from_triple(B("i"), B("j"), B("e"))
    assert len(imaginary_intersection(q)) == 4


@given(seeds)
def test_tricomplex_triple_is_orthonormal_imaginary(seed):
    p = random_cayley_plane(np.random.default_rng(seed))
    t = p.tricomplex
    npt.assert_array_equal(t[:, 0], 0)
    npt.assert_allclose(t @ t.T, np.eye(3), atol=1e-12)


def test_tricomplex_of_purely_imaginary_plane():
    q = cayley_plane_from_triple(B("i"), B("j"), B("e"))
    cp = plane_from_tricomplex(q.tricomplex)
    assert projector_distance(cp.plane, q.plane) < 1e-10


@given(seeds)
def test_hypercomplex_relations_on_plane(seed):
    p = random_cayley_plane(np.random.default_rng(seed))
    assert hypercomplex_check(p) < 1e-12
    ju, jv, jw = p.operators
    for j in (ju, jv, jw):
        npt.assert_allclose(j @ j, -np.eye(8), atol=1e-12)
    x = p.frame.T
    npt.assert_allclose(jv @ ju @ x, jw @ x, atol=1e-12)
    npt.assert_allclose(ju @ jv @ x, -jw @ x, atol=1e-12)


def test_hypercomplex_relations_fail_off_plane(rng):
    p = random_cayley_plane(rng)
    x = rng.standard_normal(8)
    x -= p.projector @ x
    assert hypercomplex_residuals(p.tricomplex, x).max() > 0.1


@given(seeds)
def test_roundtrip(seed):
    p = random_cayley_plane(np.random.default_rng(seed))
    q = plane_from_tricomplex(p.tricomplex)
    assert projector_distance(p.plane, q.plane) < 1e-10
    npt.assert_allclose(projector(q.tricomplex), projector(p.tricomplex), atol=1e-10)


def test_bad_kernel_dimension():
    # (i, i, i) is not orthonormal; the kernel is the whole space
    with pytest.raises(BadKernelDimension):
        plane_from_tricomplex([B("i"), B("i"), B("i")])


def test_cayley_plane_is_immutable(rng):
    p = random_cayley_plane(rng)
    with pytest.raises(ValueError):
        p.tricomplex[0, 1] = 3.0
