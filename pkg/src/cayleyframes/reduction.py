"""Moment maps on S^31 in H^8 and the zero set of the U(1) x Sp(1) action.

A point ``h`` of H^8 is an ``(8, 4)`` array: eight quaternions indexed by the
octonion slots ``(1, i, j, k, e, f, g, h)``.  Writing ``h = a + b i + c j + d k``
with ``a, b, c, d`` in R^8, the moment map ``mu`` of the Sp(1) action
``h -> h q`` vanishes exactly when ``(a, b, c, d)`` are orthogonal with equal
lengths, so ``mu^{-1}(0)`` on the unit sphere is the Stiefel manifold of
orthonormal 4-frames scaled by 1/2.

Conventions
-----------
The circle acts on each frame vector by right multiplication with
``e^{i theta}``.  On the slot pairs ``(1, i), (j, k), (e, f), (g, h)`` this is
the block rotation ``diag(A(t), A(-t), A(-t), A(t))`` and its moment map is

    nu(h) = sum_b s_b (conj(h_{2b-1}) h_{2b} - conj(h_{2b}) h_{2b-1}),
    s = (+1, -1, -1, +1).

A frame ``(f1, f2, f3, f4)`` enters the sphere as
``h = (f1 + f2 i + f3 j - f4 k) / 2``.  The sign on ``f4`` reverses the frame
orientation seen by ``nu``; with it, every Cayley frame lies in ``nu = 0`` and
``e^{i pi/2}`` is the only nontrivial rotation (up to sign) mapping Cayley
frames to Cayley frames.
"""

from __future__ import annotations

import logging

import numpy as np
from scipy.optimize import minimize_scalar

from . import algebra as alg
from .cayley import cayley_frame_residual, cayley_plane_residual, random_cayley_plane
from .errors import NoSolution, RankAmbiguous
from .euclid8 import (
    Plane4,
    RankResult,
    central_jacobian,
    numerical_rank,
    projector,
    same_plane,
)

logger = logging.getLogger(__name__)

U1_PAIR_SIGNS = np.array([1.0, -1.0, -1.0, 1.0])
#: Complex structure generating the circle action on R^8: x -> x i.
J_STD = alg.right_mult_matrix(alg.basis("i"))
_FRAME_SIGNS = np.array([1.0, 1.0, 1.0, -1.0])
_QUNITS = np.eye(4)[1:]

EXPECTED_RANKS = {"zero_set": 12, "cayley_frames": 13, "cayley_chart": 4}


# -- sphere coordinates -------------------------------------------------------

def frame_to_sphere(frame) -> np.ndarray:
    """Point of S^31 for an orthonormal frame (or a batch of frames)."""
    f = np.asarray(frame, dtype=float)
    return np.swapaxes(f * _FRAME_SIGNS[:, None], -1, -2) / 2.0


def sphere_to_vectors(h):
    """``(a, b, c, d)`` with ``h = a + b i + c j + d k``."""
    h = np.asarray(h, dtype=float)
    return tuple(h[..., k] for k in range(4))


def sphere_to_frame(h) -> np.ndarray:
    """Inverse of :func:`frame_to_sphere`."""
    h = np.asarray(h, dtype=float)
    return 2.0 * np.swapaxes(h, -1, -2) * _FRAME_SIGNS[:, None]


def sphere_norm(h):
    h = np.asarray(h, dtype=float)
    return np.sqrt(np.sum(h * h, axis=(-2, -1)))


# -- moment maps --------------------------------------------------------------

def moment_mu(h) -> np.ndarray:
    """``(sum conj(h_a) i h_a, sum conj(h_a) j h_a, sum conj(h_a) k h_a)`` as ``(..., 3, 4)``."""
    h = np.asarray(h, dtype=float)
    hb = alg.quat_conj(h)
    terms = [np.sum(alg.quat_mul(alg.quat_mul(hb, u), h), axis=-2) for u in _QUNITS]
    return np.stack(terms, axis=-2)


def moment_nu(h) -> np.ndarray:
    """Moment map of the circle action, an imaginary quaternion ``(..., 4)``."""
    h = np.asarray(h, dtype=float)
    p, q = h[..., 0::2, :], h[..., 1::2, :]
    pair = alg.quat_mul(alg.quat_conj(p), q) - alg.quat_mul(alg.quat_conj(q), p)
    return np.sum(pair * U1_PAIR_SIGNS[:, None], axis=-2)


def sp1_act(h, q) -> np.ndarray:
    """Right multiplication of every coordinate by the unit quaternion ``q``."""
    return alg.quat_mul(np.asarray(h, dtype=float), np.asarray(q, dtype=float)[..., None, :])


def u1_act(h, theta) -> np.ndarray:
    """Rotate the coordinate pairs ``(h1, h2), ..., (h7, h8)`` by ``theta``."""
    h = np.asarray(h, dtype=float)
    theta = np.asarray(theta, dtype=float)[..., None, None]
    c = np.cos(theta)
    s = np.sin(theta) * U1_PAIR_SIGNS[:, None]
    p, q = h[..., 0::2, :], h[..., 1::2, :]
    out = np.empty(np.broadcast_shapes(h.shape, theta.shape[:-2] + (8, 4)))
    out[..., 0::2, :] = c * p - s * q
    out[..., 1::2, :] = s * p + c * q
    return out


def tau_act(h) -> np.ndarray:
    """Action of the generator ``e^{i pi/2}`` of the finite stabilizer."""
    return u1_act(h, np.pi / 2)


def in_zero_set(h, tol: float = 1e-8):
    """``(member, mu_residual, nu_residual)`` for the common zero set of mu and nu."""
    mu_res = float(np.linalg.norm(moment_mu(h)))
    nu_res = float(np.linalg.norm(moment_nu(h)))
    return (mu_res < tol and nu_res < tol), mu_res, nu_res


# -- circle orbits through Cayley frames --------------------------------------

def rotate_frame(frame, theta) -> np.ndarray:
    """Frame of ``u1_act`` at angle ``theta``: each vector times ``e^{i theta}``."""
    f = np.asarray(frame, dtype=float)
    theta = np.asarray(theta, dtype=float)[..., None, None]
    return np.cos(theta) * f + np.sin(theta) * (f @ J_STD.T)


def _frame_residual_vector(f) -> np.ndarray:
    return (alg.oct_mul(alg.oct_conj(f[..., 1, :]), f[..., 0, :])
            - alg.oct_mul(alg.oct_conj(f[..., 2, :]), f[..., 3, :]))


def _residual_and_slope(frame, theta):
    f = rotate_frame(frame, theta)
    df = f @ J_STD.T
    v = _frame_residual_vector(f)
    dv = (alg.oct_mul(alg.oct_conj(df[1]), f[0]) + alg.oct_mul(alg.oct_conj(f[1]), df[0])
          - alg.oct_mul(alg.oct_conj(df[2]), f[3]) - alg.oct_mul(alg.oct_conj(f[2]), df[3]))
    return v, dv


def _polish(frame, theta: float, tol: float, maxiter: int = 60) -> float:
    for _ in range(maxiter):
        v, dv = _residual_and_slope(frame, theta)
        if np.linalg.norm(v) < tol:
            break
        slope = dv @ dv
        if slope == 0.0:
            break
        step = -(v @ dv) / slope
        theta += step
        if abs(step) < 1e-15:
            break
    return theta


def angle_search(h, tol: float = 1e-10, samples: int = 720) -> list[float]:
    """All ``theta`` in ``[0, 2 pi)`` turning ``u1_act(h, theta)`` into a Cayley frame.

    The residual ``|conj(f2) f1 - conj(f3) f4|`` is scanned on ``samples``
    equispaced angles; every local minimum below 0.1 is refined by a bounded
    scalar minimization followed by Gauss-Newton on the residual vector.

    Returns ``[]`` when ``h`` is not on the zero set.  If the whole orbit
    consists of Cayley frames, every grid angle is returned.  Raises
    :class:`NoSolution` when no refined angle reaches ``tol``.
    """
    if not in_zero_set(h, 1e-8)[0]:
        return []
    frame = sphere_to_frame(h)
    grid = 2 * np.pi * np.arange(samples) / samples
    r = cayley_frame_residual(rotate_frame(frame, grid))
    if np.all(r < tol):
        return grid.tolist()
    lower = r <= np.roll(r, 1)
    upper = r <= np.roll(r, -1)
    candidates = np.flatnonzero(lower & upper & (r < 0.1))
    spacing = 2 * np.pi / samples
    found = []
    best = float(r.min())
    for k in candidates:
        t0 = grid[k]
        opt = minimize_scalar(
            lambda t: cayley_frame_residual(rotate_frame(frame, t)) ** 2,
            bounds=(t0 - spacing, t0 + spacing),
            method="bounded",
            options={"xatol": 1e-12},
        )
        theta = _polish(frame, float(opt.x), tol)
        res = float(cayley_frame_residual(rotate_frame(frame, theta)))
        best = min(best, res)
        if res < tol:
            found.append(float(theta % (2 * np.pi)))
    if not found:
        logger.warning("angle_search: no angle reaches residual %g (best %.3g)", tol, best)
        raise NoSolution(f"no angle reaches residual {tol:g}; best refined residual {best:.3g}")
    found.sort()
    out = []
    for t in found:
        if out and abs(t - out[-1]) < 1e-6:
            continue
        out.append(t)
    if len(out) > 1 and 2 * np.pi - out[-1] + out[0] < 1e-6:
        out.pop()
    return out


# -- the tau stratum ----------------------------------------------------------

def tau_plane(p) -> Plane4:
    """Image of a 4-plane under ``J_STD``, frame vector by frame vector."""
    f = p.frame if hasattr(p, "frame") else np.asarray(p, dtype=float)
    return Plane4.from_frame(f @ J_STD.T)


def is_jstd_invariant(p, tol: float = 1e-8) -> bool:
    """True when the plane is a complex 2-plane of ``(R^8, J_STD)``."""
    f = p.frame if hasattr(p, "frame") else np.asarray(p, dtype=float)
    return same_plane(projector(f), projector(f @ J_STD.T), tol)


# -- sampling -----------------------------------------------------------------

def random_cayley_frame(rng: np.random.Generator) -> np.ndarray:
    return np.array(random_cayley_plane(rng).frame)


def random_zero_set_point(rng: np.random.Generator):
    """Point of the zero set built from hidden parameters.

    Returns ``(h, frame, theta, q)`` with
    ``h = sp1_act(u1_act(frame_to_sphere(frame), theta), q)``.
    """
    frame = random_cayley_frame(rng)
    theta = rng.uniform(0.0, 2 * np.pi)
    q = alg.random_unit_quaternion(rng)
    h = sp1_act(u1_act(frame_to_sphere(frame), theta), q)
    return h, frame, theta, q


def project_to_zero_set(h0, tol: float = 1e-13, maxiter: int = 50) -> np.ndarray:
    """Gauss-Newton descent of ``(mu, nu, |h|^2 - 1)`` to zero from ``h0``.

    A diagnostic generator of zero-set points that does not go through
    Cayley frames.
    """
    x = np.asarray(h0, dtype=float).ravel().copy()

    def g(y):
        hh = y.reshape(8, 4)
        return np.concatenate([moment_mu(hh)[:, 1:].ravel(), moment_nu(hh)[1:], [y @ y - 1.0]])

    for _ in range(maxiter):
        r = g(x)
        if np.abs(r).max() < tol:
            break
        jac = central_jacobian(g, x, 1e-6)
        x = x + np.linalg.lstsq(jac, -r, rcond=None)[0]
    return x.reshape(8, 4)


# -- dimension counts ---------------------------------------------------------

def _sphere_tangent(x: np.ndarray) -> np.ndarray:
    # rows: orthonormal basis of the complement of x in R^32
    _, _, vt = np.linalg.svd(x[None, :])
    return vt[1:]


def _checked(result: RankResult, min_gap: float) -> RankResult:
    if result.gap < min_gap:
        raise RankAmbiguous(f"rank {result.rank} with spectral gap {result.gap:.3g} < {min_gap:g}")
    return result


def rank_zero_set(h, step: float = 1e-5, rel_tol: float = 1e-6, min_gap: float = 10.0) -> RankResult:
    """Rank of ``d(mu, nu)`` on the tangent space of S^31 at a zero-set point."""
    if not in_zero_set(h, 1e-8)[0]:
        raise ValueError("point is not on the zero set of mu and nu")
    x = np.asarray(h, dtype=float).ravel()

    def g(y):
        hh = y.reshape(8, 4)
        return np.concatenate([moment_mu(hh)[:, 1:].ravel(), moment_nu(hh)[1:]])

    jac = central_jacobian(g, x, step) @ _sphere_tangent(x).T
    return _checked(numerical_rank(jac, rel_tol), min_gap)


def rank_cayley_frames(h, step: float = 1e-5, rel_tol: float = 1e-6, min_gap: float = 10.0) -> RankResult:
    """Rank of ``d(mu, frame residual)`` on the tangent space of S^31."""
    if not in_zero_set(h, 1e-8)[0] or cayley_frame_residual(sphere_to_frame(h)) > 1e-8:
        raise ValueError("point is not a Cayley frame")
    x = np.asarray(h, dtype=float).ravel()

    def g(y):
        hh = y.reshape(8, 4)
        return np.concatenate([moment_mu(hh)[:, 1:].ravel(), _frame_residual_vector(sphere_to_frame(hh))])

    jac = central_jacobian(g, x, step) @ _sphere_tangent(x).T
    return _checked(numerical_rank(jac, rel_tol), min_gap)


def rank_cayley_chart(p, step: float = 1e-5, rel_tol: float = 1e-6, min_gap: float = 10.0) -> RankResult:
    """Rank of the closure residual in a 16-parameter chart of Gr_4(R^8) around ``p``.

    The chart sends a 4x4 matrix ``X`` to the span of the rows of
    ``F + X N`` with ``N`` an orthonormal basis of the complement.
    """
    f = np.asarray(p.frame if hasattr(p, "frame") else p, dtype=float)
    if cayley_plane_residual(f) > 1e-8:
        raise ValueError("plane is not Cayley")
    _, _, vt = np.linalg.svd(f)
    complement = vt[4:]
    idx = np.array([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])

    def g(xs):
        a = f + xs.reshape(4, 4) @ complement
        proj = a.T @ np.linalg.solve(a @ a.T, a)
        c = alg.cross3(a[idx[:, 0]], a[idx[:, 1]], a[idx[:, 2]])
        return (c - c @ proj.T).ravel()

    jac = central_jacobian(g, np.zeros(16), step)
    return _checked(numerical_rank(jac, rel_tol), min_gap)
