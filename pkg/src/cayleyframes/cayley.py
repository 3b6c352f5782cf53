"""Cayley 4-planes and Cayley 4-frames in R^8.

A 4-plane is Cayley when it is closed under the three-fold cross product.
Such a plane is oriented by bases ``(x × y × z, x, y, z)`` and carries a
hypercomplex structure built from right multiplications by the unit
imaginary octonions

    u = y × z,   v = z × x,   w = x × y

for an orthonormal imaginary triple ``x, y, z`` inside the plane.  The
triple ``(u, v, w)`` (a "tricomplex" triple) determines the plane back as
the kernel of ``x -> (x u) v - x w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import algebra as alg
from .errors import BadKernelDimension, DegenerateInput, NotCayley
from .euclid8 import (
    DEGENERATE_TOL,
    Plane4,
    gram_schmidt,
    kernel,
    projector,
    random_frame,
)

CAYLEY_TOL = 1e-8
_TRIPLES = tuple(combinations(range(4), 3))


def _frame_of(p) -> np.ndarray:
    if isinstance(p, (Plane4, CayleyPlane)):
        return p.frame
    return np.asarray(p, dtype=float)


def cayley_plane_residual(p) -> float:
    """Largest distance of ``cross3`` of three frame vectors from the plane.

    Checking the four basis triples is enough by trilinearity.
    """
    f = _frame_of(p)
    outside = np.eye(8) - projector(f)
    idx = np.array(_TRIPLES)
    c = alg.cross3(f[idx[:, 0]], f[idx[:, 1]], f[idx[:, 2]])
    return float(np.linalg.norm(c @ outside.T, axis=-1).max())


def is_cayley_plane(p, tol: float = CAYLEY_TOL) -> bool:
    return cayley_plane_residual(p) < tol


def cayley_frame_residual(f) -> float | np.ndarray:
    """``|conj(f2) f1 - conj(f3) f4|`` for a frame (or a batch of frames)."""
    f = np.asarray(_frame_of(f), dtype=float)
    lhs = alg.oct_mul(alg.oct_conj(f[..., 1, :]), f[..., 0, :])
    rhs = alg.oct_mul(alg.oct_conj(f[..., 2, :]), f[..., 3, :])
    return alg.norm(lhs - rhs)


def is_cayley_frame(f, tol: float = CAYLEY_TOL) -> bool:
    return bool(cayley_frame_residual(f) < tol)


def right_mult_operator(u) -> np.ndarray:
    """Complex structure ``J_u(x) = x u`` as an 8x8 matrix."""
    return alg.right_mult_matrix(u)


@dataclass(frozen=True, eq=False)
class CayleyPlane:
    """A Cayley 4-plane with its tricomplex triple and hypercomplex operators.

    ``operators`` holds ``(J_u, J_v, J_w)``, the right multiplications by the
    cached triple ``(u, v, w)``.
    """

    plane: Plane4
    tricomplex: np.ndarray = field(repr=False)
    operators: tuple = field(repr=False)
    residual: float = 0.0

    @property
    def frame(self) -> np.ndarray:
        return self.plane.frame

    @property
    def projector(self) -> np.ndarray:
        return self.plane.projector

    @classmethod
    def from_frame(cls, frame, tol: float = CAYLEY_TOL) -> "CayleyPlane":
        plane = frame if isinstance(frame, Plane4) else Plane4.from_frame(frame)
        res = cayley_plane_residual(plane)
        if not res < tol:
            raise NotCayley(f"closure residual {res:.3g} exceeds {tol:g}")
        t = _tricomplex_from_frame(plane.frame)
        t.setflags(write=False)
        ops = tuple(right_mult_operator(x) for x in t)
        return cls(plane, t, ops, res)


def _as_cayley(p) -> CayleyPlane:
    return p if isinstance(p, CayleyPlane) else CayleyPlane.from_frame(_frame_of(p))


def cayley_plane_from_triple(x, y, z) -> CayleyPlane:
    """Cayley plane with oriented frame ``(x × y × z, x, y, z)``.

    ``x, y, z`` are orthonormalized first.
    """
    xyz = gram_schmidt([x, y, z])
    w = alg.cross3(*xyz)
    return CayleyPlane.from_frame(np.vstack([w, xyz]))


def random_cayley_plane(rng: np.random.Generator) -> CayleyPlane:
    """Random Cayley plane from a Gaussian orthonormal triple."""
    return cayley_plane_from_triple(*random_frame(rng, 3))


def imaginary_intersection(p, tol: float = DEGENERATE_TOL) -> np.ndarray:
    """Orthonormal basis (rows) of the plane's intersection with Im O.

    The real direction inside the plane, ``P·1``, is projected out of the
    frame vectors, then a pivoted Gram-Schmidt keeps the largest residuals.
    The result has 3 rows, or 4 when the plane is purely imaginary.
    """
    f = _frame_of(p)
    one_in_plane = f[:, 0] @ f
    vs = f.copy()
    if np.linalg.norm(one_in_plane) > tol:
        n = one_in_plane / np.linalg.norm(one_in_plane)
        vs = vs - np.outer(vs @ n, n)
    vs[:, 0] = 0.0
    basis = []
    remaining = list(range(4))
    while remaining:
        norms = [np.linalg.norm(vs[k]) for k in remaining]
        pick = int(np.argmax(norms))
        if norms[pick] < tol:
            break
        k = remaining.pop(pick)
        v = vs[k] / norms[pick]
        basis.append(v)
        for m in remaining:
            vs[m] = vs[m] - (vs[m] @ v) * v
    return np.array(basis).reshape(-1, 8)


def _imaginary_triple(f: np.ndarray) -> np.ndarray:
    vs = imaginary_intersection(f)
    if len(vs) < 3:
        raise DegenerateInput(f"imaginary part of the plane is {len(vs)}-dimensional")
    if len(vs) == 4:
        # drop the vector most parallel to cross3 of the other three
        scores = []
        for k in range(4):
            rest = np.delete(vs, k, axis=0)
            scores.append(abs(vs[k] @ alg.cross3(*rest)))
        vs = np.delete(vs, int(np.argmax(scores)), axis=0)
    return vs


def _tricomplex_from_frame(f: np.ndarray) -> np.ndarray:
    x, y, z = _imaginary_triple(f)
    return np.array([alg.cross2(y, z), alg.cross2(z, x), alg.cross2(x, y)])


def tricomplex_of_plane(p) -> np.ndarray:
    """Tricomplex triple ``(u, v, w)`` of a Cayley plane as a ``(3, 8)`` array."""
    if isinstance(p, CayleyPlane):
        return p.tricomplex
    f = _frame_of(p)
    res = cayley_plane_residual(f)
    if not res < CAYLEY_TOL:
        raise NotCayley(f"closure residual {res:.3g}")
    return _tricomplex_from_frame(f)


def hypercomplex_residuals(triple, x) -> np.ndarray:
    """Residuals of the quaternion relations of ``(J_u, J_v, J_w)`` at ``x``.

    Columns: ``J_v J_u - J_w``, ``J_u J_v + J_w``, ``J_w J_v - J_u``,
    ``J_v J_w + J_u``, ``J_u J_w - J_v``, ``J_w J_u + J_v`` and
    ``J_a J_a + 1`` for each operator, all applied to ``x`` (rows, if 2-D).
    """
    ju, jv, jw = (right_mult_operator(t) for t in triple)
    x = np.atleast_2d(np.asarray(x, dtype=float))
    au, av, aw = x @ ju.T, x @ jv.T, x @ jw.T
    terms = [
        au @ jv.T - aw,
        av @ ju.T + aw,
        av @ jw.T - au,
        aw @ jv.T + au,
        aw @ ju.T - av,
        au @ jw.T + av,
        au @ ju.T + x,
        av @ jv.T + x,
        aw @ jw.T + x,
    ]
    return np.stack([np.linalg.norm(t, axis=-1) for t in terms], axis=-1)


def hypercomplex_check(p) -> float:
    """Largest violation of the hypercomplex relations on the plane's frame."""
    cp = _as_cayley(p)
    return float(hypercomplex_residuals(cp.tricomplex, cp.frame).max())


def plane_from_tricomplex(triple, tol: float = 1e-8) -> CayleyPlane:
    """The unique Cayley plane on which ``(J_u, J_v, J_w)`` is hypercomplex.

    Computed as the kernel of ``x -> (x u) v - x w`` and oriented by
    ``(x0, J_u x0, J_v x0, J_w x0)``.
    """
    t = np.asarray(triple, dtype=float)
    ju, jv, jw = (right_mult_operator(x) for x in t)
    ker = kernel(jv @ ju - jw, tol)
    if len(ker) != 4:
        raise BadKernelDimension(f"kernel has dimension {len(ker)}, expected 4")
    x0 = ker[0]
    frame = gram_schmidt([x0, ju @ x0, jv @ x0, jw @ x0])
    cp = CayleyPlane.from_frame(frame)
    res = float(hypercomplex_residuals(t, frame).max())
    if not res < tol:
        raise BadKernelDimension(f"recovered plane fails the hypercomplex relations ({res:.3g})")
    return cp


def canonical_cayley_frame(p) -> np.ndarray:
    """Frame ``(x, J_u x, J_v x, J_w x)`` with ``x`` the plane's first frame vector."""
    cp = _as_cayley(p)
    x = cp.frame[0]
    ju, jv, jw = cp.operators
    return np.array([x, ju @ x, jv @ x, jw @ x])
