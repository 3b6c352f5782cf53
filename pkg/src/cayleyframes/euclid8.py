"""Dense linear algebra on R^8 and its 4-planes.

Vectors of R^8 are octonion coefficient arrays (same slot order), frames are
``(4, 8)`` arrays whose rows are the frame vectors, and 4-planes carry an
orthonormal frame together with the orthogonal projector onto their span.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DegenerateInput, NotSamePlane

DEGENERATE_TOL = 1e-8
FRAME_TOL = 1e-9


def gram_schmidt(vectors, tol: float = DEGENERATE_TOL) -> np.ndarray:
    """Orthonormalize the rows of ``vectors`` in order (modified Gram-Schmidt).

    Raises :class:`DegenerateInput` as soon as a residual norm drops below
    ``tol``.
    """
    vs = np.array(vectors, dtype=float, ndmin=2)
    if vs.shape[0] > vs.shape[1]:
        raise DegenerateInput(f"{vs.shape[0]} vectors cannot be independent in R^{vs.shape[1]}")
    out = np.empty_like(vs)
    for n, v in enumerate(vs):
        v = v.copy()
        for _ in range(2):  # second pass restores orthogonality to machine precision
            for u in out[:n]:
                v -= (u @ v) * u
        length = np.linalg.norm(v)
        if length < tol:
            raise DegenerateInput(f"vector {n} is dependent on its predecessors (residual {length:.3g})")
        out[n] = v / length
    return out


def projector(frame) -> np.ndarray:
    """Orthogonal projector ``sum f_i f_i^T`` onto the span of an orthonormal frame."""
    f = np.asarray(frame, dtype=float)
    return f.T @ f


def is_orthonormal(frame, tol: float = FRAME_TOL) -> bool:
    f = np.asarray(frame, dtype=float)
    return bool(np.abs(f @ f.T - np.eye(len(f))).max() < tol)


@dataclass(frozen=True, eq=False)
class Plane4:
    """Oriented 4-plane in R^8: an orthonormal frame plus its projector."""

    frame: np.ndarray
    projector: np.ndarray = field(repr=False)

    @classmethod
    def from_frame(cls, frame) -> "Plane4":
        f = np.array(frame, dtype=float)
        if f.shape != (4, 8):
            raise ValueError(f"expected a (4, 8) frame, got {f.shape}")
        if not is_orthonormal(f):
            raise ValueError("frame is not orthonormal")
        f.setflags(write=False)
        p = projector(f)
        p.setflags(write=False)
        return cls(f, p)

    @classmethod
    def span(cls, vectors) -> "Plane4":
        """Plane spanned by four vectors, oriented by their order."""
        return cls.from_frame(gram_schmidt(vectors))


def _as_projector(p) -> np.ndarray:
    if isinstance(p, Plane4):
        return p.projector
    a = np.asarray(p, dtype=float)
    return projector(a) if a.shape[0] != a.shape[1] else a


def projector_distance(p, q) -> float:
    """Frobenius distance between the projectors of two subspaces.

    Accepts :class:`Plane4`, orthonormal frames (``(k, 8)`` arrays) or
    projectors directly.
    """
    return float(np.linalg.norm(_as_projector(p) - _as_projector(q)))


def same_plane(p, q, tol: float = 1e-8) -> bool:
    """True when the projectors agree to ``tol`` (orientation is ignored)."""
    return projector_distance(p, q) < tol


def orientation_sign(a, b, tol: float = 1e-6) -> int:
    """Sign of the change of basis between two frames of the same plane."""
    fa = a.frame if isinstance(a, Plane4) else np.asarray(a, dtype=float)
    fb = b.frame if isinstance(b, Plane4) else np.asarray(b, dtype=float)
    if not same_plane(fa, fb, tol):
        raise NotSamePlane(f"projector distance {projector_distance(fa, fb):.3g}")
    return 1 if np.linalg.det(fb @ fa.T) > 0 else -1


def kernel(m, tol: float = 1e-8) -> np.ndarray:
    """Orthonormal basis (rows) of the numerical kernel of ``m``.

    Right singular vectors whose singular value is below ``tol`` times the
    largest one.  A zero matrix has the whole space as kernel.
    """
    m = np.asarray(m, dtype=float)
    _, s, vt = np.linalg.svd(m)
    n = m.shape[1]
    if s.size == 0 or s[0] == 0.0:
        return np.eye(n)
    s_full = np.zeros(n)
    s_full[: s.size] = s
    return vt[s_full < tol * s[0]]


class RankResult(NamedTuple):
    rank: int
    gap: float
    singular_values: np.ndarray


def numerical_rank(m, rel_tol: float = 1e-6) -> RankResult:
    """Count singular values above ``rel_tol * sigma_max``.

    ``gap`` is ``sigma_r / sigma_{r+1}``; it is ``inf`` when nothing sits below
    the cut (full rank, or an exactly zero tail).
    """
    s = np.linalg.svd(np.asarray(m, dtype=float), compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return RankResult(0, np.inf, s)
    r = int(np.sum(s > rel_tol * s[0]))
    if r == s.size or s[r] == 0.0:
        gap = np.inf
    else:
        gap = float(s[r - 1] / s[r])
    return RankResult(r, gap, s)


def central_jacobian(fun, x, step: float = 1e-5) -> np.ndarray:
    """Central-difference Jacobian of a vector function at ``x``."""
    x = np.asarray(x, dtype=float)
    cols = []
    for k in range(x.size):
        dx = np.zeros_like(x)
        dx.flat[k] = step
        cols.append((np.asarray(fun(x + dx)) - np.asarray(fun(x - dx))).ravel() / (2 * step))
    return np.stack(cols, axis=-1)


def random_frame(rng: np.random.Generator, k: int = 4) -> np.ndarray:
    """Orthonormal ``k``-frame from Gaussian vectors."""
    for _ in range(8):
        try:
            return gram_schmidt(rng.standard_normal((k, 8)))
        except DegenerateInput:
            continue
    raise DegenerateInput("could not sample an independent family")
