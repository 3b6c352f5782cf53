"""Quaternion and octonion arithmetic.

Elements are plain numpy arrays whose last axis holds the coefficients:
length 4 over ``(1, i, j, k)`` for quaternions and length 8 over
``(1, i, j, k, e, f, g, h)`` for octonions, where ``f = ie``, ``g = je`` and
``h = ke``.  Every function broadcasts over the leading axes, so a batch of
``n`` octonions is an ``(n, 8)`` array.

An octonion ``x`` is also read as a pair of quaternions ``(a, b)`` meaning
``a + b e``: ``a`` occupies slots 0-3 and ``b`` slots 4-7.  Products follow
the Cayley-Dickson rule

    (a + b e)(c + d e) = (a c - conj(d) b) + (b conj(c) + d a) e.

The rule is evaluated once at import to build the signed 8x8 multiplication
table; :func:`oct_mul` contracts against that table while
:func:`oct_mul_pairs` evaluates the pair formula directly, so the two can be
checked against each other.
"""

from __future__ import annotations

import numpy as np

BASIS_NAMES = ("1", "i", "j", "k", "e", "f", "g", "h")
_SLOT = {name: n for n, name in enumerate(BASIS_NAMES)}

_QCONJ = np.array([1.0, -1.0, -1.0, -1.0])
_OCONJ = np.array([1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0])
_IMAG = np.array([0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0])


def basis(name: str) -> np.ndarray:
    """Unit octonion for one of the names in :data:`BASIS_NAMES`."""
    out = np.zeros(8)
    out[_SLOT[name]] = 1.0
    return out


def octonion(**coeffs: float) -> np.ndarray:
    """Build an octonion from named coefficients, e.g. ``octonion(i=1, g=1)``.

    The real unit is spelled ``re`` since ``1`` is not a valid keyword.
    """
    out = np.zeros(8)
    for name, value in coeffs.items():
        out[0 if name == "re" else _SLOT[name]] += value
    return out


# -- quaternions ------------------------------------------------------------

def quat_mul(p, q):
    """Hamilton product of quaternion arrays ``p`` and ``q``."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    a1, b1, c1, d1 = np.moveaxis(p, -1, 0)
    a2, b2, c2, d2 = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ],
        axis=-1,
    )


def quat_conj(q):
    return np.asarray(q, dtype=float) * _QCONJ


def quat_norm(q):
    return np.linalg.norm(q, axis=-1)


# -- octonions --------------------------------------------------------------

def oct_mul_pairs(x, y):
    """Octonion product evaluated straight from the Cayley-Dickson formula."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    a, b = x[..., :4], x[..., 4:]
    c, d = y[..., :4], y[..., 4:]
    return np.concatenate(
        [
            quat_mul(a, c) - quat_mul(quat_conj(d), b),
            quat_mul(b, quat_conj(c)) + quat_mul(d, a),
        ],
        axis=-1,
    )


def _build_structure() -> np.ndarray:
    eye = np.eye(8)
    table = oct_mul_pairs(eye[:, None, :], eye[None, :, :])
    # every basis product is a signed basis element; snap to exact integers
    rounded = np.rint(table)
    if not np.array_equal(np.abs(rounded).sum(axis=-1), np.ones((8, 8))):
        raise AssertionError("basis products are not signed basis elements")
    rounded.setflags(write=False)
    return rounded


#: ``STRUCTURE[a, b]`` is the coefficient vector of ``e_a e_b``.
STRUCTURE = _build_structure()
_STRUCTURE_FLAT = STRUCTURE.reshape(8, 64)


def oct_mul(x, y):
    """Octonion product via the precomputed multiplication table."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    left = (x @ _STRUCTURE_FLAT).reshape(x.shape[:-1] + (8, 8))
    return np.einsum("...bc,...b->...c", left, y)


def oct_conj(x):
    return np.asarray(x, dtype=float) * _OCONJ


def re(x):
    return np.asarray(x, dtype=float)[..., 0]


def im(x):
    return np.asarray(x, dtype=float) * _IMAG


def inner(x, y):
    """Euclidean inner product of coefficient vectors."""
    return np.sum(np.asarray(x, dtype=float) * np.asarray(y, dtype=float), axis=-1)


def norm(x):
    return np.linalg.norm(x, axis=-1)


def associator(x, y, z):
    """``(xy)z - x(yz)``."""
    return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))


def cross2(x, y):
    """Two-fold cross product ``Im(conj(y) x)``."""
    return im(oct_mul(oct_conj(y), x))


def cross3(x, y, z):
    """Three-fold cross product ``(x(conj(y) z) - z(conj(y) x)) / 2``."""
    yb = oct_conj(y)
    return 0.5 * (oct_mul(x, oct_mul(yb, z)) - oct_mul(z, oct_mul(yb, x)))


def identity_eq1_residual(x, y, w):
    """Residual of ``x(ȳw) = -y(x̄w)`` and ``(wȳ)x = -(wx̄)y``.

    Only meaningful when ``x`` is orthogonal to ``y``; that is not checked.
    Returns the larger of the two clause residual norms.
    """
    xb, yb = oct_conj(x), oct_conj(y)
    left = oct_mul(x, oct_mul(yb, w)) + oct_mul(y, oct_mul(xb, w))
    right = oct_mul(oct_mul(w, yb), x) + oct_mul(oct_mul(w, xb), y)
    return np.maximum(norm(left), norm(right))


def identity_eq2_residual(x, y, z):
    """Residual of the Moufang identity ``(xy)(zx) = (x(yz))x``."""
    lhs = oct_mul(oct_mul(x, y), oct_mul(z, x))
    rhs = oct_mul(oct_mul(x, oct_mul(y, z)), x)
    return norm(lhs - rhs)


def left_mult_matrix(u) -> np.ndarray:
    """8x8 matrix of ``x -> u x``."""
    return np.tensordot(np.asarray(u, dtype=float), STRUCTURE, axes=(0, 0)).T


def right_mult_matrix(u) -> np.ndarray:
    """8x8 matrix of ``x -> x u``."""
    return np.tensordot(np.asarray(u, dtype=float), STRUCTURE, axes=(0, 1)).T


def multiplication_table() -> list[tuple[str, str, int, str]]:
    """Rows ``(left, right, sign, result)`` for all 64 basis products."""
    rows = []
    for a, left in enumerate(BASIS_NAMES):
        for b, right in enumerate(BASIS_NAMES):
            c = int(np.flatnonzero(STRUCTURE[a, b])[0])
            rows.append((left, right, int(STRUCTURE[a, b, c]), BASIS_NAMES[c]))
    return rows


# -- sampling ---------------------------------------------------------------

def random_octonion(rng: np.random.Generator, size=None, normalize=False):
    """Gaussian octonion(s); optionally scaled to unit norm."""
    shape = (8,) if size is None else tuple(np.atleast_1d(size)) + (8,)
    x = rng.standard_normal(shape)
    if normalize:
        x = x / norm(x)[..., None]
    return x


def random_unit_imaginary(rng: np.random.Generator, size=None):
    x = im(random_octonion(rng, size))
    return x / norm(x)[..., None]


def random_unit_quaternion(rng: np.random.Generator, size=None):
    shape = (4,) if size is None else tuple(np.atleast_1d(size)) + (4,)
    q = rng.standard_normal(shape)
    return q / np.linalg.norm(q, axis=-1, keepdims=True)
