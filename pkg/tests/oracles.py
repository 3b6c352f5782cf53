"""Independent reference computations used by the tests.

Nothing here calls into the package's multiplication code: quaternions use
the Hamilton formula written out by components and octonion products go
through explicit quaternion pairs.
"""

import numpy as np


def hamilton(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return np.array([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ])


def qconj(q):
    return np.array([q[0], -q[1], -q[2], -q[3]])


def octonion_product(x, y):
    """(a + b e)(c + d e) = (ac - conj(d) b) + (b conj(c) + d a) e, one pair at a time."""
    a, b = np.asarray(x[:4], float), np.asarray(x[4:], float)
    c, d = np.asarray(y[:4], float), np.asarray(y[4:], float)
    first = hamilton(a, c) - hamilton(qconj(d), b)
    second = hamilton(b, qconj(c)) + hamilton(d, a)
    return np.concatenate([first, second])


def oconj(x):
    out = -np.asarray(x, float).copy()
    out[0] = -out[0]
    return out


# products worked out by hand from f = ie, g = je, h = ke and e^2 = -1
HAND_TABLE = [
    ("i", "e", 1, "f"),
    ("e", "i", -1, "f"),
    ("j", "e", 1, "g"),
    ("k", "e", 1, "h"),
    ("f", "e", -1, "i"),
    ("e", "f", 1, "i"),
    ("f", "g", -1, "k"),
    ("g", "h", -1, "i"),
    ("h", "h", -1, "1"),
    ("i", "j", 1, "k"),
    ("j", "i", -1, "k"),
    ("e", "e", -1, "1"),
]


def cayley_form(frame):
    """Cayley calibration <f1, f2 x f3 x f4> written with the oracle product."""
    f1, x, y, z = (np.asarray(v, float) for v in frame)
    yb = oconj(y)
    c = 0.5 * (octonion_product(x, octonion_product(yb, z)) - octonion_product(z, octonion_product(yb, x)))
    return float(f1 @ c)


def trig_coefficients(residual, frame, rotate):
    """Fit v(theta) = P + Q cos 2theta + R sin 2theta from three samples.

    The frame residual is bilinear in the frame and the rotation is linear in
    (cos theta, sin theta), so three samples determine it exactly.
    """
    v0 = residual(rotate(frame, 0.0))
    v45 = residual(rotate(frame, np.pi / 4))
    v90 = residual(rotate(frame, np.pi / 2))
    p = (v0 + v90) / 2
    q = (v0 - v90) / 2
    r = v45 - p
    return p, q, r


def trig_roots(q, r):
    """Angles theta in [0, 2pi) with Q cos 2theta + R sin 2theta = 0, for Q parallel to R."""
    n = q if np.linalg.norm(q) >= np.linalg.norm(r) else r
    n = n / np.linalg.norm(n)
    phi = np.arctan2(-(q @ n), r @ n) % np.pi
    base = phi / 2
    return np.sort((base + np.pi / 2 * np.arange(4)) % (2 * np.pi))
