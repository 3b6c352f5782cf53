"""Property suites, Monte Carlo campaigns and pinned regressions.

Each :class:`Check` maps a list of per-trial random generators to one
statistic per trial.  Generators are derived from ``(seed, suite, check,
trial index)`` so a trial draws the same numbers however the trials are
split into chunks or spread over worker processes.  Chunks have a fixed
size, which keeps the floating point path identical as well.
"""

from __future__ import annotations

import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations
from typing import Callable, Sequence

import numpy as np

from . import __version__
from . import algebra as alg
from . import io as fixtures
from .cayley import (
    CayleyPlane,
    cayley_frame_residual,
    cayley_plane_residual,
    canonical_cayley_frame,
    hypercomplex_residuals,
    imaginary_intersection,
    is_cayley_frame,
    is_cayley_plane,
    plane_from_tricomplex,
    random_cayley_plane,
    tricomplex_of_plane,
)
from .errors import BadKernelDimension, NoSolution, RankAmbiguous
from .euclid8 import (
    gram_schmidt,
    kernel,
    orientation_sign,
    projector,
    projector_distance,
    random_frame,
)
from . import reduction as red

SUITES = ("algebra", "geometry", "reduction")
CHUNK = 250
REPORT_SCHEMA = 1


@dataclass(frozen=True)
class Check:
    """One named verification.

    ``run(rngs, threshold)`` returns one statistic per generator.  With
    ``reduce="max"`` the check passes when the largest statistic is below
    the threshold; with ``reduce="fraction"`` the statistics are violation
    flags and their mean is compared instead.
    """

    name: str
    threshold: float
    run: Callable[[Sequence[np.random.Generator], float], np.ndarray]
    trial_factor: float = 1.0
    max_trials: int | None = None
    reduce: str = "max"
    inclusive: bool = False
    aliases: tuple[str, ...] = ()
    doc: str = ""

    @property
    def suite(self) -> str:
        return self.name.split(".", 1)[0]

    def trials_for(self, base: int) -> int:
        n = max(1, int(round(base * self.trial_factor)))
        return min(n, self.max_trials) if self.max_trials else n

    def passes(self, statistic: float, threshold: float | None = None) -> bool:
        threshold = self.threshold if threshold is None else threshold
        if not math.isfinite(statistic):
            return False
        return statistic <= threshold if self.inclusive else statistic < threshold


def trial_rng(seed: int, check_name: str, index: int) -> np.random.Generator:
    suite, _, check = check_name.partition(".")
    entropy = [seed, zlib.crc32(suite.encode()), zlib.crc32(check.encode()), index]
    return np.random.default_rng(np.random.SeedSequence(entropy))


# -- sampling helpers ---------------------------------------------------------

def _unit(rng, n=1):
    x = rng.standard_normal((n, 8))
    return x / np.linalg.norm(x, axis=-1, keepdims=True)


def _stack(rngs, draw):
    return np.array([draw(r) for r in rngs])


def _unit_triples(rngs):
    a = _stack(rngs, lambda r: _unit(r, 3))
    return a[:, 0], a[:, 1], a[:, 2]


def _orthonormal_imaginary_pair(r):
    v = alg.im(r.standard_normal((2, 8)))
    return gram_schmidt(v)


def _pinned(fn):
    def run(rngs, threshold):
        return np.array([fn()] * len(rngs))

    return run


# -- algebra ------------------------------------------------------------------

def _conj_antihom(rngs, _):
    x, y, _z = _unit_triples(rngs)
    lhs = alg.oct_conj(alg.oct_mul(x, y))
    rhs = alg.oct_mul(alg.oct_conj(y), alg.oct_conj(x))
    return alg.norm(lhs - rhs)


def _perm_sign(p):
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
    return -1.0 if inversions % 2 else 1.0


def _associator_alternating(rngs, _):
    args = _unit_triples(rngs)
    base = alg.associator(*args)
    worst = np.zeros(len(rngs))
    for p in permutations(range(3)):
        val = alg.associator(*(args[k] for k in p))
        worst = np.maximum(worst, alg.norm(val - _perm_sign(p) * base))
    return worst


def _associator_vanishing(rngs, _):
    x, y, _z = _unit_triples(rngs)
    xb, yb = alg.oct_conj(x), alg.oct_conj(y)
    cases = [(x, y, x), (x, x, y), (y, x, x), (x, y, xb), (xb, x, y), (x, y, y), (x, y, yb), (yb, x, y)]
    return np.max([alg.norm(alg.associator(*c)) for c in cases], axis=0)


def _eq1(rngs, _):
    xy = _stack(rngs, lambda r: gram_schmidt(r.standard_normal((2, 8))))
    w = _stack(rngs, lambda r: _unit(r)[0])
    return alg.identity_eq1_residual(xy[:, 0], xy[:, 1], w)


def _moufang(rngs, _):
    return alg.identity_eq2_residual(*_unit_triples(rngs))


def _composition(rngs, _):
    x = _stack(rngs, lambda r: r.standard_normal((2, 8)))
    prod = alg.norm(alg.oct_mul(x[:, 0], x[:, 1]))
    expect = alg.norm(x[:, 0]) * alg.norm(x[:, 1])
    return np.abs(prod - expect) / expect


def _table_consistency(rngs, _):
    x = _stack(rngs, lambda r: r.standard_normal((2, 8)))
    return alg.norm(alg.oct_mul(x[:, 0], x[:, 1]) - alg.oct_mul_pairs(x[:, 0], x[:, 1]))


def _table_pins():
    b = alg.basis
    pins = [
        (alg.oct_mul(b("i"), b("e")), b("f")),
        (alg.oct_mul(b("j"), b("e")), b("g")),
        (alg.oct_mul(b("k"), b("e")), b("h")),
        (alg.oct_mul(alg.oct_mul(b("i"), b("j")), b("e")), b("h")),
        (alg.oct_mul(b("i"), alg.oct_mul(b("j"), b("e"))), -b("h")),
        (alg.associator(b("i"), b("j"), b("e")), 2 * b("h")),
    ]
    return max(float(np.abs(got - want).max()) for got, want in pins)


def _cross2_pins():
    b = alg.basis
    return max(
        float(np.abs(alg.cross2(b("i"), b("j")) - b("k")).max()),
        float(np.abs(alg.cross2(b("e"), b("e"))).max()),
    )


def _cross2_mul(rngs, _):
    xy = _stack(rngs, _orthonormal_imaginary_pair)
    return alg.norm(alg.cross2(xy[:, 0], xy[:, 1]) - alg.oct_mul(xy[:, 0], xy[:, 1]))


def _cross3_pins():
    b = alg.basis
    return max(
        float(np.abs(alg.cross3(b("i"), b("j"), b("k")) - b("1")).max()),
        float(np.abs(alg.cross3(b("1"), b("i"), b("j")) + b("k")).max()),
    )


def _cross3_orthogonal(rngs, _):
    xyz = _stack(rngs, lambda r: random_frame(r, 3))
    c = alg.cross3(xyz[:, 0], xyz[:, 1], xyz[:, 2])
    dots = np.abs(np.einsum("nkd,nd->nk", xyz, c)).max(axis=1)
    return np.maximum(dots, np.abs(alg.norm(c) - 1.0))


# -- geometry -----------------------------------------------------------------

def _example_frame():
    return fixtures.frame_from_json(fixtures.load_fixture("paper-plane"))


def _example_closure():
    return cayley_plane_residual(_example_frame())


def _example_tricomplex_span():
    t = tricomplex_of_plane(_example_frame())
    want = fixtures.triple_from_json(fixtures.load_fixture("tricomplex-ije"))
    return projector_distance(projector(t), projector(want))


def _example_from_tricomplex():
    t = fixtures.triple_from_json(fixtures.load_fixture("tricomplex-ije"))
    return projector_distance(plane_from_tricomplex(t).plane, _example_frame())


def _planes(rngs):
    return [random_cayley_plane(r) for r in rngs]


def _generator_validity(rngs, _):
    return np.array([cayley_plane_residual(p) for p in _planes(rngs)])


def _prop33_canonical(rngs, _):
    return np.array([cayley_frame_residual(canonical_cayley_frame(p)) for p in _planes(rngs)])


def _prop33_equivalence(rngs, threshold):
    # per trial: one canonical Cayley frame (both predicates true) and one
    # generic frame (both false); count disagreements
    out = []
    for r in rngs:
        cf = canonical_cayley_frame(random_cayley_plane(r))
        gf = random_frame(r)
        bad = 0
        bad += not (is_cayley_frame(cf, threshold) and is_cayley_plane(cf, threshold))
        bad += is_cayley_frame(gf, threshold) or is_cayley_plane(gf, threshold)
        out.append(bad)
    return np.array(out, dtype=float)


def _roundtrip(rngs, threshold):
    out = []
    for p in _planes(rngs):
        try:
            q = plane_from_tricomplex(p.tricomplex)
        except BadKernelDimension:
            out.append(np.inf)
            continue
        out.append(projector_distance(p.plane, q.plane))
    return np.array(out)


def _kernel_dimension(rngs, _):
    out = []
    for p in _planes(rngs):
        ju, jv, jw = p.operators
        out.append(abs(len(kernel(jv @ ju - jw, 1e-8)) - 4))
    return np.array(out, dtype=float)


def _hypercomplex(rngs, _):
    return np.array([hypercomplex_residuals(p.tricomplex, p.frame).max() for p in _planes(rngs)])


def _hypercomplex_offplane(rngs, _):
    flags = []
    for r in rngs:
        p = random_cayley_plane(r)
        x = _unit(r)[0]
        flags.append(hypercomplex_residuals(p.tricomplex, x).max() <= 0.1)
    return np.array(flags, dtype=float)


def _imag_dim(rngs, _):
    return np.array([float(len(imaginary_intersection(p)) not in (3, 4)) for p in _planes(rngs)])


def _span_independence(rngs, _):
    out = []
    for r in rngs:
        p = random_cayley_plane(r)
        base = projector(p.tricomplex)
        imag = imaginary_intersection(p)[:3]
        worst = 0.0
        for _ in range(10):
            rot, _r = np.linalg.qr(r.standard_normal((3, 3)))
            x, y, z = rot @ imag
            t = np.array([alg.cross2(y, z), alg.cross2(z, x), alg.cross2(x, y)])
            worst = max(worst, projector_distance(projector(t), base))
        out.append(worst)
    return np.array(out)


# -- reduction ----------------------------------------------------------------

def _moment_pins():
    eye = np.eye(8)
    h = red.frame_to_sphere(eye[:4])
    g = red.frame_to_sphere(eye[[0, 1, 2, 4]])
    return max(
        float(np.linalg.norm(red.moment_mu(h))),
        float(np.linalg.norm(red.moment_nu(h))),
        float(np.linalg.norm(red.moment_nu(g) - np.array([0.0, 0.5, 0.0, 0.0]))),
    )


def _sphere_points(rngs):
    h = _stack(rngs, lambda r: r.standard_normal((8, 4)))
    return h / red.sphere_norm(h)[:, None, None]


def _conjugate_by(m, q):
    qb = alg.quat_conj(q)
    return alg.quat_mul(alg.quat_mul(qb, m), q)


def _mu_equivariance(rngs, _):
    h = _sphere_points(rngs)
    q = _stack(rngs, alg.random_unit_quaternion)
    lhs = red.moment_mu(red.sp1_act(h, q))
    rhs = _conjugate_by(red.moment_mu(h), q[:, None, :])
    return np.linalg.norm(lhs - rhs, axis=(-2, -1))


def _nu_equivariance(rngs, _):
    h = _sphere_points(rngs)
    q = _stack(rngs, alg.random_unit_quaternion)
    lhs = red.moment_nu(red.sp1_act(h, q))
    rhs = _conjugate_by(red.moment_nu(h), q)
    return np.linalg.norm(lhs - rhs, axis=-1)


def _nu_u1_invariance(rngs, _):
    h = _sphere_points(rngs)
    theta = np.array([r.uniform(0, 2 * np.pi) for r in rngs])
    return np.linalg.norm(red.moment_nu(red.u1_act(h, theta)) - red.moment_nu(h), axis=-1)


def _mu_orthonormality(rngs, _):
    # both directions: orthonormal frames and perturbed ones must agree
    bad = []
    for r in rngs:
        count = 0
        for frame in (random_frame(r), random_frame(r) + 1e-3 * r.standard_normal((4, 8))):
            h = red.frame_to_sphere(frame)
            h = h / red.sphere_norm(h)
            mu_zero = np.linalg.norm(red.moment_mu(h)) < 1e-10
            vecs = 2 * np.array(red.sphere_to_vectors(h))
            gram_ok = np.abs(vecs @ vecs.T - np.eye(4)).max() < 1e-8
            count += mu_zero != gram_ok
        bad.append(count)
    return np.array(bad, dtype=float)


def _prop41_forward(rngs, _):
    out = []
    for r in rngs:
        h = red.random_zero_set_point(r)[0]
        _, mu_res, nu_res = red.in_zero_set(h)
        out.append(max(mu_res, nu_res))
    return np.array(out)


def _prop41_reverse(rngs, threshold):
    out = []
    for r in rngs:
        h = red.random_zero_set_point(r)[0]
        try:
            sols = red.angle_search(h, tol=threshold)
        except NoSolution:
            out.append(np.inf)
            continue
        frame = red.sphere_to_frame(h)
        res = [cayley_frame_residual(red.rotate_frame(frame, t)) for t in sols]
        out.append(min(res) if res else np.inf)
    return np.array(out)


def _closure_mismatch(sols) -> float:
    if not 1 <= len(sols) <= 8:
        return np.inf
    s = np.asarray(sols)
    worst = 0.0
    for t in s:
        shifted = (t + np.pi / 2) % (2 * np.pi)
        d = np.abs((s - shifted + np.pi) % (2 * np.pi) - np.pi).min()
        worst = max(worst, d)
    return float(worst)


def _angle_structure(rngs, _):
    out = []
    for r in rngs:
        try:
            out.append(_closure_mismatch(red.angle_search(red.random_zero_set_point(r)[0])))
        except NoSolution:
            out.append(np.inf)
    return np.array(out)


PINNED_ANGLES = (np.pi / 6, 2 * np.pi / 3, 7 * np.pi / 6, 5 * np.pi / 3)


def _prop41_pinned():
    # the four listed angles are solutions and the solution set is closed
    # under +pi/2; the orbit is degenerate so the set itself is the full grid
    h = fixtures.sphere_from_json(fixtures.load_fixture("hframe-pi3"))
    frame = red.sphere_to_frame(h)
    res = max(cayley_frame_residual(red.rotate_frame(frame, t)) for t in PINNED_ANGLES)
    sols = red.angle_search(h, tol=1e-9)
    s = np.asarray(sols)
    closure = max(
        np.abs((s - ((t + np.pi / 2) % (2 * np.pi)) + np.pi) % (2 * np.pi) - np.pi).min() for t in s
    )
    return max(float(res), float(closure))


def _sp1_preserves_v(rngs, _):
    out = []
    for r in rngs:
        frame = red.random_cayley_frame(r)
        q = alg.random_unit_quaternion(r)
        moved = red.sphere_to_frame(red.sp1_act(red.frame_to_sphere(frame), q))
        out.append(cayley_frame_residual(moved))
    return np.array(out)


def _tau_square(rngs, _):
    out = []
    for r in rngs:
        frame = red.random_cayley_frame(r)
        h = red.frame_to_sphere(frame)
        h2 = red.tau_act(red.tau_act(h))
        moved = red.sphere_to_frame(h2)
        sign_bad = 0.0 if orientation_sign(frame, moved) == 1 else np.inf
        out.append(max(float(np.linalg.norm(h2 + h)), sign_bad))
    return np.array(out)


def _tau_via_sphere(frame) -> np.ndarray:
    return red.sphere_to_frame(red.tau_act(red.frame_to_sphere(frame)))


def _tau_pins():
    return max(
        projector_distance(_tau_via_sphere(np.eye(8)[:4]), np.eye(8)[:4]),
        projector_distance(_tau_via_sphere(_example_frame()), _example_frame()),
    )


def _tau_fraction(rngs, _):
    return np.array([float(red.is_jstd_invariant(p)) for p in _planes(rngs)])


def random_complex_cayley_plane(rng) -> CayleyPlane:
    """Cayley plane whose tricomplex span contains ``i``; these are J_STD-invariant."""
    i = alg.basis("i")
    v = alg.im(rng.standard_normal((2, 8)))
    v -= np.outer(v @ i, i)
    v = gram_schmidt(v)
    return plane_from_tricomplex(np.vstack([i, v]))


def _tau_criterion(rngs, _):
    out = []
    for n, r in enumerate(rngs):
        if n == 0:
            frame = np.eye(8)[:4]
        elif n == 1:
            frame = _example_frame()
        elif n % 2:
            frame = random_complex_cayley_plane(r).frame
        else:
            frame = random_cayley_plane(r).frame
        fixed = projector_distance(_tau_via_sphere(frame), frame) < 1e-8
        out.append(float(fixed != red.is_jstd_invariant(frame)))
    return np.array(out)


def _rank_check(fn, expected, make_point):
    def run(rngs, _):
        out = []
        for r in rngs:
            value = np.inf
            for _attempt in range(5):
                try:
                    value = float(abs(fn(make_point(r)).rank - expected))
                    break
                except RankAmbiguous:
                    continue
            out.append(value)
        return np.array(out)

    return run


def _zero_set_point(r):
    return red.random_zero_set_point(r)[0]


def _cayley_frame_point(r):
    return red.frame_to_sphere(red.random_cayley_frame(r))


CHECKS: dict[str, Check] = {}


def _register(*checks: Check) -> None:
    for c in checks:
        CHECKS[c.name] = c


_register(
    Check("algebra.table_pins", 1e-15, _pinned(_table_pins), max_trials=1,
          doc="i e = f, j e = g, k e = h, (ij)e = h, i(je) = -h, [i,j,e] = 2h"),
    Check("algebra.table_consistency", 1e-12, _table_consistency, 10,
          doc="table product equals the Cayley-Dickson pair formula"),
    Check("algebra.composition", 1e-12, _composition, 10, doc="|xy| = |x||y| (relative)"),
    Check("algebra.conj_antihom", 1e-11, _conj_antihom, 10, doc="conj(xy) = conj(y) conj(x)"),
    Check("algebra.associator_alternating", 1e-11, _associator_alternating, 10,
          doc="associator changes sign with permutation parity"),
    Check("algebra.associator_vanishing", 1e-11, _associator_vanishing, 10,
          doc="associator vanishes on equal or conjugate arguments"),
    Check("algebra.eq1", 1e-11, _eq1, 10, doc="x(ȳw) = -y(x̄w), (wȳ)x = -(wx̄)y for x ⊥ y"),
    Check("algebra.moufang", 1e-11, _moufang, 10, doc="(xy)(zx) = x(yz)x"),
    Check("algebra.cross2_pins", 1e-15, _pinned(_cross2_pins), max_trials=1, doc="i × j = k, x × x = 0"),
    Check("algebra.cross2_mul", 1e-12, _cross2_mul, 10, doc="x × y = xy for orthogonal imaginary x, y"),
    Check("algebra.cross3_pins", 1e-15, _pinned(_cross3_pins), max_trials=1,
          doc="i × j × k = 1, 1 × i × j = -k"),
    Check("algebra.cross3_orthogonal", 1e-10, _cross3_orthogonal, 10,
          doc="x × y × z is a unit vector orthogonal to orthonormal x, y, z"),
    Check("geometry.example_plane_closure", 1e-10, _pinned(_example_closure), max_trials=1,
          doc="span{1-h, i+g, j-f, k+e} is Cayley"),
    Check("geometry.example_tricomplex_span", 1e-8, _pinned(_example_tricomplex_span), max_trials=1,
          doc="its tricomplex triple spans span{i, j, e}"),
    Check("geometry.example_from_tricomplex", 1e-8, _pinned(_example_from_tricomplex), max_trials=1,
          doc="(i, j, e) gives back the same plane"),
    Check("geometry.generator_validity", 1e-8, _generator_validity, doc="random Cayley planes are Cayley"),
    Check("geometry.prop33_canonical", 1e-8, _prop33_canonical,
          doc="canonical frames satisfy conj(f2) f1 = conj(f3) f4"),
    Check("geometry.prop33_equivalence", 1e-8, _prop33_equivalence,
          doc="frame and plane predicates agree on Cayley and generic frames (statistic: disagreements)"),
    Check("geometry.cor32_roundtrip", 1e-7, _roundtrip, doc="plane -> tricomplex -> plane is the identity"),
    Check("geometry.kernel_dimension", 0.5, _kernel_dimension, doc="|dim kernel - 4|"),
    Check("geometry.hypercomplex", 1e-9, _hypercomplex, doc="quaternion relations of (J_u, J_v, J_w) on the plane"),
    Check("geometry.hypercomplex_offplane", 0.01, _hypercomplex_offplane, reduce="fraction", inclusive=True,
          doc="fraction of off-plane vectors where the relations do not fail by more than 0.1"),
    Check("geometry.imag_intersection_dim", 0.5, _imag_dim, doc="dim(plane ∩ Im O) is 3 or 4"),
    Check("geometry.tricomplex_span_independence", 1e-7, _span_independence,
          doc="tricomplex span does not depend on the imaginary triple chosen"),
    Check("reduction.moment_pins", 1e-12, _pinned(_moment_pins), max_trials=1,
          doc="mu = nu = 0 at (1,i,j,k); nu = i/2 at (1,i,j,e)"),
    Check("reduction.mu_equivariance", 1e-12, _mu_equivariance, doc="mu(hq) = conj(q) mu(h) q"),
    Check("reduction.nu_equivariance", 1e-12, _nu_equivariance, doc="nu(hq) = conj(q) nu(h) q"),
    Check("reduction.nu_u1_invariance", 1e-12, _nu_u1_invariance, doc="nu is constant on circle orbits"),
    Check("reduction.mu_orthonormality", 0.5, _mu_orthonormality,
          doc="mu = 0 exactly for orthonormal frames (statistic: disagreements)"),
    Check("reduction.prop41_forward", 1e-9, _prop41_forward, 10, doc="circle and Sp(1) images of Cayley frames lie in N"),
    Check("reduction.prop41_reverse", 1e-8, _prop41_reverse, aliases=("angle_search",),
          doc="angle_search finds a Cayley frame on the orbit of every constructed point of N"),
    Check("reduction.angle_structure", 1e-6, _angle_structure,
          doc="1 to 8 solutions, closed under +pi/2"),
    Check("reduction.prop41_pinned", 1e-8, _pinned(_prop41_pinned), max_trials=1,
          doc="pi/6 + k pi/2 solve the pi/3-rotated (1,i,j,k) orbit; solution set closed under +pi/2"),
    Check("reduction.sp1_preserves_v", 1e-10, _sp1_preserves_v, doc="Sp(1) maps Cayley frames to Cayley frames"),
    Check("reduction.tau_square", 1e-12, _tau_square, doc="tau^2 = -1 and keeps the orientation"),
    Check("reduction.tau_pins", 1e-10, _pinned(_tau_pins), max_trials=1,
          doc="tau fixes span{1,i,j,k} and the example plane"),
    Check("reduction.tau_stratum_fraction", 0.01, _tau_fraction, reduce="fraction",
          doc="fraction of random Cayley planes that are J_STD-invariant"),
    Check("reduction.tau_criterion", 0.5, _tau_criterion,
          doc="tau fixes a Cayley plane exactly when it is J_STD-invariant"),
    Check("reduction.rank_cayley_chart", 0.5, _rank_check(red.rank_cayley_chart, 4, random_cayley_plane),
          0.02, 20, doc="chart rank of the closure residual is 4 (CAYLEY has dimension 12)"),
    Check("reduction.rank_cayley_frames", 0.5, _rank_check(red.rank_cayley_frames, 13, _cayley_frame_point),
          0.02, 20, doc="rank of d(mu, frame residual) is 13 (V has dimension 18)"),
    Check("reduction.rank_zero_set", 0.5, _rank_check(red.rank_zero_set, 12, _zero_set_point),
          0.02, 20, doc="rank of d(mu, nu) is 12 (N has dimension 19)"),
)


# -- running ------------------------------------------------------------------

@dataclass
class SuiteConfig:
    suite: str = "all"
    trials: int = 1000
    seed: int = 42
    tol: dict[str, float] = field(default_factory=dict)
    output: str | None = None
    workers: int = 1

    def __post_init__(self):
        if self.suite not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for name, value in self.tol.items():
            resolve_check(name)
            if not value > 0:
                raise ValueError(f"tolerance for {name!r} must be positive")


@dataclass
class CheckRecord:
    name: str
    trials: int
    max_residual: float
    threshold: float
    passed: bool
    statistic: str = "max"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        if not math.isfinite(d["max_residual"]):
            d["max_residual"] = str(d["max_residual"])
        return d


@dataclass
class Report:
    suite: str
    seed: int
    trials: int
    checks: list[CheckRecord]
    wall_time: float
    version: str = __version__
    schema_version: int = REPORT_SCHEMA

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "version": self.version,
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "pass": self.passed,
            "wall_time": self.wall_time,
            "checks": [c.to_dict() for c in self.checks],
        }

    def text(self) -> str:
        lines = []
        for c in self.checks:
            flag = "PASS" if c.passed else "FAIL"
            lines.append(f"{flag}  {c.name:<40} trials={c.trials:<6d} {c.statistic}={c.max_residual:.3e}  threshold={c.threshold:.1e}")
        total = sum(c.passed for c in self.checks)
        lines.append(f"{total}/{len(self.checks)} checks passed (seed {self.seed}, {self.wall_time:.1f}s)")
        return "\n".join(lines)


def resolve_check(name: str) -> Check:
    if name in CHECKS:
        return CHECKS[name]
    for check in CHECKS.values():
        if name in check.aliases or name == check.name.split(".", 1)[1]:
            return check
    raise KeyError(f"no check named {name!r}")


def _evaluate(name: str, seed: int, start: int, stop: int, threshold: float) -> np.ndarray:
    check = CHECKS[name]
    rngs = [trial_rng(seed, name, k) for k in range(start, stop)]
    return np.asarray(check.run(rngs, threshold), dtype=float)


def run_check(check: Check, trials: int, seed: int, threshold: float | None = None,
              pool: ProcessPoolExecutor | None = None) -> CheckRecord:
    threshold = check.threshold if threshold is None else threshold
    bounds = [(s, min(s + CHUNK, trials)) for s in range(0, trials, CHUNK)]
    if pool is None:
        parts = [_evaluate(check.name, seed, a, b, threshold) for a, b in bounds]
    else:
        futures = [pool.submit(_evaluate, check.name, seed, a, b, threshold) for a, b in bounds]
        parts = [f.result() for f in futures]
    values = np.concatenate(parts)
    if check.reduce == "fraction":
        stat, label = float(values.mean()), "fraction"
    else:
        stat, label = float(values.max()), "max"
    return CheckRecord(check.name, trials, stat, threshold, check.passes(stat, threshold), label)


def run_suite(cfg: SuiteConfig) -> Report:
    start = time.perf_counter()
    overrides = {resolve_check(k).name: v for k, v in cfg.tol.items()}
    selected = [c for c in CHECKS.values() if cfg.suite == "all" or c.suite == cfg.suite]
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        records = [
            run_check(c, c.trials_for(cfg.trials), cfg.seed, overrides.get(c.name), pool)
            for c in selected
        ]
    finally:
        if pool is not None:
            pool.shutdown()
    return Report(cfg.suite, cfg.seed, cfg.trials, records, round(time.perf_counter() - start, 3))
