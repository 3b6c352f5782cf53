"""JSON and CSV serialization, plus the shipped fixtures.

Vectors of R^8 are arrays of 8 reals.  A plane document holds ``frame``
(4 vectors) and optionally ``projector`` (8x8) and ``tricomplex``
(3 vectors); a triple document holds only ``tricomplex``.  Sphere points
are ``sphere_point``: 8 quaternions of 4 reals each.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

import numpy as np

from . import algebra as alg
from .cayley import CayleyPlane, tricomplex_of_plane
from .errors import UnknownFixture
from .euclid8 import Plane4, projector
from .reduction import frame_to_sphere, u1_act

SCHEMA_VERSION = 1


def _rows(a) -> list:
    return np.asarray(a, dtype=float).tolist()


def plane_to_json(p, *, with_projector: bool = True, with_tricomplex: bool = True) -> dict:
    frame = p.frame if isinstance(p, (Plane4, CayleyPlane)) else np.asarray(p, dtype=float)
    doc = {"schema_version": SCHEMA_VERSION, "frame": _rows(frame)}
    if with_projector:
        doc["projector"] = _rows(projector(frame))
    if with_tricomplex:
        doc["tricomplex"] = _rows(tricomplex_of_plane(p))
    return doc


def triple_to_json(triple) -> dict:
    return {"schema_version": SCHEMA_VERSION, "tricomplex": _rows(triple)}


def sphere_to_json(h) -> dict:
    return {"schema_version": SCHEMA_VERSION, "sphere_point": _rows(h)}


def _array(doc: dict, key: str, shape: tuple) -> np.ndarray:
    a = np.asarray(doc[key], dtype=float)
    if a.shape != shape:
        raise ValueError(f"{key!r} has shape {a.shape}, expected {shape}")
    return a


def frame_from_json(doc: dict) -> np.ndarray:
    return _array(doc, "frame", (4, 8))


def triple_from_json(doc: dict) -> np.ndarray:
    return _array(doc, "tricomplex", (3, 8))


def sphere_from_json(doc: dict) -> np.ndarray:
    return _array(doc, "sphere_point", (8, 4))


# -- fixtures -----------------------------------------------------------------

def _example_plane() -> dict:
    b = alg.basis
    frame = np.array([b("1") - b("h"), b("i") + b("g"), b("j") - b("f"), b("k") + b("e")]) / np.sqrt(2)
    doc = plane_to_json(frame)
    doc["description"] = "span{1-h, i+g, j-f, k+e}/sqrt(2)"
    return doc


def _hframe() -> dict:
    frame = np.eye(8)[:4]
    doc = plane_to_json(frame)
    doc["sphere_point"] = _rows(frame_to_sphere(frame))
    doc["description"] = "frame (1, i, j, k)"
    return doc


def _tricomplex_ije() -> dict:
    doc = triple_to_json([alg.basis("i"), alg.basis("j"), alg.basis("e")])
    doc["description"] = "tricomplex triple (i, j, e)"
    return doc


def _hframe_pi3() -> dict:
    doc = sphere_to_json(u1_act(frame_to_sphere(np.eye(8)[:4]), np.pi / 3))
    doc["description"] = "circle action at pi/3 on the (1, i, j, k) frame point"
    return doc


FIXTURE_BUILDERS = {
    "paper-plane": _example_plane,
    "hframe": _hframe,
    "tricomplex-ije": _tricomplex_ije,
    "hframe-pi3": _hframe_pi3,
}


def build_fixture(name: str) -> dict:
    try:
        return FIXTURE_BUILDERS[name]()
    except KeyError:
        raise UnknownFixture(name) from None


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_fixture(name: str) -> dict:
    """Read a fixture shipped under ``cayleyframes/fixtures``."""
    if name not in FIXTURE_BUILDERS:
        raise UnknownFixture(name)
    text = resources.files("cayleyframes").joinpath("fixtures", f"{name}.json").read_text()
    return json.loads(text)


def table_csv() -> str:
    """The signed multiplication table as CSV text (header plus 64 rows)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["basis_left", "basis_right", "sign", "basis_result"])
    for left, right, sign, result in alg.multiplication_table():
        writer.writerow([left, right, f"{sign:+d}", result])
    return buf.getvalue()
