"""
Cayley planes and their tricomplex triples
==========================================

A 4-plane closed under the three-fold cross product, the triple
(y x z, z x x, x x y) read off its imaginary part, and the plane recovered
from the triple alone.
"""

import numpy as np

from cayleyframes import algebra as alg
from cayleyframes.cayley import (
    cayley_plane_residual,
    plane_from_tricomplex,
    random_cayley_plane,
    tricomplex_of_plane,
)
from cayleyframes.euclid8 import projector_distance, random_frame

B = alg.basis
example = np.array([B("1") - B("h"), B("i") + B("g"), B("j") - B("f"), B("k") + B("e")]) / np.sqrt(2)
print("closure residual of span{1-h, i+g, j-f, k+e}:", cayley_plane_residual(example))
print("its tricomplex triple:\n", np.round(tricomplex_of_plane(example), 12))

back = plane_from_tricomplex([B("i"), B("j"), B("e")])
print("plane from (i, j, e) vs example:", projector_distance(back.plane, example))

rng = np.random.default_rng(2)
print("random 4-plane closure residual:", cayley_plane_residual(random_frame(rng)))
p = random_cayley_plane(rng)
q = plane_from_tricomplex(p.tricomplex)
print("random Cayley plane round trip:", projector_distance(p.plane, q.plane))
