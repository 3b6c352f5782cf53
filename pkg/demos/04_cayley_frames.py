"""
Cayley frames
=============

On a Cayley plane the right multiplications by the tricomplex triple form a
hypercomplex structure, and frames (x, J_u x, J_v x, J_w x) satisfy
conj(f2) f1 = conj(f3) f4.
"""

import numpy as np

from cayleyframes.cayley import (
    canonical_cayley_frame,
    cayley_frame_residual,
    hypercomplex_check,
    hypercomplex_residuals,
    random_cayley_plane,
)
from cayleyframes.euclid8 import random_frame

rng = np.random.default_rng(3)
p = random_cayley_plane(rng)
print("hypercomplex relations on the plane:", hypercomplex_check(p))
print("... at a random vector:", hypercomplex_residuals(p.tricomplex, rng.standard_normal(8)).max())

f = canonical_cayley_frame(p)
print("frame residual, canonical frame:", cayley_frame_residual(f))
print("frame residual, generic frame:  ", cayley_frame_residual(random_frame(rng)))

# swapping two vectors reverses orientation: same plane, no longer a Cayley frame
g = f.copy()
g[[0, 1]] = g[[1, 0]]
print("frame residual, reversed frame: ", cayley_frame_residual(g))
