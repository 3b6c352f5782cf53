"""
Dimension counts from numerical ranks
=====================================

Central-difference Jacobians at sample points: the Cayley closure
conditions cut the 16-dimensional Grassmannian down by 4, the Cayley
frames have codimension 13 in S^31, and the zero set has codimension 12.
"""

import numpy as np

from cayleyframes import reduction as red
from cayleyframes.cayley import random_cayley_plane

rng = np.random.default_rng(5)
chart = red.rank_cayley_chart(random_cayley_plane(rng))
frames = red.rank_cayley_frames(red.frame_to_sphere(red.random_cayley_frame(rng)))
zero = red.rank_zero_set(red.random_zero_set_point(rng)[0])

for label, res, ambient in [("Cayley planes", chart, 16), ("Cayley frames", frames, 31), ("zero set", zero, 31)]:
    print(f"{label:14s} rank {res.rank:2d}  gap {res.gap:.2e}  dimension {ambient - res.rank}")
