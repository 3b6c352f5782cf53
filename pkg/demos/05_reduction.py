"""
Cayley frames inside the sphere of H^8
======================================

Orthonormal frames are the zero set of the Sp(1) moment map; Cayley frames
additionally sit in the zero set of the circle moment map, and every point
of the common zero set lies on a circle orbit through a Cayley frame.
"""

import numpy as np

from cayleyframes import algebra as alg
from cayleyframes import reduction as red

h = red.frame_to_sphere(np.eye(8)[:4])
print("(1,i,j,k): mu =", np.abs(red.moment_mu(h)).max(), " nu =", red.moment_nu(h))
g = red.frame_to_sphere(np.eye(8)[[0, 1, 2, 4]])
print("(1,i,j,e): nu =", red.moment_nu(g))

rng = np.random.default_rng(4)
z, frame, theta, q = red.random_zero_set_point(rng)
print("hidden angle:", theta)
print("zero set membership:", red.in_zero_set(z))
angles = red.angle_search(z)
print("Cayley angles on the orbit:", np.round(angles, 10))
print("spacing:", np.round(np.diff(angles), 10), "(quarter turns)")

# the stabilizer of a Cayley frame in the circle is Z/4
print("angles through a Cayley frame:", np.round(red.angle_search(red.frame_to_sphere(frame)), 10))

# tau = e^{i pi/2} fixes exactly the complex Cayley planes
print("tau fixes span{1,i,j,k}:", red.is_jstd_invariant(np.eye(8)[:4]))
print("tau fixes a random Cayley plane:", red.is_jstd_invariant(red.random_cayley_frame(rng)))
