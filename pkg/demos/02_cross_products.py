"""
Two- and three-fold cross products
==================================
"""

import numpy as np

from cayleyframes import algebra as alg
from cayleyframes.euclid8 import random_frame

B = alg.basis
print("i x j     =", alg.cross2(B("i"), B("j")))
print("i x j x k =", alg.cross3(B("i"), B("j"), B("k")))
print("1 x i x j =", alg.cross3(B("1"), B("i"), B("j")))

rng = np.random.default_rng(1)
x, y, z = random_frame(rng, 3)
c = alg.cross3(x, y, z)
# for an orthonormal triple the output is a unit vector orthogonal to all three
print("|x x y x z| =", alg.norm(c))
print("inner products with x, y, z:", [float(c @ v) for v in (x, y, z)])
