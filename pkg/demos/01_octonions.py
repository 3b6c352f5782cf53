"""
Octonion arithmetic
===================

Products of basis units, the failure of associativity and the identities
that survive it.
"""

import numpy as np

from cayleyframes import algebra as alg

B = alg.basis

# the second quaternion copy is generated by e: f = ie, g = je, h = ke
for left, right in [("i", "e"), ("j", "e"), ("k", "e"), ("f", "g")]:
    print(f"{left} * {right} =", alg.oct_mul(B(left), B(right)))

# (ij)e and i(je) differ by a sign
print("(ij)e     =", alg.oct_mul(alg.oct_mul(B("i"), B("j")), B("e")))
print("i(je)     =", alg.oct_mul(B("i"), alg.oct_mul(B("j"), B("e"))))
print("[i, j, e] =", alg.associator(B("i"), B("j"), B("e")))

rng = np.random.default_rng(0)
x, y, z = alg.random_octonion(rng, size=3, normalize=True)

# the norm is multiplicative, and the alternative and Moufang laws hold
print("|xy| - |x||y| =", alg.norm(alg.oct_mul(x, y)) - alg.norm(x) * alg.norm(y))
print("[x, x, y]     =", alg.norm(alg.associator(x, x, y)))
print("Moufang       =", alg.identity_eq2_residual(x, y, z))
print("[x, y, z]     =", alg.norm(alg.associator(x, y, z)), "(generic, nonzero)")
