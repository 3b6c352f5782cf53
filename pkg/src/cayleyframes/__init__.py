"""Octonions, Cayley 4-planes and the quaternion Kahler reduction picture of Cayley frames.

Submodules:

- ``algebra``: octonion arithmetic, cross products, identities
- ``euclid8``: frames, projectors, kernels and numerical rank in R^8
- ``cayley``: Cayley planes, tricomplex triples, hypercomplex structures
- ``reduction``: the sphere in H^8, moment maps, the circle action and tau
- ``verify``: seeded property suites; ``cli`` wraps them on the command line
"""

__version__ = "0.1.0"

from .algebra import (
    associator,
    basis,
    cross2,
    cross3,
    octonion,
    oct_conj,
    oct_mul,
)
from .cayley import (
    CayleyPlane,
    canonical_cayley_frame,
    hypercomplex_check,
    is_cayley_frame,
    is_cayley_plane,
    plane_from_tricomplex,
    random_cayley_plane,
    tricomplex_of_plane,
)
from .errors import (
    BadKernelDimension,
    CayleyFramesError,
    DegenerateInput,
    NoSolution,
    NotCayley,
    NotSamePlane,
    RankAmbiguous,
    UnknownFixture,
)
from .euclid8 import Plane4, gram_schmidt, projector, projector_distance, same_plane
from .reduction import (
    angle_search,
    frame_to_sphere,
    in_zero_set,
    is_jstd_invariant,
    moment_mu,
    moment_nu,
    sp1_act,
    sphere_to_frame,
    tau_act,
    tau_plane,
    u1_act,
)
