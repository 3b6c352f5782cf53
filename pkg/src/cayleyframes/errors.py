"""Exception types raised across the package."""


class CayleyFramesError(Exception):
    """Base class for all package errors."""


class DegenerateInput(CayleyFramesError, ValueError):
    """A vector family is numerically linearly dependent."""


class NotSamePlane(CayleyFramesError, ValueError):
    """Two frames were expected to span the same 4-plane but do not."""


class NotCayley(CayleyFramesError, ValueError):
    """A 4-plane fails the three-fold cross product closure test."""


class BadKernelDimension(CayleyFramesError, RuntimeError):
    """A kernel that must be 4-dimensional came out with another dimension."""


class NoSolution(CayleyFramesError, RuntimeError):
    """No angle on a U(1) orbit turns the frame into a Cayley frame."""


class RankAmbiguous(CayleyFramesError, RuntimeError):
    """The singular value gap at the rank cut is too small to trust."""


class UnknownFixture(CayleyFramesError, KeyError):
    """Requested fixture name is not shipped."""


class UsageError(CayleyFramesError, ValueError):
    """Bad command-line flags or configuration (exit code 2)."""


class CheckFailure(CayleyFramesError, RuntimeError):
    """At least one verification check failed (exit code 1)."""
