"""Exception types shared across the package."""


class StardecError(Exception):
    """Base class for all stardec errors."""


class RingMismatch(StardecError):
    """Operands live in different rings."""


class ShapeMismatch(StardecError):
    """Matrix shapes are incompatible for the requested operation."""


class NotInvertible(StardecError):
    """Scalar (or matrix) has no inverse in its ring."""


class NotHermitian(StardecError):
    """Input is not self-adjoint within tolerance."""


class NotSymmetric(StardecError):
    """Input is not symmetric within tolerance."""


class NotAntisymmetric(StardecError):
    """Input is not antisymmetric within tolerance."""


class NotInteger(StardecError):
    """Input is not an integer matrix."""


class SizeCapExceeded(StardecError):
    """A connected component exceeds the exhaustive-search size cap."""


class ClusterAmbiguity(StardecError):
    """Eigenvalue clusters are too close to separate reliably.

    Raised instead of guessing; callers may resample or report a refusal.
    """


class UnsupportedRingKind(StardecError):
    """The (ring, decomposition kind) combination is out of scope."""


class NotEquivalentToGenerator(StardecError):
    """Block does not normalize to any canonical generator."""


class ParseError(StardecError):
    """Malformed JSON input (bad ring tag, shape, or scalar encoding)."""
