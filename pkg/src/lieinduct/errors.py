"""Exception hierarchy for the lie-induct engine.

Every domain error raised by the library derives from LieInductError so the
CLI can map them uniformly to exit code 1.
"""


class LieInductError(Exception):
    """Base class for all engine errors."""


class InvalidType(LieInductError):
    """Dynkin type outside the accepted family/rank ranges."""


class NotARoot(LieInductError):
    """A coordinate vector that is not a root of the given system."""


class NonIntegral(LieInductError):
    """Weight-to-root conversion produced non-integer coordinates."""


class NotDominant(LieInductError):
    """A dominant weight was required."""


class NotACharacter(LieInductError):
    """Peeling found the input is not a non-negative sum of irreducibles."""


class InternalParity(LieInductError):
    """Half-convolution produced a non-integral multiplicity (convention bug)."""


class IrreducibilityMismatch(LieInductError):
    """A graded level's root count differs from its module dimension."""


class EmptyLevel(LieInductError):
    """Requested graded level contains no roots."""


class NonUniquePrimitive(LieInductError):
    """More than one primitive vector found in a graded level (diagnostic)."""


class BijectionFailure(LieInductError):
    """Weight/root correspondence of a graded component is not a bijection."""


class BadEmbedding(LieInductError):
    """Supplied node map is not a diagram embedding."""


class TrivialFirstLevel(LieInductError):
    """Induction started from the trivial module."""


class Table2Mismatch(LieInductError):
    """A deletion summary row failed verification."""
