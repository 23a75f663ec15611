"""Exception types shared across the library.

Errors that carry a counterexample expose it as ``.witness`` so callers and
the CLI can report something checkable instead of a bare message.
"""


class NglError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class GroundMismatch(NglError):
    """Operands live on different ground sets."""


class SizeMismatch(NglError):
    """Two graphs with different vertex counts were combined."""


class RelationNotTransitive(NglError):
    """A relation claimed transitive has a violating triple (witness)."""


class NotSynchronous(NglError):
    """Operation requires a synchronous game."""


class NotEquivalence(NglError):
    """Game relation fails one of the conditions needed for a labeled digraph."""


class PreconditionFailed(NglError):
    """Stated precondition of an operation does not hold."""


class EmptyInput(NglError):
    """A nonempty collection was required."""


class TooLarge(NglError):
    """Instance exceeds the enforced size cap."""


class NotCoherent(NglError):
    """Partition is not a coherent configuration (or relation not an equivalence)."""


class NotLocal(NglError):
    """Correlation required to be local is not."""


class OrbitalMismatch(NglError):
    """Recovered group's orbitals disagree with the induced partition."""


class NumericalInconclusive(NglError):
    """No exact certificate could be recovered from numerical data."""


class InvalidStrategy(NglError):
    """Supplied operator family is not a valid magic unitary at tolerance."""


class DimensionMismatch(NglError):
    """Operator blocks have inconsistent matrix dimensions."""


class InvalidFormat(NglError):
    """JSON document does not match its schema."""
