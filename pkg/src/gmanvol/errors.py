"""Exception types shared across the package.

Everything that can escape the public API derives from GmanvolError, so the
command line front end can map failures onto a small set of exit codes:
malformed input, invalid graph data, or an input outside the reach of the
implemented constructions.
"""


class GmanvolError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GmanvolError):
    """Input text is not a well-formed document."""


class ValidationError(GmanvolError):
    """A graph document violates a structural invariant."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid graph document")


class GenusZeroUnsupported(GmanvolError):
    """The operation is only defined over a base of positive genus."""


class EmptyInput(GmanvolError):
    """A nonempty collection was required."""


class FiberSlope(GmanvolError):
    """A filling slope equals the fiber and cannot be filled along."""


class NonIntegralGenus(GmanvolError):
    """The covering genus formula did not produce an integer."""


class BoundaryCountTooSmall(GmanvolError):
    """A piece has too few boundary tori for the requested covering."""


class NotPrime(GmanvolError):
    """The covering order must be a prime number."""


class PrimeTooSmall(GmanvolError):
    """The covering prime must exceed every boundary-torus count."""


class DisconnectedCover(GmanvolError):
    """Internal consistency failure: a constructed cover is disconnected."""


class NotPMJ(GmanvolError):
    """A gluing matrix is not of the plus/minus swap form."""


class NotAdjacent(GmanvolError):
    """The two pieces do not share a gluing torus."""


class EhnFails(GmanvolError):
    """No horizontal foliation exists for the filled piece."""


class WrongCase(GmanvolError):
    """The graph belongs to the other absolute-Euler-number case."""


class PMJFormRequired(GmanvolError):
    """Zero absolute Euler number, but the matrices are not all plus/minus swaps."""
