"""Exception types raised by the library.

Every rejection carries enough data to reconstruct why the input was
refused: the offending indices, the failing minor, the violated
precondition.  All types derive from :class:`SingresError` so callers can
catch the whole family at once; types that signal bad user input also
derive from :class:`ValueError`.
"""

from __future__ import annotations


class SingresError(Exception):
    """Base class for every error raised by this package."""


class InvalidMatrix(SingresError, ValueError):
    """A candidate intersection matrix failed validation."""


class NotSymmetric(InvalidMatrix):
    def __init__(self, i: int, j: int) -> None:
        self.i, self.j = i, j
        super().__init__(f"entry ({i},{j}) differs from entry ({j},{i})")


class BadSign(InvalidMatrix):
    """A diagonal entry is >= 0 or an off-diagonal entry is < 0."""

    def __init__(self, i: int, j: int, value: int) -> None:
        self.i, self.j, self.value = i, j, value
        kind = "diagonal" if i == j else "off-diagonal"
        super().__init__(f"{kind} entry ({i},{j}) = {value} has the wrong sign")


class NotNegativeDefinite(InvalidMatrix):
    """Definiteness failed; ``order`` is the leading principal minor that
    witnessed the failure (1-based), ``minor`` its determinant."""

    def __init__(self, order: int, minor: int) -> None:
        self.order = order
        self.minor = minor
        super().__init__(
            f"leading principal {order}x{order} minor is {minor}; "
            f"expected sign (-1)^{order}"
        )


class NotReduced(SingresError, ValueError):
    """A fraction expected in lowest terms with a > b >= 1 was not."""


class EntryTooSmall(SingresError, ValueError):
    """A continued-fraction expansion produced an entry below 2."""


class NotAChain(SingresError, ValueError):
    """The matrix is not the intersection matrix of a chain of curves."""


class GcdNotOne(SingresError, ValueError):
    """A triple (t, r, s) had gcd(t, r, s) != 1."""


class BadFraction(SingresError, ValueError):
    """A star specification contained a fraction outside 1 <= b <= a."""


class IndexOutOfRange(SingresError, IndexError):
    """A vertex index was outside 0..n-1."""


class Disconnected(SingresError, ValueError):
    """The dual graph is not connected."""


class NonIntegralGenus(SingresError, ArithmeticError):
    """The genus formula evaluated to a non-integer (should not happen
    for valid negative-definite inputs; kept as a hard failure rather
    than silent rounding)."""


class EmptyKeep(SingresError, ValueError):
    """No vertices were kept when contracting."""


class NotATree(SingresError, ValueError):
    """The dual graph contains a cycle or a multiple edge."""


class InternalDisagreement(SingresError, ArithmeticError):
    """Two independent computations of the same invariant disagreed.
    Indicates a bug, never bad input."""


class GcdViolation(SingresError, ValueError):
    """Catalog parameters violated a required coprimality condition."""


class NonIntegralS0(SingresError, ArithmeticError):
    """The central self-intersection formula did not produce an integer."""


class GcdConditionViolated(SingresError, ValueError):
    """Weighted-homogeneous parameters failed their admissibility test."""


class PreconditionFailed(SingresError, ValueError):
    """A construction's stated hypotheses do not hold for this input."""

    def __init__(self, clause: str) -> None:
        self.clause = clause
        super().__init__(clause)
