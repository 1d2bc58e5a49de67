"""Exception types shared across the package."""


class EqcohomError(Exception):
    """Base class for all domain errors raised by this package."""


class UnsupportedType(EqcohomError):
    """Root-system family/rank outside the supported desk-scale set."""


class RankMismatch(EqcohomError):
    """Vectors or ring elements of incompatible rank were combined."""


class IncompleteGroup(EqcohomError):
    """A Weyl-group operation received data that is not a complete group."""


class ZeroWeight(EqcohomError):
    """An Euler class was requested for a multiset containing the zero weight.

    The resulting class would be zero, hence a zero divisor; callers must
    handle this case explicitly.
    """


class TruncationMismatch(EqcohomError):
    """Formal-group-law arithmetic mixed elements of different truncation degree."""


class UnknownLabel(EqcohomError):
    """A stratum label was used that is not declared in the poset."""


class MissingPayload(EqcohomError):
    """A stratum lacks the codimension/Euler-class payload needed for assembly."""

    def __init__(self, label):
        self.label = label
        super().__init__(f"stratum {label!r} has no payload")


class ZeroDivisorEulerClass(EqcohomError):
    """A stratum's Euler class failed the non-zero-divisor hypothesis."""

    def __init__(self, label, detail=""):
        self.label = label
        msg = f"Euler class at stratum {label!r} is a zero divisor"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ZeroTangentWeight(EqcohomError):
    """A fixed point carries the zero weight, so no coweight can be generic."""

    def __init__(self, label):
        self.label = label
        super().__init__(f"fixed point {label!r} has a zero tangent weight")


class NonGenericCoweight(EqcohomError):
    """The chosen one-parameter subgroup pairs to zero with a tangent weight."""

    def __init__(self, label, weight):
        self.label = label
        self.weight = weight
        super().__init__(
            f"coweight pairs to zero with weight {weight} at fixed point {label!r}"
        )


class SearchExhausted(EqcohomError):
    """A bounded deterministic search ran out of candidates."""


class NotDominant(EqcohomError):
    """A dominant coweight was required."""


class NotClosed(EqcohomError):
    """A label subset is not downward closed in the closure order."""


class UsageError(EqcohomError):
    """Invalid command line arguments (exit code 2)."""


class ComputationError(EqcohomError):
    """A command failed while computing (exit code 1); wraps a domain error."""
