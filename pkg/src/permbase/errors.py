"""Exception types shared across the library.

Names mirror the conditions they report; all derive from PermbaseError so
callers can catch the whole family at once.
"""


class PermbaseError(Exception):
    """Base class for every error raised by this library."""


class CycleSyntaxError(PermbaseError):
    """Malformed cycle-notation string."""


class RepeatedPoint(PermbaseError):
    """A point occurs in more than one cycle of a cycle string."""


class PointOutOfRange(PermbaseError):
    """A cycle mentions a point larger than the declared degree."""


class DegreeMismatch(PermbaseError):
    """Two permutations (or a permutation and a group) of unequal degree
    were combined; degrees are never silently padded."""


class CapExceeded(PermbaseError):
    """A computation would exceed a configured size cap.

    Carries ``cap_name`` so reports can say which limit was hit.
    """

    def __init__(self, cap_name: str, message: str = ""):
        self.cap_name = cap_name
        super().__init__(message or f"cap exceeded: {cap_name}")


class NotTransitive(PermbaseError):
    pass


class NotIntransitive(PermbaseError):
    pass


class NotPrimitive(PermbaseError):
    pass


class NotSemiregular(PermbaseError):
    pass


class NotSolvable(PermbaseError):
    pass


class NotRegular(PermbaseError):
    """A coset tuple expected to have trivial stabilizer does not."""


class RepeatedEntry(PermbaseError):
    """A coset tuple expected to have pairwise distinct entries repeats one."""


class DegreeTooSmall(PermbaseError):
    pass


class DegreeCapExceeded(PermbaseError):
    pass


class SearchExhausted(PermbaseError):
    """A bounded witness search ran out of budget; carries diagnostics."""

    def __init__(self, message: str, tried: int = 0):
        self.tried = tried
        super().__init__(message)


class SigmaNotOdd(PermbaseError):
    pass


class SigmaDoesNotNormalize(PermbaseError):
    pass


class BadParams(PermbaseError):
    pass
