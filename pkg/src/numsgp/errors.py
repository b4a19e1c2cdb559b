"""Exception hierarchy.

Every error that signals a violated precondition derives from
:class:`PrecondFailed`; the CLI maps those to exit status 2.
"""


class NumsgpError(Exception):
    """Base class for all errors raised by this package."""


class PrecondFailed(NumsgpError):
    """An operation was called on input outside its domain."""


class EmptyInput(PrecondFailed):
    pass


class GcdNotOne(PrecondFailed):
    def __init__(self, generators, gcd):
        self.generators = tuple(generators)
        self.gcd = gcd
        super().__init__(f"gcd{self.generators} = {gcd}, not 1")


class NotMember(PrecondFailed):
    def __init__(self, h, generators):
        self.h = h
        super().__init__(f"{h} is not an element of <{', '.join(map(str, generators))}>")


class EnumerationOverflow(NumsgpError):
    """An enumeration exceeded its configured cap.

    ``counts`` carries whatever partial sizes were known when the cap was hit
    (per-row factorization counts for RF-matrix products).
    """

    def __init__(self, message, cap, counts=None):
        self.cap = cap
        self.counts = counts
        super().__init__(message)


class NotInIdeal(PrecondFailed):
    pass


class NotPseudoSymmetric(PrecondFailed):
    pass


class NoCanonicalForm(NumsgpError):
    """No relabeling brings RF(F/2) into the canonical shape.

    This would be a counterexample to the structure theorem, so it is not a
    precondition failure.
    """


class PatternNotFound(PrecondFailed):
    pass


class InvalidParams(PrecondFailed):
    pass
