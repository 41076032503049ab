"""Exception hierarchy.

Errors split into two families: ``UsageError`` for inputs outside an
operation's domain, and ``CompositionError`` for inputs that fail to be a
composition (or, when raised after construction, an internal bug).
"""


class GaussError(Exception):
    pass


class UsageError(GaussError, ValueError):
    pass


class ZeroForm(UsageError):
    def __init__(self, msg="zero form"):
        super().__init__(msg)


class RankError(GaussError):
    def __init__(self, rank):
        self.rank = rank
        super().__init__(f"generators span a group of rank {rank} < 2")


class NotPositiveDefinite(UsageError):
    pass


class AmbientMismatch(UsageError):
    pass


class NonzeroLeadRequired(UsageError):
    pass


class DegenerateForm(UsageError):
    pass


class RatioMismatch(UsageError):
    pass


class NotInLattice(GaussError):
    pass


class ZeroDiscriminant(UsageError):
    pass


class NonSquareRatio(GaussError):
    def __init__(self, ratio, msg=None):
        self.ratio = ratio
        super().__init__(msg or f"discriminant ratio {ratio} is not the square of a rational")


class CompositionError(GaussError):
    """The inputs do not form a composition."""


class Eq1Violation(CompositionError):
    pass


class SpanViolation(CompositionError):
    pass


class NotProportional(CompositionError):
    pass


class LemmaViolation(CompositionError):
    pass


class TheoremAViolation(CompositionError):
    def __init__(self, clause, detail=""):
        self.clause = clause
        msg = f"clause {clause!r} failed"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class InternalBug(GaussError, AssertionError):
    pass
