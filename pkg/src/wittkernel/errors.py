"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ``DomainError`` -> 3,
``TheoremConsistencyError`` (and ``ImplementationBugError``) -> 4.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain (zero coefficient, bad class, ...)."""


class UnsupportedRankError(DomainError):
    """Operation only defined for a restricted range of ranks."""


class ImplementationBugError(AssertionError):
    """An identity that must always hold (e.g. reciprocity) was violated."""


class TheoremConsistencyError(ImplementationBugError):
    """Two independently computed verdicts disagree with a classification theorem."""
