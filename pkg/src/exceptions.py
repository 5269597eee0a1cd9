"""Exception hierarchy shared by every package under ``src``."""


class PhinError(Exception):
    """Base class for domain failures (CLI exit code 1)."""


class AmbientMismatch(PhinError, ValueError):
    """Two subspaces or vectors live in spaces of different dimension."""


class InvalidModule(PhinError):
    """A filtered (phi, N)-module violates one of its invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__('; '.join(self.violations) or 'invalid module')


class PrimeMismatch(PhinError):
    pass


class IrrationalEigenvalues(PhinError):
    """The characteristic polynomial of phi does not split over Q."""


class RepeatedEigenvalues(PhinError):
    pass


class NotSemisimple(PhinError):
    pass


class NotStable(PhinError):
    """A subspace (or flag step ``index``) is not stable by phi and N."""

    def __init__(self, index=None, message=None):
        self.index = index
        if message is None:
            message = 'flag step %s is not stable by phi and N' % index
        super().__init__(message)


class NotCritical(PhinError):
    def __init__(self, s):
        self.s = s
        super().__init__('index %d is not critical' % s)


class NotStronglyCritical(PhinError):
    def __init__(self, s, verdict=None):
        self.s = s
        self.verdict = verdict
        super().__init__('index %d is not strongly critical (%s)' % (s, verdict))


class InvalidDecomposition(PhinError):
    pass


class NoJumpLine(PhinError):
    pass


class NonIntegerWeight(PhinError):
    pass


class WrongMonodromyRank(PhinError):
    pass


class WeightsNotStrict(PhinError):
    pass


class NoRationalEigenvector(PhinError):
    pass


class NoCompatibleTransform(PhinError):
    pass


class DeformationError(PhinError):
    pass


class ConsistencyError(PhinError):
    """Two independent computations of the same quantity disagree."""


class WorkspaceError(PhinError):
    """A workspace file cannot be parsed (CLI exit code 2)."""

    def __init__(self, path, message):
        self.path = path
        super().__init__('%s: %s' % (path or '<root>', message))


class OracleMismatch(PhinError):
    """A primary computation disagrees with its brute-force oracle (exit 3)."""
