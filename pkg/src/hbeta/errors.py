class HBetaError(Exception):
    pass


class FieldMismatch(HBetaError, ValueError):
    """Two objects over different fields or groups were combined."""


class PreconditionError(HBetaError, ValueError):
    """A construction was asked to act on input that fails its hypotheses.

    ``report`` carries the failing :class:`~hbeta.report.VerificationReport`
    when one exists.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotClosed(HBetaError, ValueError):
    pass
