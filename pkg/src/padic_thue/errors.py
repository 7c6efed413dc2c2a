"""Exception hierarchy shared by the pipeline."""


class PadicThueError(Exception):
    """Base class for all errors raised by this package."""


class PrimeMismatch(PadicThueError, ValueError):
    pass


class NonUnitError(PadicThueError, ZeroDivisionError):
    """Inverse requested for an element of positive valuation."""


class DomainError(PadicThueError, ValueError):
    """Argument outside the domain where a series converges."""


class HenselError(PadicThueError, ValueError):
    """Simple-root precondition of Hensel lifting violated."""


class InconclusiveError(PadicThueError):
    """Working precision is too low to decide a proof step.

    ``check`` names the step that could not be decided.
    """

    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check


class InconsistentCertificate(PadicThueError):
    """Two parts of a certificate contradict each other."""
