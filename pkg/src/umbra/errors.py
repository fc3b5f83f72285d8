"""Exception types shared across the package."""


class UmbraError(Exception):
    """Base class for all package errors."""


class DimensionError(UmbraError, ValueError):
    """Operands disagree on degree, order or site count."""


class PreconditionError(UmbraError, ValueError):
    """A mathematical precondition does not hold (e.g. a series is not invertible).

    ``precondition`` names the violated condition so that the CLI can report it.
    """

    def __init__(self, precondition, detail=""):
        self.precondition = precondition
        self.detail = detail
        msg = precondition if not detail else f"{precondition}: {detail}"
        super().__init__(msg)
