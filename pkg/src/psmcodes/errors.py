"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end.
"""


class PsmcError(Exception):
    exit_code = 2


class FieldError(PsmcError, ValueError):
    pass


class DimensionError(PsmcError, ValueError):
    pass


class ValidationError(PsmcError, ValueError):
    """A construction precondition does not hold."""


class DecodeFailure(PsmcError):
    """No codeword lies within the decoding radius of the received word."""

    exit_code = 3


class FormatError(PsmcError, ValueError):
    exit_code = 4


class BudgetExceeded(PsmcError):
    """An exhaustive computation would exceed its configured budget."""

    exit_code = 5
