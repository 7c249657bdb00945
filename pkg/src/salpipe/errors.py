"""Exception hierarchy shared by all salpipe modules.

The CLI maps these onto exit codes: usage problems exit 1, data problems
(anything under :class:`DataError` plus :class:`InvalidInputError`) exit 2,
and numeric non-convergence exits 3.
"""


class SalpipeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SalpipeError, ValueError):
    """An argument violates a documented precondition."""


class DegenerateGraphError(SalpipeError):
    """The pixel graph has a zero-weight row and no smoothing to fix it."""


class ConvergenceError(SalpipeError):
    """An iterative solver ran out of iterations.

    Carries the final residual so callers can report how close it got.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DataError(SalpipeError):
    """A file or dataset is malformed or inconsistent."""


class ParseError(DataError):
    """A text input could not be parsed; message names the line."""


class AlignmentError(DataError):
    """Score matrices or label vectors do not cover the same samples/classes."""


class ConfigError(DataError):
    """A configuration key or value is not acceptable."""
