"""Exception hierarchy shared by all wamkit modules."""


class WamkitError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(WamkitError):
    """Bad field construction or mixing elements of different fields."""


class AlgebraError(WamkitError):
    """Invalid polynomial/matrix operation (unmapped variable, bad shape,
    non-exact division, residual root-of-unity components)."""


class BudgetError(WamkitError):
    """An enumeration would exceed the configured budget."""


class ShapeError(WamkitError):
    """A matrix could not be brought to a required block shape."""


class FormatError(WamkitError):
    """Malformed input file; carries a line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line
