"""Exception hierarchy shared by every otoric module."""


class OtoricError(Exception):
    """Base class for all library errors."""


class DimensionError(OtoricError, ValueError):
    pass


class ArgumentError(OtoricError, ValueError):
    pass


class ParseError(OtoricError):
    """Malformed graph document; the message carries line or field context."""


class ValidationError(OtoricError):
    """Well-formed document describing an invalid weighted oriented graph."""


class SupportShapeError(OtoricError):
    """Subgraphs handed to a generator do not have the shape it requires."""


class UnbalancedCycleError(OtoricError):
    """A balanced cycle was required but the cycle is unbalanced."""


class UnbalancedCycleRequiredError(OtoricError):
    """An unbalanced cycle was required but a balanced one was supplied."""


class BalancedOuterCycleError(SupportShapeError):
    """The outer cycle of a theta graph is balanced, so it carries the circuit."""


class BudgetExceeded(OtoricError):
    pass


class OutOfClassError(OtoricError):
    pass
