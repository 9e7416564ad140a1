"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 for syntax, 3 for precondition failures, 4 for exhausted searches or
depth limits, 5 for violated internal invariants.
"""


class LocboundError(Exception):
    exit_code = 3


class ParseError(LocboundError):
    exit_code = 2

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at offset {position}"
        super().__init__(message)


class DivisionByZero(LocboundError, ZeroDivisionError):
    pass


class ZeroDenominator(DivisionByZero):
    pass


class OutsideDomain(LocboundError):
    """The denominator vanishes at the requested point."""


class UnsupportedDimension(LocboundError):
    pass


class IdenticallyZeroDenominator(LocboundError):
    pass


class IncompatibleTowers(LocboundError):
    """Two algebraic numbers live in unrelated extension towers."""


class ConstantArc(LocboundError):
    pass


class UnboundedArc(LocboundError):
    pass


class ArcInsideIndeterminacy(LocboundError):
    """The arc lies entirely inside the zero set of the denominator."""


class NotLocallyBounded(LocboundError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DepthExceeded(LocboundError):
    exit_code = 4

    def __init__(self, limit):
        super().__init__(f"resolution did not terminate within depth {limit}")
        self.limit = limit


class Exhausted(LocboundError):
    exit_code = 4


class InvariantViolation(LocboundError):
    exit_code = 5
