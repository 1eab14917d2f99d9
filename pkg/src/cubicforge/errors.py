"""Exception types shared across the package."""


class ForgeError(Exception):
    """Base class for all errors raised by cubicforge."""


class InvalidInput(ForgeError):
    """An argument violates a documented precondition."""


class InvalidParameter(InvalidInput):
    """A construction parameter is outside the admissible set (e.g. x = 0)."""


class DegenerateParameter(ForgeError):
    """The parameter hits a root of the construction polynomial."""


class PrimeExcluded(ForgeError):
    """The prime is ramified, bad, or divides a denominator; reduction refused."""


class FieldMismatch(ForgeError):
    """Operands live in different fields."""


class DivisionByZero(ForgeError, ZeroDivisionError):
    """Inversion of the zero element."""


class SingularCurve(ForgeError):
    """4a^3 + 27b^2 = 0: not an elliptic curve."""


class WrongBranch(ForgeError):
    """Operation only defined on the other construction branch."""


class OracleExhausted(ForgeError):
    """Not enough admissible primes below the search bound."""


class InternalError(ForgeError):
    """An algebraically guaranteed invariant failed at runtime."""
