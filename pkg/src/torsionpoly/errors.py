"""Exception hierarchy.

Two families matter to callers: :class:`InvalidInput` covers bad user
parameters, :class:`InternalMathError` signals a broken mathematical
invariant (a bug, never a user mistake).
"""


class TorsionPolyError(Exception):
    pass


class InvalidInput(TorsionPolyError, ValueError):
    pass


class InternalMathError(TorsionPolyError, ArithmeticError):
    pass


# polyalg
class NonZeroRemainder(TorsionPolyError, ArithmeticError):
    pass


class NonIntegerQuotient(TorsionPolyError, ArithmeticError):
    pass


class OddCoefficientPresent(TorsionPolyError, ValueError):
    pass


# cyclofield
class InvalidOrder(InvalidInput):
    pass


class ContextMismatch(TorsionPolyError, TypeError):
    pass


class NotInvertible(TorsionPolyError, ZeroDivisionError):
    pass


class OutOfRange(InvalidInput):
    pass


class NotAConjugate(InvalidInput):
    pass


# torsion
class NotCoprime(InvalidInput):
    pass


class BadParameters(InvalidInput):
    pass


class ZeroSurgery(InvalidInput):
    pass


class NotAcyclic(InvalidInput):
    pass


class DegenerateDenominator(InternalMathError):
    pass


class NonRationalCoefficient(InternalMathError):
    pass


class NonIntegerCoefficient(InternalMathError):
    pass


# oracle
class LengthMismatch(TorsionPolyError, ValueError):
    pass
