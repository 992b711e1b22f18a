"""Exception hierarchy shared by all modules of the package."""


class PoincareError(Exception):
    """Base class for every mathematical or usage error raised here."""


class FieldMismatch(PoincareError):
    """Operands belong to different coefficient fields."""


class DivisionByZero(PoincareError, ZeroDivisionError):
    pass


class ZeroBase(PoincareError):
    """Root-of-unity test requested for a zero base."""


class PoleAtEvaluationPoint(PoincareError):
    """The denominator of a rational function vanishes at the point."""


class ParseError(PoincareError, ValueError):
    """Malformed textual encoding of a field element or coefficient list."""


class NonzeroInnerConstantTerm(PoincareError):
    """Series composition f o g needs g(0) = 0 unless f is a polynomial."""


class NotInvertible(PoincareError):
    """Compositional inverse needs f(0) = 0 and a nonzero linear term."""


class NotDivisibleByXn(PoincareError):
    """A coefficient below the requested shift is nonzero."""


class PrecisionTooLow(PoincareError):
    pass


class ZeroPolynomial(PoincareError):
    pass


class RootOfUnityBase(PoincareError):
    """q is a root of unity within the working bound."""


class OrderMismatch(PoincareError):
    """Supplied polynomial does not have the required q-difference order."""


class InvalidInstance(PoincareError):
    """Problem instance violates an existence or normalization condition."""


class RootOfUnityDivisor(PoincareError):
    """Internal: a denominator q^j - q vanished despite the instance checks."""


class NotTangentToIdentity(PoincareError):
    """Continuous iteration needs p(0) = 0 and linear coefficient 1."""


class ZeroAtNegativeExponent(PoincareError):
    """Laurent polynomial with negative exponents evaluated at zero."""


class UsageError(PoincareError):
    """Command line was syntactically valid but semantically unusable."""
