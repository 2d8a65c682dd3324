"""Exception hierarchy for sqrtpoly.

Every error raised by the library derives from SqrtPolyError so callers
(and the CLI) can map failures to exit codes uniformly.
"""


class SqrtPolyError(Exception):
    """Base class for all sqrtpoly errors."""


class ValidationError(SqrtPolyError):
    """Bad input: wrong domain, wrong shape, wrong residue class."""


class ResourceCapError(SqrtPolyError):
    """The request exceeds a configured enumeration/memory cap."""


# field
class NotPrime(ValidationError):
    pass


class EvenInput(ValidationError):
    pass


class OrderDoesNotDivide(ValidationError):
    pass


class NotAResidue(ValidationError):
    pass


# poly
class ContextMismatch(ValidationError):
    pass


class WrongPartCount(ValidationError):
    pass


class DegreeTooLarge(ValidationError):
    pass


class EqualInputsCancellation(SqrtPolyError):
    """glue_pair received identical inputs; ruled out by the degree lower bound."""


class LevelOutOfRange(ValidationError):
    pass


# signs
class RangeOutOfBounds(ValidationError):
    pass


# fourier
class LengthMismatch(ValidationError):
    pass


class NotASqrtPoly(ValidationError):
    pass


class UnresolvedHalfRoot(ValidationError):
    """Even-order subgroup inversion needs a half-root branch we do not fix."""


class PeriodDoesNotDivide(ValidationError):
    pass


class NotCoprime(ValidationError):
    """The closed-form vanishing count needs gcd(ell, p-1) = 1."""


# ts / census / search
class BlockOutOfRange(ValidationError):
    pass


class TooLarge(ResourceCapError):
    pass


class InvalidDivisor(ValidationError):
    pass


class WrongResidue(ValidationError):
    pass


class CancellationImpossible(SqrtPolyError):
    """A cross-family pair with identical coefficients; contradicts the lower bound."""
