"""Exception types shared across the package."""


class LegendreHGFError(Exception):
    """Base class for every domain error raised by this package."""


class NotPrime(LegendreHGFError):
    """Field order is not a prime in the supported range (odd primes >= 3)."""


class TooLarge(LegendreHGFError):
    """Field order exceeds the configured maximum (see LEGENDRE_HGF_MAX_P)."""


class DivisionByZero(LegendreHGFError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class MixedFields(LegendreHGFError):
    """Operands belong to different prime fields."""


class ZeroArgument(LegendreHGFError):
    """A transformation that needs a nonzero argument got zero."""


class DenominatorVanishes(LegendreHGFError):
    """A lower-parameter factor hit 0 mod p before the series terminated."""


class BadFieldResidue(LegendreHGFError):
    """The prime fails a residue condition (typically p = 1 mod 4)."""


class RoundingFailure(LegendreHGFError):
    """A value expected to be integral violated its rounding-residual bound."""


class PreconditionViolation(LegendreHGFError):
    """Arguments violate a documented precondition."""


class SingularCurve(LegendreHGFError):
    """lambda in {0, 1} makes x(x-1)(x-lambda) have a repeated root."""
