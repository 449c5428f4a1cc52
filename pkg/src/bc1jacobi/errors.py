"""Exception types shared across the package."""


class BC1Error(Exception):
    """Base class for all errors raised by bc1jacobi."""


class NonDivisible(BC1Error, ArithmeticError):
    """An exact Laurent division left a nonzero remainder."""


class NotInvariant(BC1Error, ValueError):
    """A vector was required to satisfy comp2 == s . comp1 but does not."""


class ModeError(BC1Error, ValueError):
    """An exact-mode operation was requested with a float multiplicity (or vice versa)."""


class ParameterOutOfRange(BC1Error, ValueError):
    pass


class DegenerateGram(BC1Error, ArithmeticError):
    """A Gram-Schmidt self-pairing vanished."""


class DecompositionMismatch(BC1Error, ArithmeticError):
    pass


class DomainError(BC1Error, ValueError):
    """Parity or invariance precondition of a spherical operator failed."""
