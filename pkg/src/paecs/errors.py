"""Exception types shared across the package."""


class PaecsError(Exception):
    """Base class for all package-specific errors."""


class DomainError(PaecsError):
    """Argument outside the supported domain (bad order, cap exceeded, NaN input)."""


class DegenerateStateError(PaecsError):
    """State family is identically zero for the requested parameters.

    The minus-sign families vanish at alpha = 0, so no normalized state
    exists there.
    """


class UnsupportedCombinationError(PaecsError):
    """Requested closed-form pairing has no implemented expression."""


class TruncationError(PaecsError):
    """Fock-space cutoff too small for the requested accuracy."""


class NumericalConsistencyError(PaecsError):
    """Internal cross-check failed (negative probability, non-Hermitian input,
    radicand or imaginary part outside its tolerance window)."""


class OverflowDomainError(PaecsError):
    """Intermediate value left the double-precision range."""
