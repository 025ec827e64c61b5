"""Exception types shared across the package."""


class InterfereError(Exception):
    """Base class for domain errors raised by this package."""


class ValidationError(InterfereError):
    """An input violates a documented precondition."""


class DegenerateContextError(InterfereError):
    """One alternative has probability (or amplitude) zero, so the
    normalized deviation, which divides by 2*sqrt(p1*p2), is undefined."""


class NotAProbabilityError(InterfereError):
    """A computed value escaped [0, 1]; the raw value is attached."""

    def __init__(self, value, what="result", component=None):
        self.value = value
        self.what = what
        self.component = component
        where = what if component is None else f"{what} (component {component})"
        super().__init__(f"{where} = {value!r} is not a probability")


class PrimeMismatchError(InterfereError):
    """Arithmetic attempted between values tagged with different primes."""


class NonPositiveNormError(InterfereError):
    """A split-complex operation needed norm_sq > 0 (polar form, inverse)."""


class ProfileError(InterfereError):
    """A brightness-profile request is invalid or has no valid window."""
