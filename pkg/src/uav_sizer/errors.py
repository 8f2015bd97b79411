"""Exception hierarchy.

``InputError`` and its subclasses mean the user handed us something unusable
(bad file, invariant violation). ``OutOfDomainError`` means a well-formed
query asked for something outside the measured data.
"""
from __future__ import annotations


class InputError(ValueError):
    pass


class ParseError(InputError):
    pass


class ValidationError(InputError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class CurveError(InputError):
    """Thrust-stand data that cannot form a valid motor curve."""

    def __init__(self, message, pwm=None):
        self.pwm = pwm
        super().__init__(message)


class OutOfDomainError(ValueError):
    pass


class InsufficientThrustError(OutOfDomainError):
    def __init__(self, requested, available):
        self.requested = float(requested)
        self.available = float(available)
        self.deficit = self.requested - self.available
        super().__init__(
            f"motor cannot produce requested thrust: {self.requested:.4f} kgf "
            f"requested, {self.available:.4f} kgf available "
            f"(deficit {self.deficit:.4f} kgf)")


class EnduranceUndefinedError(ValueError):
    pass
