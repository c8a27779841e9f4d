"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed user input: bad weights, group orders, JSON payloads."""


class VerificationError(RuntimeError):
    """A required verification (Jacobi, grading closure, epsilon system...) failed."""


class IncompatibleError(VerificationError):
    """A representation is not compatible with the requested grading."""
