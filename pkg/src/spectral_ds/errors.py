"""Exception types shared across the package."""


class InvariantViolation(AssertionError):
    """An identity that must hold for every valid input failed.

    Raising this means the library itself is wrong (or was fed a
    polynomial that is not the characteristic polynomial it claims to
    be); the CLI maps it to exit code 2.
    """


class ScopeRefusal(RuntimeError):
    """A search was requested beyond the supported enumeration limits."""
