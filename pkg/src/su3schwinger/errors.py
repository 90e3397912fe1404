"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the operation's domain (bad index, zero denominator, ...)."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured occupation/size bound."""
