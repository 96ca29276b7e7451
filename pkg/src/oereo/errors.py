"""Exception types shared by the library and the CLI."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class SizeLimitError(DomainError):
    """An enumeration would exceed the configured size guard."""


class NotCoprimeError(DomainError):
    """No modular inverse exists because the inputs share a factor."""
