"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument is outside the domain of the operation."""


class PreconditionError(ValueError):
    """Parameters are well-formed but the requested statement does not apply to them."""


class ResourceLimitError(RuntimeError):
    """A brute-force enumeration would exceed the configured size bound."""


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division failed.

    ``remainder`` holds the remainder polynomial at the point division stopped.
    """

    def __init__(self, message, remainder):
        super().__init__(message)
        self.remainder = remainder
