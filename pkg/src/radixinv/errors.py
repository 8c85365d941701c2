"""Exception types shared across the package."""


class NotInvertible(ArithmeticError):
    """The input shares a factor with the modulus."""

    def __init__(self, gcd: int, message: str | None = None):
        self.gcd = int(gcd)
        super().__init__(message or f"not invertible: gcd={self.gcd}")


class InvalidModulus(ValueError):
    """Radix below 2, radix above one limb, or digit count below 1."""


class DomainError(ValueError):
    """Argument outside the domain where the operation is defined."""


class OutOfRange(ValueError):
    """Value does not fit in the requested number of digits."""
