"""Exception types shared across the package."""


class OrderMismatch(ValueError):
    """Two cyclotomic values (or polynomials) live in fields of different order."""


class NotDivisible(ArithmeticError):
    """An exact division left a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed the configured term budget."""

    def __init__(self, needed, budget):
        super().__init__(f"brute force needs {needed} terms, budget is {budget}")
        self.needed = needed
        self.budget = budget


class InvalidDigitTuple(ValueError):
    """A digit tuple is not an element of the admissible set for its base."""
