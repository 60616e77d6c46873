"""Exception types shared across the package."""


class HammingError(Exception):
    pass


class NotAPrimePower(HammingError, ValueError):
    def __init__(self, q):
        super().__init__(f"{q} is not a prime power")
        self.q = q


class InvalidM(HammingError, ValueError):
    def __init__(self, m):
        super().__init__(f"m must be an integer >= 2, got {m}")
        self.m = m


class DivisionByZero(HammingError, ZeroDivisionError):
    pass


class RankDeficient(HammingError, ArithmeticError):
    pass


class DivisibilityViolation(HammingError, ArithmeticError):
    """An exact division that must be exact left a remainder."""


class NegativeCount(HammingError, ArithmeticError):
    pass


class BudgetExceeded(HammingError):
    """A computation would exceed a configured resource bound."""

    def __init__(self, what, required, limit):
        super().__init__(f"{what}: requires {required}, limit is {limit}")
        self.what = what
        self.required = required
        self.limit = limit


class TooLarge(BudgetExceeded):
    pass
