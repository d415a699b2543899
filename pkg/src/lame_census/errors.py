"""Exception types shared across the package."""


class ArithmeticOverflowError(OverflowError):
    """An integer left the supported 64-bit range."""


class ContractViolation(ValueError):
    """A caller broke an operation's precondition."""


class InvariantError(RuntimeError):
    """An internal invariant failed. This always indicates a bug."""


class InvalidProfileError(ValueError):
    """A ramification table does not instantiate at the requested (n, N).

    ``entry`` names the offending table entry and ``value`` is what it
    evaluated to.
    """

    def __init__(self, case: str, n: int, N: int, entry: str, value):
        self.case = case
        self.n = n
        self.N = N
        self.entry = entry
        self.value = value
        super().__init__(
            f"case {case} is not valid at n={n}, N={N}: {entry} = {value} "
            "is not a nonnegative integer"
        )


class EnumerationBoundError(ValueError):
    """The requested enumeration exceeds the configured degree bound."""

    def __init__(self, degree: int, bound: int):
        self.degree = degree
        self.bound = bound
        super().__init__(
            f"degree {degree} exceeds the enumeration bound max_degree={bound}"
        )
