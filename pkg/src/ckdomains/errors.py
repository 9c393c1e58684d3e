"""Exception types shared across the package."""

__all__ = ["NoWitnessError", "SubringClosureError"]


class NoWitnessError(ValueError):
    """No known construction for the requested parameters.

    ``hypothesis`` names the hypothesis that failed, e.g. "m <= n/3".
    """

    def __init__(self, message: str, *, hypothesis: str):
        super().__init__(message)
        self.hypothesis = hypothesis


class SubringClosureError(ValueError):
    """A subring specification is not multiplicatively closed.

    ``factors`` is the offending pair of basis elements and ``product``
    their product, which falls outside the proposed span.
    """

    def __init__(self, message: str, *, factors, product):
        super().__init__(message)
        self.factors = factors
        self.product = product
