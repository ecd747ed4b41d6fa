"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class DivergenceError(DomainError):
    """The defining integral of the requested quantity diverges."""


class DegenerateSampleError(DomainError):
    """The sample collapses an estimator (zero spread, tied percentiles)."""

    def __init__(self, message, values=()):
        super().__init__(message)
        self.values = tuple(values)
