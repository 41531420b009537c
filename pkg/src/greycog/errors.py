"""Exception types shared across the package.

Every error raised by the library derives from GreycogError so callers can
catch the whole family. The CLI maps subclasses onto distinct exit codes.
"""


class GreycogError(Exception):
    """Base class for all library errors."""


class MalformedInputError(GreycogError, ValueError):
    """Raw input data violates its structural contract (bad union, bad file)."""


class InvalidParameterError(GreycogError, ValueError):
    """A scalar parameter is out of range (lambda <= 0, steps < 1, ...)."""


class DimensionError(GreycogError, ValueError):
    """Vector or matrix dimensions do not agree."""


class ValidationError(GreycogError, ValueError):
    """A model or trajectory violates its invariants."""


class InsufficientDataError(GreycogError, ValueError):
    """A trajectory is too short for the requested analysis."""


class MixedSignWeightError(GreycogError, ValueError):
    """An interval weight straddles zero, so the endpoint-magnitude matrix
    used by the interval fixed-point criterion is undefined.

    Indices are 1-based to match the usual C_i node naming in reports.
    """

    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__(
            f"weight ({i},{j}) has lo < 0 < hi; endpoint-magnitude criterion "
            f"is undefined, use the kernel/greyness form instead"
        )


class DegenerateRowError(GreycogError, ValueError):
    """A condition-matrix row has zero denominator sum(|w_ij * a_j|).

    Index is 1-based.
    """

    def __init__(self, i):
        self.i = i
        super().__init__(f"row {i} has zero kernel mass; condition matrix undefined")
