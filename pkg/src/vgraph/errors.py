class DimensionError(ValueError):
    """Lattice point rank does not match the instance or coloring rank."""


class ValidationError(ValueError):
    pass


class GraphParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class UnsupportedVersionError(GraphParseError):
    pass


class SolverCapExceeded(RuntimeError):
    """Graph is larger than the solver's vertex cap.

    ``lower`` and ``upper`` carry the bounds established before giving up
    (clique size and DSATUR color count); either may be None.
    """

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
