"""Exception types raised across the library."""


class VoidfinderError(Exception):
    """Base class for all library errors."""


class DegenerateInput(VoidfinderError):
    """Geometry cannot be built from the input (collinear, duplicated, ...)."""


class EmptyInterior(VoidfinderError):
    """Every cloud point is a hull vertex; segment scoring is undefined."""


class NoCandidate(VoidfinderError):
    """A nearest-point query excluded every cloud point."""


class TooFewVertices(VoidfinderError):
    """Polygon assembly needs at least three member points."""


class InvalidSpec(VoidfinderError):
    """An ensemble specification violates its bounds or cannot be sampled."""


class DataError(VoidfinderError):
    """Base class for input-file problems (maps to CLI exit code 2)."""


class ParseError(DataError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class TooFewPoints(DataError):
    pass


class NonFiniteCoordinate(DataError):
    pass
