"""
Exception types raised by polycore
"""

from typing import Any, List, Optional


class PolyominoError(Exception):
    """Base class for all input and domain errors"""


class EmptyInputError(PolyominoError):
    """No cells were given"""


class DisconnectedError(PolyominoError):
    """Cells do not form a single edge-connected piece"""

    def __init__(self, components: List[Any]):
        self.components = components
        super().__init__(f"cells form {len(components)} edge-connected components")


class CoordinateOverflowError(PolyominoError):
    """A coordinate is negative or above the configured cap"""


class IncomparablePointsError(PolyominoError):
    """Two points are not comparable in the componentwise order"""


class DegenerateIntervalError(PolyominoError):
    """Interval is a point or a segment"""


class InvalidPolygonError(PolyominoError, ValueError):
    """Corner sequence violates a rectilinear polygon invariant"""


class NotSimpleError(PolyominoError):
    """Operation needs a hole-free polyomino"""


class IsSimpleError(PolyominoError):
    """Operation needs a polyomino with at least one hole"""


class DomainMismatchError(PolyominoError):
    """Labeling keys differ from the vertex set of the polyomino"""


class NotInnerIntervalError(PolyominoError):
    """Interval contains a cell outside the polyomino"""


class OutOfBoundsError(PolyominoError):
    """Vertices do not fit the requested exponent grid"""


class NotAdmissibleError(PolyominoError):
    """Labeling has a nonzero maximal edge interval sum"""


class ZeroLabelingError(PolyominoError):
    """Labeling is identically zero"""


class CapExceededError(PolyominoError):
    """Requested size is above the enumeration cap"""


class ParseError(PolyominoError):
    """Malformed polyomino or labeling document"""


class SearchCappedError(PolyominoError):
    """Witness search hit its node limit before deciding"""

    def __init__(self, result: Optional[Any] = None):
        self.result = result
        explored = getattr(result, "explored", "?")
        super().__init__(f"witness search capped after {explored} states")


class InvalidArgumentError(PolyominoError, ValueError):
    """Numeric limit is out of range"""
