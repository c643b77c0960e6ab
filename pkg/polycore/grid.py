"""
Lattice primitives: points, intervals, cells, polyominoes and edge intervals
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from itertools import groupby
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from .errors import (
    CoordinateOverflowError,
    DegenerateIntervalError,
    DisconnectedError,
    EmptyInputError,
    IncomparablePointsError,
)

DEFAULT_COORDINATE_CAP = 1_000_000

Anchor = Tuple[int, int]

STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


@total_ordering
@dataclass(frozen=True)
class LatticePoint:
    """Point of the nonnegative integer grid, ordered y-major then x"""

    x: int
    y: int

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise CoordinateOverflowError(f"negative coordinate in ({self.x},{self.y})")

    @property
    def key(self) -> Tuple[int, int]:
        return (self.y, self.x)

    def __lt__(self, other: "LatticePoint") -> bool:
        return self.key < other.key

    def leq(self, other: "LatticePoint") -> bool:
        """Componentwise partial order"""
        return self.x <= other.x and self.y <= other.y

    def shifted(self, dx: int, dy: int) -> "LatticePoint":
        return LatticePoint(self.x + dx, self.y + dy)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class Interval:
    """Closed lattice rectangle [lo, hi]; [b, a] with b <= a is stored as [a, b]"""

    lo: LatticePoint
    hi: LatticePoint

    def __post_init__(self):
        if self.lo.leq(self.hi):
            return
        if self.hi.leq(self.lo):
            lo, hi = self.hi, self.lo
            object.__setattr__(self, "lo", lo)
            object.__setattr__(self, "hi", hi)
            return
        raise IncomparablePointsError(f"{self.lo} and {self.hi} are not comparable")

    @classmethod
    def of(cls, ax: int, ay: int, bx: int, by: int) -> "Interval":
        return cls(LatticePoint(ax, ay), LatticePoint(bx, by))

    @property
    def width(self) -> int:
        return self.hi.x - self.lo.x

    @property
    def height(self) -> int:
        return self.hi.y - self.lo.y

    def is_degenerate(self) -> bool:
        return self.width == 0 or self.height == 0

    def diagonal_corners(self) -> Tuple[LatticePoint, LatticePoint]:
        return (self.lo, self.hi)

    def anti_diagonal_corners(self) -> Tuple[LatticePoint, LatticePoint]:
        return (LatticePoint(self.lo.x, self.hi.y), LatticePoint(self.hi.x, self.lo.y))

    def corners(self) -> List[LatticePoint]:
        """The distinct corner points, in canonical order"""
        return sorted(set(self.diagonal_corners() + self.anti_diagonal_corners()))

    def points(self) -> List[LatticePoint]:
        """All lattice points of the interval, in canonical order"""
        return [
            LatticePoint(x, y)
            for y in range(self.lo.y, self.hi.y + 1)
            for x in range(self.lo.x, self.hi.x + 1)
        ]

    def cells(self) -> List["Cell"]:
        """Cells whose closed square lies in the closed region of the interval"""
        return [
            Cell(LatticePoint(x, y))
            for y in range(self.lo.y, self.hi.y)
            for x in range(self.lo.x, self.hi.x)
        ]

    def intersection(self, other: "Interval") -> Optional["Interval"]:
        lo = LatticePoint(max(self.lo.x, other.lo.x), max(self.lo.y, other.lo.y))
        hi = LatticePoint(min(self.hi.x, other.hi.x), min(self.hi.y, other.hi.y))
        if lo.leq(hi):
            return Interval(lo, hi)
        return None

    def sort_key(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.lo.key, self.hi.key)

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@total_ordering
@dataclass(frozen=True)
class Cell:
    """Unit square identified by its lower-left anchor"""

    anchor: LatticePoint

    @classmethod
    def at(cls, x: int, y: int) -> "Cell":
        return cls(LatticePoint(x, y))

    def __lt__(self, other: "Cell") -> bool:
        return self.anchor < other.anchor

    @property
    def interval(self) -> Interval:
        return Interval(self.anchor, self.anchor.shifted(1, 1))

    def vertices(self) -> List[LatticePoint]:
        return self.interval.corners()

    def as_tuple(self) -> Anchor:
        return self.anchor.as_tuple()

    def __str__(self) -> str:
        return str(self.anchor)


class Orientation(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class EdgeInterval:
    """Horizontal or vertical run of cell edges"""

    interval: Interval
    orientation: Orientation

    def __post_init__(self):
        if self.orientation is Orientation.HORIZONTAL and self.interval.height != 0:
            raise ValueError(f"horizontal edge interval {self.interval} spans rows")
        if self.orientation is Orientation.VERTICAL and self.interval.width != 0:
            raise ValueError(f"vertical edge interval {self.interval} spans columns")

    @property
    def length(self) -> int:
        return self.interval.width + self.interval.height

    def points(self) -> List[LatticePoint]:
        return self.interval.points()

    def endpoints(self) -> Tuple[LatticePoint, LatticePoint]:
        return (self.interval.lo, self.interval.hi)

    def __str__(self) -> str:
        return str(self.interval)


@dataclass(frozen=True)
class GridFrame:
    """Shift of V(P) into [(1,1),(m,n)] with minimal m and n"""

    origin: Tuple[int, int]
    shape: Tuple[int, int]

    @classmethod
    def around(cls, points: Iterable[LatticePoint]) -> "GridFrame":
        pts = list(points)
        min_x = min(p.x for p in pts)
        min_y = min(p.y for p in pts)
        max_x = max(p.x for p in pts)
        max_y = max(p.y for p in pts)
        return cls((min_x, min_y), (max_x - min_x + 1, max_y - min_y + 1))

    def grid_point(self, point: LatticePoint) -> Tuple[int, int]:
        """1-based (i, j) position of a vertex"""
        return (point.x - self.origin[0] + 1, point.y - self.origin[1] + 1)

    def index(self, point: LatticePoint) -> Tuple[int, int]:
        """0-based array index of a vertex"""
        return (point.x - self.origin[0], point.y - self.origin[1])

    def point(self, i: int, j: int) -> LatticePoint:
        """Vertex at 0-based array index"""
        return LatticePoint(i + self.origin[0], j + self.origin[1])


def edge_components(anchors: Iterable[Anchor]) -> List[FrozenSet[Anchor]]:
    """Edge-connected components of a collection of cells, least cell first"""
    remaining: Set[Anchor] = set(anchors)
    components = []
    for start in sorted(remaining, key=lambda a: (a[1], a[0])):
        if start not in remaining:
            continue
        remaining.discard(start)
        component = {start}
        queue = deque([start])
        while queue:
            x, y = queue.popleft()
            for dx, dy in STEPS:
                nb = (x + dx, y + dy)
                if nb in remaining:
                    remaining.discard(nb)
                    component.add(nb)
                    queue.append(nb)
        components.append(frozenset(component))
    return components


class Polyomino:
    """Finite edge-connected set of cells; immutable after construction"""

    def __init__(self, cells: Iterable[Cell], coordinate_cap: int = DEFAULT_COORDINATE_CAP):
        cell_set = frozenset(cells)
        if not cell_set:
            raise EmptyInputError("a polyomino needs at least one cell")
        for cell in cell_set:
            if cell.anchor.x + 1 > coordinate_cap or cell.anchor.y + 1 > coordinate_cap:
                raise CoordinateOverflowError(
                    f"cell {cell} exceeds coordinate cap {coordinate_cap}"
                )
        anchors = {c.as_tuple() for c in cell_set}
        components = edge_components(anchors)
        if len(components) > 1:
            raise DisconnectedError([sorted(c, key=lambda a: (a[1], a[0])) for c in components])

        self._cells = cell_set
        self._anchors = frozenset(anchors)
        self._ordered = tuple(sorted(cell_set))
        self._vertices = tuple(sorted({v for c in cell_set for v in c.vertices()}))
        self._vertex_set = frozenset(self._vertices)

    @property
    def cells(self) -> FrozenSet[Cell]:
        return self._cells

    @property
    def vertices(self) -> Tuple[LatticePoint, ...]:
        """V(P) in canonical order"""
        return self._vertices

    def anchors(self) -> FrozenSet[Anchor]:
        return self._anchors

    def has_cell(self, x: int, y: int) -> bool:
        return (x, y) in self._anchors

    def has_vertex(self, point: LatticePoint) -> bool:
        return point in self._vertex_set

    def vertex_index(self) -> Dict[LatticePoint, int]:
        return {v: i for i, v in enumerate(self._vertices)}

    def bounds(self) -> Interval:
        """Smallest interval containing V(P)"""
        xs = [v.x for v in self._vertices]
        ys = [v.y for v in self._vertices]
        return Interval.of(min(xs), min(ys), max(xs), max(ys))

    def frame(self) -> GridFrame:
        return GridFrame.around(self._vertices)

    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self._ordered)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._cells

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polyomino) and self._cells == other._cells

    def __hash__(self) -> int:
        return hash(self._cells)

    def __repr__(self) -> str:
        return f"Polyomino({[c.as_tuple() for c in self._ordered]})"


def polyomino_from_cells(
    cells: Iterable[Cell], coordinate_cap: int = DEFAULT_COORDINATE_CAP
) -> Polyomino:
    """Validate a cell set as a polyomino"""
    return Polyomino(cells, coordinate_cap=coordinate_cap)


def polyomino_from_anchors(
    anchors: Iterable[Anchor], coordinate_cap: int = DEFAULT_COORDINATE_CAP
) -> Polyomino:
    return Polyomino((Cell.at(x, y) for x, y in anchors), coordinate_cap=coordinate_cap)


def is_rectangular(P: Polyomino) -> bool:
    """True when P is all cells of a single interval"""
    return len(P) == len(P.bounds().cells())


def unit_edges(anchors: Iterable[Anchor], orientation: Orientation) -> List[Anchor]:
    """Start points of all cell edges of one orientation, with multiplicity"""
    edges = []
    for x, y in anchors:
        if orientation is Orientation.HORIZONTAL:
            edges.extend([(x, y), (x, y + 1)])
        else:
            edges.extend([(x, y), (x + 1, y)])
    return edges


def merge_unit_edges(starts: Iterable[Anchor], orientation: Orientation) -> List[EdgeInterval]:
    """Merge unit edges, given by start point, into maximal collinear runs"""
    horizontal = orientation is Orientation.HORIZONTAL
    # (line, position along line)
    keyed = sorted({(y, x) if horizontal else (x, y) for x, y in starts})
    intervals = []
    for line, group in groupby(keyed, key=lambda k: k[0]):
        positions = [pos for _, pos in group]
        run_start = prev = positions[0]
        for pos in positions[1:] + [None]:
            if pos is not None and pos == prev + 1:
                prev = pos
                continue
            if horizontal:
                interval = Interval.of(run_start, line, prev + 1, line)
            else:
                interval = Interval.of(line, run_start, line, prev + 1)
            intervals.append(EdgeInterval(interval, orientation))
            if pos is not None:
                run_start = prev = pos
    intervals.sort(key=lambda e: e.interval.sort_key())
    return intervals


def maximal_edge_intervals(P: Polyomino, orientation: Orientation) -> List[EdgeInterval]:
    """All inclusion-maximal edge intervals of one orientation"""
    return merge_unit_edges(unit_edges(P.anchors(), orientation), orientation)


def is_inner_interval(P: Polyomino, I: Interval) -> bool:
    """True iff every cell inside I belongs to P"""
    if I.is_degenerate():
        raise DegenerateIntervalError(f"{I} is not a proper rectangle")
    return all(cell in P for cell in I.cells())


def inner_intervals(P: Polyomino) -> List[Interval]:
    """All non-degenerate inner intervals, scanned over pairs of vertices"""
    result = []
    for a in P.vertices:
        for b in P.vertices:
            if a.x < b.x and a.y < b.y:
                interval = Interval(a, b)
                if is_inner_interval(P, interval):
                    result.append(interval)
    result.sort(key=Interval.sort_key)
    return result
