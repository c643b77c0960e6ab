"""
Border edges, holes, border polygons and corner geometry
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .errors import InvalidPolygonError, NotSimpleError
from .grid import (
    STEPS,
    Cell,
    EdgeInterval,
    Interval,
    LatticePoint,
    Orientation,
    Polyomino,
    edge_components,
    merge_unit_edges,
    polyomino_from_anchors,
    unit_edges,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BorderEdge:
    """Unit edge belonging to exactly one cell"""

    start: LatticePoint
    end: LatticePoint

    def __post_init__(self):
        if abs(self.start.x - self.end.x) + abs(self.start.y - self.end.y) != 1:
            raise ValueError(f"{self.start} and {self.end} are not at distance 1")

    @property
    def orientation(self) -> Orientation:
        if self.start.y == self.end.y:
            return Orientation.HORIZONTAL
        return Orientation.VERTICAL


class CornerKind(Enum):
    CONVEX = "convex"
    CONCAVE = "concave"


@dataclass(frozen=True)
class CornerInfo:
    point: LatticePoint
    kind: CornerKind
    good: bool


def _cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    """z-component of (a - o) x (b - a)"""
    return (a.x - o.x) * (b.y - a.y) - (a.y - o.y) * (b.x - a.x)


Segment = Tuple[LatticePoint, LatticePoint]


def _segments_meet(p: Segment, q: Segment) -> bool:
    return Interval(*p).intersection(Interval(*q)) is not None


@dataclass(frozen=True)
class RectilinearPolygon:
    """Simple rectilinear polygon given by its counterclockwise corner cycle"""

    corners: Tuple[LatticePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "corners", tuple(self.corners))
        self.validate()

    @classmethod
    def from_points(cls, points: Iterable[LatticePoint]) -> "RectilinearPolygon":
        """Normalize a closed axis-parallel path: drop straight-through points,
        orient counterclockwise and start at the least corner."""
        pts: List[LatticePoint] = []
        for p in points:
            if not pts or pts[-1] != p:
                pts.append(p)
        if len(pts) > 1 and pts[0] == pts[-1]:
            pts.pop()
        changed = True
        while changed and len(pts) > 2:
            changed = False
            for i in range(len(pts)):
                prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
                if _cross(prev, cur, nxt) == 0:
                    del pts[i]
                    changed = True
                    break
        if _signed_area2(pts) < 0:
            pts.reverse()
        start = pts.index(min(pts))
        return cls(tuple(pts[start:] + pts[:start]))

    def edges(self) -> List[Tuple[LatticePoint, LatticePoint]]:
        n = len(self.corners)
        return [(self.corners[i], self.corners[(i + 1) % n]) for i in range(n)]

    def signed_area2(self) -> int:
        return _signed_area2(self.corners)

    def validate(self):
        n = len(self.corners)
        if n < 4 or n % 2:
            raise InvalidPolygonError(f"need an even number of at least 4 corners, got {n}")
        edges = self.edges()
        for i, (p, q) in enumerate(edges):
            if (p.x == q.x) == (p.y == q.y):
                raise InvalidPolygonError(f"edge {p}-{q} is not axis-parallel")
            r, s = edges[(i + 1) % n]
            if (p.x == q.x) == (r.x == s.x):
                raise InvalidPolygonError(f"edges at corner {q} do not alternate")
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                if _segments_meet(edges[i], edges[j]):
                    raise InvalidPolygonError(f"edges {i} and {j} intersect")
        if self.signed_area2() <= 0:
            raise InvalidPolygonError("corner cycle is not counterclockwise")

    def contains_cell(self, x: int, y: int) -> bool:
        """Even-odd test of the cell centre against the vertical edges"""
        inside = False
        for p, q in self.edges():
            if p.x != q.x or p.x <= x:
                continue
            lo, hi = min(p.y, q.y), max(p.y, q.y)
            if lo <= y and y + 1 <= hi:
                inside = not inside
        return inside

    def bounds(self) -> Interval:
        xs = [c.x for c in self.corners]
        ys = [c.y for c in self.corners]
        return Interval.of(min(xs), min(ys), max(xs), max(ys))

    def __len__(self) -> int:
        return len(self.corners)


def _signed_area2(points) -> int:
    n = len(points)
    return sum(
        points[i].x * points[(i + 1) % n].y - points[(i + 1) % n].x * points[i].y
        for i in range(n)
    )


def _edge_counts(P: Polyomino, orientation: Orientation) -> Counter:
    return Counter(unit_edges(P.anchors(), orientation))


def border_edges(P: Polyomino) -> List[BorderEdge]:
    """Unit edges incident to exactly one cell of P"""
    edges = []
    for (x, y), count in _edge_counts(P, Orientation.HORIZONTAL).items():
        if count == 1:
            edges.append(BorderEdge(LatticePoint(x, y), LatticePoint(x + 1, y)))
    for (x, y), count in _edge_counts(P, Orientation.VERTICAL).items():
        if count == 1:
            edges.append(BorderEdge(LatticePoint(x, y), LatticePoint(x, y + 1)))
    edges.sort(key=lambda e: (e.start.key, e.end.key))
    return edges


def maximal_border_edge_intervals(P: Polyomino) -> List[EdgeInterval]:
    """Maximal runs of collinear border edges, horizontal ones first"""
    edges = border_edges(P)
    result = []
    for orientation in (Orientation.HORIZONTAL, Orientation.VERTICAL):
        starts = [e.start.as_tuple() for e in edges if e.orientation is orientation]
        result.extend(merge_unit_edges(starts, orientation))
    return result


def holes(P: Polyomino) -> List[Polyomino]:
    """Connected components of the cells that cannot escape P's bounding box"""
    box = P.bounds()
    min_x, min_y = box.lo.x - 1, box.lo.y - 1
    max_x, max_y = box.hi.x, box.hi.y
    anchors = P.anchors()

    start = (min_x, min_y)
    reached = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for dx, dy in STEPS:
            nb = (x + dx, y + dy)
            if not (min_x <= nb[0] <= max_x and min_y <= nb[1] <= max_y):
                continue
            if nb in reached or nb in anchors:
                continue
            reached.add(nb)
            queue.append(nb)

    trapped = [
        (x, y)
        for y in range(box.lo.y, box.hi.y)
        for x in range(box.lo.x, box.hi.x)
        if (x, y) not in anchors and (x, y) not in reached
    ]
    result = [polyomino_from_anchors(component) for component in edge_components(trapped)]
    if result:
        logger.debug(f"{len(result)} hole(s) in polyomino of {len(P)} cells")
    return result


def is_simple(P: Polyomino) -> bool:
    """A polyomino is simple iff it is hole-free"""
    return not holes(P)


def _directed_border_edges(P: Polyomino) -> Dict[LatticePoint, LatticePoint]:
    """Border edges oriented with P on the left, keyed by start point"""
    successor: Dict[LatticePoint, LatticePoint] = {}
    for cell in P:
        x, y = cell.as_tuple()
        sides = (
            ((x, y - 1), (x, y), (x + 1, y)),
            ((x + 1, y), (x + 1, y), (x + 1, y + 1)),
            ((x, y + 1), (x + 1, y + 1), (x, y + 1)),
            ((x - 1, y), (x, y + 1), (x, y)),
        )
        for neighbor, start, end in sides:
            if P.has_cell(*neighbor):
                continue
            a, b = LatticePoint(*start), LatticePoint(*end)
            if a in successor:
                raise RuntimeError(f"two border edges leave {a}")
            successor[a] = b
    return successor


def border_polygon(P: Polyomino) -> RectilinearPolygon:
    """Trace B(P) counterclockwise from its least vertex"""
    if not is_simple(P):
        raise NotSimpleError("the border of a polyomino with holes is not a single polygon")
    successor = _directed_border_edges(P)
    start = P.vertices[0]
    path = [start]
    current = successor[start]
    while current != start:
        path.append(current)
        current = successor[current]
        if len(path) > len(successor):
            raise RuntimeError("border trace did not close")
    if len(path) != len(successor):
        raise RuntimeError(
            f"border trace covered {len(path)} of {len(successor)} border edges"
        )
    return RectilinearPolygon.from_points(path)


def interior_cells(R: RectilinearPolygon) -> FrozenSet[Cell]:
    """Cells enclosed by R"""
    box = R.bounds()
    return frozenset(
        Cell.at(x, y)
        for y in range(box.lo.y, box.hi.y)
        for x in range(box.lo.x, box.hi.x)
        if R.contains_cell(x, y)
    )


def spanned_rectangle(R: RectilinearPolygon, i: int) -> Interval:
    """Rectangle spanned by corner i and its two neighbor corners"""
    n = len(R.corners)
    pts = (R.corners[i - 1], R.corners[i], R.corners[(i + 1) % n])
    return Interval.of(
        min(p.x for p in pts), min(p.y for p in pts), max(p.x for p in pts), max(p.y for p in pts)
    )


def classify_corners(R: RectilinearPolygon) -> List[CornerInfo]:
    """Tag each corner convex or concave, and flag the good convex ones"""
    interior = interior_cells(R)
    n = len(R.corners)
    result = []
    for i, corner in enumerate(R.corners):
        turn = _cross(R.corners[i - 1], corner, R.corners[(i + 1) % n])
        kind = CornerKind.CONVEX if turn > 0 else CornerKind.CONCAVE
        good = kind is CornerKind.CONVEX and all(
            cell in interior for cell in spanned_rectangle(R, i).cells()
        )
        result.append(CornerInfo(corner, kind, good))
    return result


def good_corners(R: RectilinearPolygon) -> List[LatticePoint]:
    """Convex corners whose neighbor-spanned rectangle lies inside R"""
    return [info.point for info in classify_corners(R) if info.good]


def pinch_points(P: Polyomino) -> List[LatticePoint]:
    """Vertices shared by exactly two cells of P that meet only there"""
    result = []
    for v in P.vertices:
        around = [
            (x, y)
            for x, y in ((v.x - 1, v.y - 1), (v.x, v.y - 1), (v.x - 1, v.y), (v.x, v.y))
            if x >= 0 and y >= 0 and P.has_cell(x, y)
        ]
        if len(around) == 2:
            (ax, ay), (bx, by) = around
            if ax != bx and ay != by:
                result.append(v)
    return result


def endpoint_violations(P: Polyomino) -> List[LatticePoint]:
    """Points where maximal border edge intervals meet other than at a shared
    endpoint, or where three or more of them meet"""
    intervals = maximal_border_edge_intervals(P)
    bad: Set[LatticePoint] = set()
    for i, first in enumerate(intervals):
        for second in intervals[i + 1:]:
            common: Optional[Interval] = first.interval.intersection(second.interval)
            if common is None:
                continue
            if common.lo != common.hi:
                bad.update(common.corners())
                continue
            point = common.lo
            if point not in first.endpoints() or point not in second.endpoints():
                bad.add(point)
    on_intervals: Counter = Counter(p for e in intervals for p in e.endpoints())
    bad.update(p for p, count in on_intervals.items() if count > 2)
    return sorted(bad)
