"""
Integer labelings of V(P), exponent vectors and binomials
"""

import logging
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import numpy as np

from .errors import (
    DomainMismatchError,
    InvalidArgumentError,
    IsSimpleError,
    NotInnerIntervalError,
    OutOfBoundsError,
)
from .grid import (
    EdgeInterval,
    GridFrame,
    Interval,
    LatticePoint,
    Orientation,
    Polyomino,
    is_inner_interval,
    maximal_edge_intervals,
)
from .topology import border_polygon, holes

logger = logging.getLogger(__name__)

MAX_LABEL = int(np.iinfo(np.int64).max)


class Labeling:
    """Total map V(P) -> Z, stored in canonical vertex order"""

    def __init__(self, values: Mapping[LatticePoint, int]):
        self._values: Dict[LatticePoint, int] = {p: int(values[p]) for p in sorted(values)}

    @classmethod
    def zero(cls, P: Polyomino) -> "Labeling":
        return cls({v: 0 for v in P.vertices})

    @classmethod
    def from_sparse(cls, P: Polyomino, values: Mapping[LatticePoint, int]) -> "Labeling":
        """Labeling of P with the given nonzero entries and 0 elsewhere"""
        stray = [p for p in values if not P.has_vertex(p)]
        if stray:
            raise DomainMismatchError(f"{', '.join(map(str, sorted(stray)))} not in V(P)")
        return cls({v: values.get(v, 0) for v in P.vertices})

    @property
    def vertices(self) -> Tuple[LatticePoint, ...]:
        return tuple(self._values)

    def __getitem__(self, point: LatticePoint) -> int:
        return self._values[point]

    def items(self) -> Iterator[Tuple[LatticePoint, int]]:
        return iter(self._values.items())

    def support(self) -> List[LatticePoint]:
        return [p for p, v in self._values.items() if v]

    def sparse(self) -> Dict[LatticePoint, int]:
        return {p: v for p, v in self._values.items() if v}

    def is_zero(self) -> bool:
        return not any(self._values.values())

    def degree(self) -> int:
        """Degree of f_alpha: the sum of the positive labels"""
        return sum(v for v in self._values.values() if v > 0)

    def frame(self) -> GridFrame:
        return GridFrame.around(self._values)

    def __neg__(self) -> "Labeling":
        return Labeling({p: -v for p, v in self._values.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Labeling) and self._values == other._values

    def __hash__(self) -> int:
        return hash(tuple(self._values.items()))

    def __repr__(self) -> str:
        entries = ", ".join(f"{p}:{v}" for p, v in self.sparse().items())
        return f"Labeling({{{entries}}})"


def check_domain(P: Polyomino, alpha: Labeling):
    if set(alpha.vertices) != set(P.vertices):
        raise DomainMismatchError("labeling domain is not V(P)")


def _all_maximal_intervals(P: Polyomino) -> List[EdgeInterval]:
    return maximal_edge_intervals(P, Orientation.HORIZONTAL) + maximal_edge_intervals(
        P, Orientation.VERTICAL
    )


def interval_sums(P: Polyomino, alpha: Labeling) -> List[Tuple[EdgeInterval, int]]:
    """Label sum over every maximal horizontal and vertical edge interval"""
    check_domain(P, alpha)
    return [(e, sum(alpha[p] for p in e.points())) for e in _all_maximal_intervals(P)]


def is_admissible(P: Polyomino, alpha: Labeling) -> bool:
    """Every maximal edge interval sums to zero"""
    return all(total == 0 for _, total in interval_sums(P, alpha))


def inner_interval_labeling(P: Polyomino, I: Interval) -> Labeling:
    """alpha_I: -1 on diagonal corners, +1 on anti-diagonal corners of I"""
    if not is_inner_interval(P, I):
        raise NotInnerIntervalError(f"{I} is not an inner interval")
    values = {p: -1 for p in I.diagonal_corners()}
    values.update({p: 1 for p in I.anti_diagonal_corners()})
    return Labeling.from_sparse(P, values)


def border_labeling(P: Polyomino, phase: int = 1) -> Labeling:
    """Alternating +-1 on the corners of B(P), counterclockwise from the least corner"""
    if phase not in (1, -1):
        raise ValueError(f"phase must be +1 or -1, got {phase}")
    corners = border_polygon(P).corners
    values = {c: phase if i % 2 == 0 else -phase for i, c in enumerate(corners)}
    return Labeling.from_sparse(P, values)


def hole_witness_labeling(P: Polyomino) -> Labeling:
    """Border labeling of the first hole of P, extended by zero"""
    found = holes(P)
    if not found:
        raise IsSimpleError("polyomino has no hole")
    inner = border_labeling(found[0], 1)
    outside = {p: v for p, v in inner.items() if not P.has_vertex(p)}
    if any(outside.values()):
        raise RuntimeError("hole border corner outside V(P)")
    return Labeling.from_sparse(P, {p: v for p, v in inner.items() if P.has_vertex(p)})


class ExponentVector:
    """Nonnegative integer vector on the grid [(1,1),(m,n)]"""

    def __init__(self, entries: np.ndarray):
        array = np.array(entries, dtype=np.int64)
        if array.ndim != 2:
            raise ValueError("exponent vector must be a 2-d grid")
        if (array < 0).any():
            raise ValueError("exponent vector has negative entries")
        array.setflags(write=False)
        self.entries = array

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def degree(self) -> int:
        return int(self.entries.sum())

    def support(self) -> List[Tuple[int, int]]:
        """1-based grid points with positive entries, y-major"""
        return sorted(
            ((int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(self.entries))),
            key=lambda ij: (ij[1], ij[0]),
        )

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return {(i, j): int(self.entries[i - 1, j - 1]) for i, j in self.support()}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExponentVector)
            and self.shape == other.shape
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"ExponentVector({self.as_dict()})"


class Binomial:
    """x^plus - x^minus as a pair of exponent vectors with disjoint supports"""

    def __init__(self, plus: ExponentVector, minus: ExponentVector):
        if plus.shape != minus.shape:
            raise ValueError("binomial exponents live on different grids")
        if ((plus.entries > 0) & (minus.entries > 0)).any():
            raise ValueError("binomial exponents have overlapping supports")
        self.plus = plus
        self.minus = minus

    def degree(self) -> int:
        return self.plus.degree()

    def __neg__(self) -> "Binomial":
        return Binomial(self.minus, self.plus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Binomial) and self.plus == other.plus and self.minus == other.minus

    def __hash__(self) -> int:
        return hash((self.plus, self.minus))

    def __repr__(self) -> str:
        return f"Binomial(+{self.plus.as_dict()}, -{self.minus.as_dict()})"


def exponent_vectors(
    alpha: Labeling, bounds: Optional[Tuple[int, int]] = None
) -> Tuple[ExponentVector, ExponentVector]:
    """Split alpha into (alpha+, alpha-) after shifting V(P) to start at (1,1)"""
    frame = alpha.frame()
    m, n = bounds if bounds is not None else frame.shape
    if frame.shape[0] > m or frame.shape[1] > n:
        raise OutOfBoundsError(f"vertices need a {frame.shape} grid, got {(m, n)}")
    grid = np.zeros((m, n), dtype=np.int64)
    for p, v in alpha.items():
        if abs(v) > MAX_LABEL:
            raise OutOfBoundsError(f"label {v} at {p} does not fit in int64")
        grid[frame.index(p)] = v
    return ExponentVector(np.maximum(grid, 0)), ExponentVector(np.maximum(-grid, 0))


def binomial(alpha: Labeling, bounds: Optional[Tuple[int, int]] = None) -> Binomial:
    """f_alpha = x^(alpha+) - x^(alpha-)"""
    return Binomial(*exponent_vectors(alpha, bounds))


def enumerate_admissible(P: Polyomino, max_abs: int) -> List[Labeling]:
    """All nonzero admissible labelings with entries in [-max_abs, max_abs]"""
    if max_abs < 1:
        raise InvalidArgumentError(f"max_abs must be positive, got {max_abs}")
    vertices = P.vertices
    index = P.vertex_index()
    intervals = _all_maximal_intervals(P)
    members = [[index[p] for p in e.points()] for e in intervals]
    # each vertex lies on exactly one horizontal and one vertical maximal interval
    owners: List[List[int]] = [[] for _ in vertices]
    for k, idxs in enumerate(members):
        for i in idxs:
            owners[i].append(k)
    partial = [0] * len(intervals)
    remaining = [len(idxs) for idxs in members]
    values = [0] * len(vertices)
    choices = list(range(-max_abs, max_abs + 1))
    found: List[Labeling] = []

    def assign(pos: int):
        if pos == len(vertices):
            if any(values):
                found.append(Labeling(dict(zip(vertices, values))))
            return
        for value in choices:
            ok = True
            touched = []
            for k in owners[pos]:
                partial[k] += value
                remaining[k] -= 1
                touched.append(k)
                # prune once a line can no longer reach zero
                if abs(partial[k]) > remaining[k] * max_abs:
                    ok = False
                    break
            if ok:
                values[pos] = value
                assign(pos + 1)
                values[pos] = 0
            for k in touched:
                partial[k] -= value
                remaining[k] += 1

    assign(0)
    logger.debug(f"{len(found)} admissible labelings with |entries| <= {max_abs}")
    return found
