"""
Exhaustive generation of fixed polyominoes
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .errors import CapExceededError, InvalidArgumentError
from .grid import STEPS, Anchor, Polyomino, polyomino_from_anchors
from .topology import is_simple

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 10

Shape = FrozenSet[Anchor]


@dataclass(frozen=True)
class EnumerationConfig:
    max_cells: int
    simple_only: bool = False
    cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self):
        if self.max_cells < 1:
            raise InvalidArgumentError(f"max_cells must be positive, got {self.max_cells}")
        if self.cap < 1:
            raise InvalidArgumentError(f"cap must be positive, got {self.cap}")
        if self.max_cells > self.cap:
            raise CapExceededError(f"{self.max_cells} cells is above the cap of {self.cap}")


def canonicalize(anchors: Iterable[Anchor]) -> Shape:
    """Translate so the minimal x and y coordinates are 0"""
    cells = list(anchors)
    min_x = min(x for x, _ in cells)
    min_y = min(y for _, y in cells)
    return frozenset((x - min_x, y - min_y) for x, y in cells)


def _order(shape: Shape) -> Tuple[Anchor, ...]:
    return tuple(sorted((y, x) for x, y in shape))


@lru_cache(maxsize=None)
def _shapes(n: int) -> Tuple[Shape, ...]:
    """All canonical n-cell shapes, grown one edge-adjacent cell at a time"""
    if n == 1:
        return (frozenset({(0, 0)}),)
    grown = set()
    for shape in _shapes(n - 1):
        for x, y in shape:
            for dx, dy in STEPS:
                cell = (x + dx, y + dy)
                if cell not in shape:
                    grown.add(canonicalize(shape | {cell}))
    logger.debug(f"{len(grown)} fixed polyominoes with {n} cells")
    return tuple(sorted(grown, key=_order))


def _check_cap(n: int, cap: int):
    if n < 1:
        raise InvalidArgumentError(f"cell count must be positive, got {n}")
    if cap < 1:
        raise InvalidArgumentError(f"cap must be positive, got {cap}")
    if n > cap:
        raise CapExceededError(f"{n} cells is above the cap of {cap}")


def enumerate_polyominoes(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> List[Polyomino]:
    """Every fixed n-cell polyomino in canonical position, each once"""
    _check_cap(n, cap)
    return [polyomino_from_anchors(shape) for shape in _shapes(n)]


def count_polyominoes(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    _check_cap(n, cap)
    return len(_shapes(n))


def iter_polyominoes(config: EnumerationConfig) -> Iterator[Polyomino]:
    """Polyominoes with 1..max_cells cells, smallest first"""
    for n in range(1, config.max_cells + 1):
        for P in enumerate_polyominoes(n, config.cap):
            if not config.simple_only or is_simple(P):
                yield P


def first_nonsimple(
    n_range: Iterable[int], cap: int = DEFAULT_ENUMERATION_CAP
) -> Optional[Polyomino]:
    """Least polyomino with a hole, by size and then canonical order"""
    sizes = sorted(set(n_range))
    for n in sizes:
        _check_cap(n, cap)
    for n in sizes:
        for P in enumerate_polyominoes(n, cap):
            if not is_simple(P):
                return P
    return None
