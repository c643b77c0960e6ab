"""
Move set M(P), inner-minor generators and the fiber-graph witness search
deciding whether f_alpha lies in the polyomino ideal.

Membership is decided operationally: f_alpha is in I_P iff alpha- can be
carried to alpha+ by moves +-u_I (I an inner interval) without any
intermediate vector leaving N^n. Every move has zero row and column sums,
so the reachable set from alpha- is finite and breadth-first search
either finds a shortest witness or exhausts it.
"""

import logging
import multiprocessing
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from .errors import (
    InvalidArgumentError,
    NotAdmissibleError,
    PolyominoError,
    SearchCappedError,
    ZeroLabelingError,
)
from .grid import (
    EdgeInterval,
    GridFrame,
    Interval,
    LatticePoint,
    Orientation,
    Polyomino,
    inner_intervals,
    maximal_edge_intervals,
)
from .labeling import (
    Binomial,
    Labeling,
    binomial,
    check_domain,
    enumerate_admissible,
    exponent_vectors,
    hole_witness_labeling,
    inner_interval_labeling,
    is_admissible,
)
from .topology import RectilinearPolygon, good_corners, is_simple, spanned_rectangle

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10_000_000


class MoveVector:
    """sign * u_I on the grid frame of P"""

    def __init__(self, source: Interval, sign: int, frame: GridFrame):
        if sign not in (1, -1):
            raise ValueError(f"move sign must be +1 or -1, got {sign}")
        if source.is_degenerate():
            raise ValueError(f"move source {source} is degenerate")
        entries = np.zeros(frame.shape, dtype=np.int64)
        for p in source.diagonal_corners():
            entries[frame.index(p)] = -sign
        for p in source.anti_diagonal_corners():
            entries[frame.index(p)] = sign
        if entries.sum(axis=0).any() or entries.sum(axis=1).any():
            raise RuntimeError(f"move {source} does not conserve row and column sums")
        entries.setflags(write=False)
        self.source = source
        self.sign = sign
        self.frame = frame
        self.entries = entries

    def taken(self) -> Tuple[LatticePoint, LatticePoint]:
        """Corners decremented by this move"""
        if self.sign > 0:
            return self.source.diagonal_corners()
        return self.source.anti_diagonal_corners()

    def given(self) -> Tuple[LatticePoint, LatticePoint]:
        """Corners incremented by this move"""
        if self.sign > 0:
            return self.source.anti_diagonal_corners()
        return self.source.diagonal_corners()

    def __neg__(self) -> "MoveVector":
        return MoveVector(self.source, -self.sign, self.frame)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MoveVector)
            and self.source == other.source
            and self.sign == other.sign
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.source, self.sign, self.frame))

    def __repr__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}u{self.source}"


@dataclass(frozen=True)
class Witness:
    """Move sequence carrying alpha- to alpha+ through N^n"""

    moves: Tuple[MoveVector, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)


class SearchStatus(Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    CAPPED = "capped"


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    witness: Optional[Witness]
    explored: int


@dataclass(frozen=True)
class AlternatingWalk:
    """Sign-alternating walk along edge intervals and the polygon it closes"""

    corners: Tuple[LatticePoint, ...]
    polygon: RectilinearPolygon
    signs: Tuple[int, ...]


@dataclass(frozen=True)
class BalanceCertificate:
    balanced: bool
    labeling: Optional[Labeling] = None
    search: Optional[SearchResult] = None

    @property
    def certified(self) -> bool:
        """True when the verdict does not rest on a capped search"""
        return self.search is None or self.search.status is not SearchStatus.CAPPED


@dataclass(frozen=True)
class LabelingOutcome:
    labeling: Labeling
    status: SearchStatus
    witness_length: Optional[int]


@dataclass(frozen=True)
class CrossCheckReport:
    simple: bool
    outcomes: List[LabelingOutcome] = field(default_factory=list)

    @property
    def inconclusive(self) -> bool:
        return any(o.status is SearchStatus.CAPPED for o in self.outcomes)

    @property
    def agrees(self) -> bool:
        """All labelings balanced exactly when P is simple"""
        if self.simple:
            return all(o.status is SearchStatus.FOUND for o in self.outcomes)
        return any(o.status is SearchStatus.EXHAUSTED for o in self.outcomes)


def move_vectors(P: Polyomino) -> List[MoveVector]:
    """M(P): +u_I and -u_I for every inner interval I"""
    frame = P.frame()
    moves = []
    for interval in inner_intervals(P):
        moves.append(MoveVector(interval, 1, frame))
        moves.append(MoveVector(interval, -1, frame))
    return moves


def cell_moves(P: Polyomino) -> List[MoveVector]:
    """b_C = u_C for every cell C of P"""
    frame = P.frame()
    return [MoveVector(cell.interval, 1, frame) for cell in P]


def inner_minor_generators(P: Polyomino) -> List[Binomial]:
    """One binomial per inner interval: anti-diagonal minus diagonal corners"""
    shape = P.frame().shape
    return [binomial(inner_interval_labeling(P, I), shape) for I in inner_intervals(P)]


def _require_admissible(P: Polyomino, alpha: Labeling):
    check_domain(P, alpha)
    if not is_admissible(P, alpha):
        raise NotAdmissibleError("labeling has a nonzero edge interval sum")


def _preferred_sources(P: Polyomino, alpha: Labeling) -> Set[Interval]:
    """Rectangles spanned by good corners of the alternating walk polygon"""
    if alpha.is_zero():
        return set()
    try:
        polygon = alternating_walk(P, alpha).polygon
    except (PolyominoError, RuntimeError):
        return set()
    index = {c: i for i, c in enumerate(polygon.corners)}
    return {spanned_rectangle(polygon, index[c]) for c in good_corners(polygon)}


def search_witness(
    P: Polyomino, alpha: Labeling, max_nodes: int = DEFAULT_MAX_NODES
) -> SearchResult:
    """Breadth-first search from alpha- to alpha+ over nonnegative states"""
    if max_nodes < 1:
        raise InvalidArgumentError(f"max_nodes must be positive, got {max_nodes}")
    _require_admissible(P, alpha)
    frame = P.frame()
    plus, minus = exponent_vectors(alpha, frame.shape)
    if plus == minus:
        return SearchResult(SearchStatus.FOUND, Witness(), 1)

    # the side with the smaller total is the start; ties go to alpha-
    reverse = plus.degree() < minus.degree()
    source, target = (plus, minus) if reverse else (minus, plus)

    # states are exponent counts in vertex order
    vertices = P.vertices
    index = P.vertex_index()
    start = tuple(int(source.entries[frame.index(v)]) for v in vertices)
    goal = tuple(int(target.entries[frame.index(v)]) for v in vertices)

    # good-corner rectangles are tried first
    preferred = _preferred_sources(P, alpha)
    moves = sorted(move_vectors(P), key=lambda u: u.source not in preferred)
    steps = [
        (tuple(index[p] for p in u.taken()), tuple(index[p] for p in u.given()))
        for u in moves
    ]

    # entries can never exceed the conserved row and column totals
    row_total: Dict[int, int] = {}
    col_total: Dict[int, int] = {}
    for v, count in zip(vertices, start):
        row_total[v.y] = row_total.get(v.y, 0) + count
        col_total[v.x] = col_total.get(v.x, 0) + count
    bound = [min(row_total[v.y], col_total[v.x]) for v in vertices]

    logger.debug(
        f"witness search: degree {sum(start)}, {len(moves)} moves, "
        f"{len(preferred)} preferred rectangles"
    )
    parents: Dict[Tuple[int, ...], Optional[Tuple[Tuple[int, ...], int]]] = {start: None}
    queue = deque([start])
    status = SearchStatus.EXHAUSTED
    while queue:
        state = queue.popleft()
        if state == goal:
            status = SearchStatus.FOUND
            break
        for k, (taken, given) in enumerate(steps):
            # a move needs both of its minus corners occupied
            if state[taken[0]] == 0 or state[taken[1]] == 0:
                continue
            nxt = list(state)
            nxt[taken[0]] -= 1
            nxt[taken[1]] -= 1
            nxt[given[0]] += 1
            nxt[given[1]] += 1
            if nxt[given[0]] > bound[given[0]] or nxt[given[1]] > bound[given[1]]:
                raise RuntimeError("move broke row/column conservation")
            key = tuple(nxt)
            if key in parents:
                continue
            parents[key] = (state, k)
            if len(parents) > max_nodes:
                logger.warning(f"witness search capped at {max_nodes} states")
                return SearchResult(SearchStatus.CAPPED, None, len(parents))
            queue.append(key)

    if status is SearchStatus.EXHAUSTED:
        logger.debug(f"witness search exhausted {len(parents)} states")
        return SearchResult(status, None, len(parents))

    # walk parents back to the start
    path: List[MoveVector] = []
    node = goal
    while parents[node] is not None:
        prev, k = parents[node]
        path.append(moves[k])
        node = prev
    path.reverse()
    if reverse:
        path = [-u for u in reversed(path)]
    logger.debug(f"witness of length {len(path)} after {len(parents)} states")
    return SearchResult(SearchStatus.FOUND, Witness(tuple(path)), len(parents))


def is_labeling_balanced(
    P: Polyomino, alpha: Labeling, max_nodes: int = DEFAULT_MAX_NODES
) -> Optional[Witness]:
    """Witness that f_alpha lies in I_P, or None once the search is exhausted"""
    result = search_witness(P, alpha, max_nodes)
    if result.status is SearchStatus.CAPPED:
        raise SearchCappedError(result)
    return result.witness


def verify_witness(P: Polyomino, alpha: Labeling, w: Witness) -> bool:
    """Replay w from alpha-, checking membership in M(P) and nonnegativity"""
    try:
        check_domain(P, alpha)
        frame = P.frame()
        plus, minus = exponent_vectors(alpha, frame.shape)
    except PolyominoError:
        return False
    allowed = {(u.source, u.sign) for u in move_vectors(P)}
    state = minus.entries.copy()
    for u in w.moves:
        if (u.source, u.sign) not in allowed or u.entries.shape != state.shape:
            return False
        if not np.array_equal(u.entries, MoveVector(u.source, u.sign, frame).entries):
            return False
        state = state + u.entries
        if (state < 0).any():
            return False
    return bool(np.array_equal(state, plus.entries))


def _edge_interval_map(P: Polyomino, orientation: Orientation) -> Dict[LatticePoint, EdgeInterval]:
    return {p: e for e in maximal_edge_intervals(P, orientation) for p in e.points()}


def alternating_walk(P: Polyomino, alpha: Labeling) -> AlternatingWalk:
    """Follow sign-alternating labels along horizontal and vertical edge
    intervals until the path meets itself, and close off the polygon"""
    _require_admissible(P, alpha)
    if alpha.is_zero():
        raise ZeroLabelingError("alternating walk needs a nonzero labeling")
    along = {
        Orientation.HORIZONTAL: _edge_interval_map(P, Orientation.HORIZONTAL),
        Orientation.VERTICAL: _edge_interval_map(P, Orientation.VERTICAL),
    }

    start = min(p for p in alpha.vertices if alpha[p] > 0)
    walk = [start]
    segments: List[Interval] = []
    orientation = Orientation.HORIZONTAL
    limit = 2 * len(P.vertices) + 4
    while True:
        current = walk[-1]
        # nearest opposite-sign label on the current line
        want = -1 if alpha[current] > 0 else 1
        candidates = [p for p in along[orientation][current].points() if alpha[p] * want > 0]
        if not candidates:
            sign = "positive" if want > 0 else "negative"
            raise RuntimeError(f"no {sign} label next to {current}")
        nxt = min(candidates, key=lambda p: (abs(p.x - current.x) + abs(p.y - current.y), p.key))
        segment = Interval(current, nxt)
        r = len(segments)
        segments.append(segment)
        walk.append(nxt)

        # closed off against the latest earlier segment it meets
        hits = [j for j in range(r - 1) if segments[j].intersection(segment) is not None]
        if hits:
            j = max(hits)
            # perpendicular hit: the crossing point becomes a corner
            if (segments[j].width == 0) != (segment.width == 0):
                meet = segments[j].intersection(segment).lo
                points = [meet] + walk[j + 1:r + 1]
            else:
                points = walk[j + 1:r + 1]
            break
        if len(segments) > limit:
            raise RuntimeError("alternating walk did not close")
        if orientation is Orientation.HORIZONTAL:
            orientation = Orientation.VERTICAL
        else:
            orientation = Orientation.HORIZONTAL

    polygon = RectilinearPolygon.from_points(points)
    signs = tuple(1 if alpha[p] > 0 else -1 for p in walk)
    return AlternatingWalk(tuple(walk), polygon, signs)


def is_balanced_certified(P: Polyomino, max_nodes: int = DEFAULT_MAX_NODES) -> BalanceCertificate:
    """Simple iff balanced; a non-simple P carries its hole witness and failed search"""
    if is_simple(P):
        return BalanceCertificate(True)
    beta = hole_witness_labeling(P)
    result = search_witness(P, beta, max_nodes)
    if result.status is SearchStatus.FOUND:
        raise RuntimeError("hole witness labeling was reachable")
    return BalanceCertificate(False, beta, result)


def _outcome(job: Tuple[Polyomino, Labeling, int]) -> LabelingOutcome:
    P, alpha, max_nodes = job
    result = search_witness(P, alpha, max_nodes)
    length = len(result.witness) if result.witness is not None else None
    return LabelingOutcome(alpha, result.status, length)


def cross_check_balanced(
    P: Polyomino, max_abs: int, max_nodes: int = DEFAULT_MAX_NODES, workers: int = 1
) -> CrossCheckReport:
    """Run the witness search over every admissible labeling with small entries"""
    if workers < 1:
        raise InvalidArgumentError(f"workers must be positive, got {workers}")
    jobs = [(P, alpha, max_nodes) for alpha in enumerate_admissible(P, max_abs)]
    if workers > 1 and len(jobs) > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            outcomes = pool.map(_outcome, jobs)
    else:
        outcomes = [_outcome(job) for job in jobs]
    report = CrossCheckReport(is_simple(P), outcomes)
    logger.info(
        f"cross-check of {len(outcomes)} labelings: simple={report.simple}, "
        f"agrees={report.agrees}, inconclusive={report.inconclusive}"
    )
    return report
