from itertools import combinations

import pytest

from polycore.enumeration import (
    EnumerationConfig,
    canonicalize,
    count_polyominoes,
    enumerate_polyominoes,
    first_nonsimple,
    iter_polyominoes,
)
from polycore.errors import CapExceededError, InvalidArgumentError
from polycore.grid import edge_components
from polycore.topology import holes, is_simple

FIXED_COUNTS = [1, 2, 6, 19, 63, 216, 760, 2725]


def subset_oracle(n):
    """Connected n-subsets of an n x n box, up to translation"""
    board = [(x, y) for x in range(n) for y in range(n)]
    shapes = set()
    for subset in combinations(board, n):
        if len(edge_components(subset)) == 1:
            shapes.add(canonicalize(subset))
    return shapes


@pytest.mark.parametrize("n, expected", list(enumerate(FIXED_COUNTS, 1)))
def test_fixed_counts(n, expected):
    assert count_polyominoes(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matches_subset_oracle(n):
    found = {P.anchors() for P in enumerate_polyominoes(n)}
    assert found == subset_oracle(n)


def test_canonical_position():
    for P in enumerate_polyominoes(5):
        assert min(x for x, _ in P.anchors()) == 0
        assert min(y for _, y in P.anchors()) == 0


def test_canonicalize():
    assert canonicalize([(3, 4), (4, 4)]) == frozenset({(0, 0), (1, 0)})


def test_dominoes():
    assert [sorted(P.anchors()) for P in enumerate_polyominoes(2)] == [
        [(0, 0), (1, 0)],
        [(0, 0), (0, 1)],
    ]


def test_cap():
    with pytest.raises(CapExceededError):
        enumerate_polyominoes(11)
    with pytest.raises(CapExceededError):
        count_polyominoes(5, cap=4)
    with pytest.raises(CapExceededError):
        EnumerationConfig(6, cap=5)


def test_non_positive_size():
    with pytest.raises(InvalidArgumentError):
        enumerate_polyominoes(0)
    with pytest.raises(InvalidArgumentError):
        count_polyominoes(-2)
    with pytest.raises(InvalidArgumentError):
        EnumerationConfig(0)


def test_first_nonsimple_has_seven_cells():
    P = first_nonsimple(range(1, 9))
    assert len(P) == 7
    assert P.anchors() == frozenset({(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2)})
    assert [h.anchors() for h in holes(P)] == [frozenset({(1, 1)})]


def test_no_nonsimple_below_seven():
    assert first_nonsimple(range(1, 7)) is None


def test_first_nonsimple_checks_cap():
    with pytest.raises(CapExceededError):
        first_nonsimple([3, 12])


def test_iter_simple_only():
    config = EnumerationConfig(7, simple_only=True)
    found = list(iter_polyominoes(config))
    assert len(found) == sum(FIXED_COUNTS[:7]) - 4
    assert all(is_simple(P) for P in found)
    assert [len(P) for P in found] == sorted(len(P) for P in found)


def test_non_positive_cap():
    with pytest.raises(InvalidArgumentError):
        enumerate_polyominoes(2, cap=0)
    with pytest.raises(InvalidArgumentError):
        EnumerationConfig(2, cap=-1)
