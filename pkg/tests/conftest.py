import pytest

from polycore.config import Config
from polycore.grid import LatticePoint, polyomino_from_anchors
from polycore.labeling import Labeling

WITH_HOLE = [
    (1, 0), (2, 0),
    (0, 1), (1, 1), (3, 1),
    (0, 2), (1, 2), (2, 2), (3, 2), (4, 2),
    (1, 3), (2, 3), (3, 3),
]

ZIGZAG = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (0, 3), (1, 3)]

STAIRS = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 2), (0, 3), (1, 3)]

STAIRS_LABELS = {
    (1, 0): 1, (2, 0): -1,
    (0, 1): 1, (1, 1): -1, (2, 1): 0,
    (0, 2): -1, (1, 2): 3, (2, 2): 0, (3, 2): -2,
    (0, 3): -1, (1, 3): -3, (2, 3): 2, (3, 3): 2,
    (0, 4): 1, (1, 4): 0, (2, 4): -1,
}


def labels(P, values):
    return Labeling.from_sparse(P, {LatticePoint(x, y): v for (x, y), v in values.items()})


@pytest.fixture
def with_hole():
    return polyomino_from_anchors(WITH_HOLE)


@pytest.fixture
def zigzag():
    return polyomino_from_anchors(ZIGZAG)


@pytest.fixture
def stairs():
    return polyomino_from_anchors(STAIRS)


@pytest.fixture
def stairs_labeling(stairs):
    return labels(stairs, STAIRS_LABELS)


@pytest.fixture
def square():
    return polyomino_from_anchors([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def config(tmp_path, monkeypatch):
    monkeypatch.delenv("POLYOMINO_CAP", raising=False)
    cfg = Config(tmp_path / "config.json")
    cfg.set("log_dir", str(tmp_path / "logs"))
    return cfg
