"""
Text utilities for polyomino and labeling documents

Grid documents use `#` for a cell and `.` for an empty square; the first line
is the top row and the last line is y = 0. A document starting with `[` is a
JSON list of [x, y] cell anchors instead.
"""

import json
import re
from typing import Any, Dict, List, Tuple

from .errors import ParseError
from .grid import DEFAULT_COORDINATE_CAP, LatticePoint, Polyomino, polyomino_from_anchors
from .labeling import MAX_LABEL, Labeling

CELL = "#"
EMPTY = "."

_VERTEX_KEY = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")


def _parse_anchor_list(text: str) -> List[Tuple[int, int]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    if not isinstance(data, list):
        raise ParseError("JSON document must be a list of [x, y] anchors")
    anchors = []
    for item in data:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise ParseError(f"bad anchor {item!r}")
        if item[0] < 0 or item[1] < 0:
            raise ParseError(f"negative anchor {item!r}")
        anchors.append((item[0], item[1]))
    return anchors


def _parse_grid(text: str) -> List[Tuple[int, int]]:
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    anchors = []
    height = len(lines)
    for row, line in enumerate(lines):
        y = height - 1 - row
        for x, char in enumerate(line):
            if char == CELL:
                anchors.append((x, y))
            elif char != EMPTY:
                raise ParseError(f"unexpected character {char!r} at line {row + 1}")
    return anchors


def parse_polyomino(text: str, coordinate_cap: int = DEFAULT_COORDINATE_CAP) -> Polyomino:
    """Parse a grid or JSON anchor document into a validated polyomino"""
    if text.lstrip().startswith("["):
        anchors = _parse_anchor_list(text)
    else:
        anchors = _parse_grid(text)
    return polyomino_from_anchors(anchors, coordinate_cap=coordinate_cap)


def render_grid(P: Polyomino) -> str:
    """Grid document with the origin at the bottom-left"""
    box = P.bounds()
    rows = []
    for y in range(box.hi.y - 1, -1, -1):
        rows.append("".join(CELL if P.has_cell(x, y) else EMPTY for x in range(box.hi.x)))
    return "\n".join(rows) + "\n"


def anchors_document(P: Polyomino) -> List[List[int]]:
    return [list(cell.as_tuple()) for cell in P]


def vertex_key(point: LatticePoint) -> str:
    return f"{point.x},{point.y}"


def parse_labeling(text: str, P: Polyomino) -> Labeling:
    """Labeling file: JSON object "x,y" -> integer, absent vertices are 0"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    if not isinstance(data, dict):
        raise ParseError("labeling document must be a JSON object")
    values: Dict[LatticePoint, int] = {}
    for key, value in data.items():
        match = _VERTEX_KEY.match(key)
        if not match:
            raise ParseError(f"bad vertex key {key!r}")
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParseError(f"label for {key!r} is not an integer")
        if abs(value) > MAX_LABEL:
            raise ParseError(f"label for {key!r} does not fit in int64")
        values[LatticePoint(int(match.group(1)), int(match.group(2)))] = value
    return Labeling.from_sparse(P, values)


def labeling_document(alpha: Labeling) -> Dict[str, int]:
    return {vertex_key(p): v for p, v in alpha.sparse().items()}


def render_labeling(alpha: Labeling) -> str:
    return dumps(labeling_document(alpha))


def dumps(payload: Any) -> str:
    """Stable JSON rendering used for every machine-readable output"""
    return json.dumps(payload, sort_keys=True, indent=2)
