"""
Command backend for the polybalance CLI
"""

import logging
import logging.handlers
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from .config import Config
from .enumeration import enumerate_polyominoes
from .errors import ParseError, PolyominoError, SearchCappedError
from .grid import Polyomino, inner_intervals, is_rectangular
from .ideal import (
    SearchStatus,
    cross_check_balanced,
    inner_minor_generators,
    is_balanced_certified,
    search_witness,
)
from .labeling import border_labeling, interval_sums
from .text_utils import (
    anchors_document,
    dumps,
    labeling_document,
    parse_labeling,
    parse_polyomino,
    render_grid,
    render_labeling,
    vertex_key,
)
from .topology import border_polygon, classify_corners, holes, is_simple

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_CAPPED = 3

COMMANDS = (
    "validate",
    "simple",
    "holes",
    "border",
    "corners",
    "labeling-check",
    "border-labeling",
    "generators",
    "balanced",
    "decompose",
    "cross-check",
    "enumerate",
)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@dataclass
class RunOptions:
    """Flags shared by every command"""

    path: Optional[str] = None
    labeling: Optional[str] = None
    json: bool = False
    max_nodes: Optional[int] = None
    max_abs: Optional[int] = None
    n: Optional[int] = None
    cap: Optional[int] = None
    phase: int = 1
    simple_only: bool = False
    workers: int = 1
    echo: bool = False


@dataclass
class CommandResult:
    exit_code: int
    output: str


def _point(p) -> List[int]:
    return [p.x, p.y]


def _cells(P: Polyomino) -> str:
    return " ".join(str(c) for c in P)


class PolyBackend:
    """Runs CLI commands against the polycore library"""

    def __init__(self, config: Optional[Config] = None, log_to_file: bool = True):
        self._config = config or Config()
        self._logger = self._setup_logging(log_to_file)
        self._last_error = ""
        self._handlers: Dict[str, Callable[[RunOptions], Tuple[int, str, Any]]] = {
            "validate": self._validate,
            "simple": self._simple,
            "holes": self._holes,
            "border": self._border,
            "corners": self._corners,
            "labeling-check": self._labeling_check,
            "border-labeling": self._border_labeling,
            "generators": self._generators,
            "balanced": self._balanced,
            "decompose": self._decompose,
            "cross-check": self._cross_check,
            "enumerate": self._enumerate,
        }

    def _setup_logging(self, log_to_file: bool) -> logging.Logger:
        """Setup package logging with a rotating debug file"""
        logger = logging.getLogger("polycore")
        logger.setLevel(self._config.get("log_level", "INFO"))
        if not log_to_file:
            return logger
        log_dir = Path(self._config.get("log_dir")).expanduser()
        log_file = log_dir / "debug.log"
        for handler in logger.handlers:
            if getattr(handler, "baseFilename", None) == str(log_file.resolve()):
                return logger
        try:
            log_dir.mkdir(parents=True, exist_ok=True)
            handler = logging.handlers.RotatingFileHandler(
                log_file, maxBytes=10 * 1024 * 1024, backupCount=1
            )
        except OSError as e:
            logger.warning(f"File logging disabled: {e}")
            return logger
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
        return logger

    def get_last_error(self) -> str:
        """Get last error message"""
        return self._last_error

    def run(self, command: str, options: RunOptions) -> CommandResult:
        """Run one command and render its output"""
        handler = self._handlers.get(command)
        if handler is None:
            self._last_error = f"unknown command {command!r}"
            return CommandResult(EXIT_INPUT_ERROR, self._last_error)
        self._logger.info(f"Running {command} on {options.path or '-'}")
        try:
            code, text, payload = handler(options)
        except SearchCappedError as e:
            self._last_error = str(e)
            self._logger.warning(self._last_error)
            explored = e.result.explored if e.result is not None else None
            payload = {"status": SearchStatus.CAPPED.value, "explored": explored}
            return CommandResult(
                EXIT_CAPPED, dumps(payload) if options.json else "INCONCLUSIVE (capped)"
            )
        except (PolyominoError, OSError) as e:
            self._last_error = f"{type(e).__name__}: {e}"
            self._logger.error(self._last_error)
            if options.json:
                return CommandResult(EXIT_INPUT_ERROR, dumps({"error": self._last_error}))
            return CommandResult(EXIT_INPUT_ERROR, f"error: {self._last_error}")
        output = dumps(payload) if options.json else text
        if options.echo and options.path and not options.json:
            output = render_grid(self._load(options)) + "\n" + output
        return CommandResult(code, output)

    def _setting(self, value: Optional[int], key: str) -> int:
        """Flag value when given, config value otherwise"""
        return value if value is not None else int(self._config.get(key))

    def _max_nodes(self, options: RunOptions) -> int:
        return self._setting(options.max_nodes, "max_nodes")

    @staticmethod
    def _read(path: str) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"{path} is not valid UTF-8 text") from e

    def _load(self, options: RunOptions) -> Polyomino:
        if not options.path:
            raise ParseError("this command needs a polyomino file")
        text = self._read(options.path)
        P = parse_polyomino(text, coordinate_cap=int(self._config.get("coordinate_cap")))
        self._logger.debug(f"Parsed {options.path}: {len(P)} cells, {len(P.vertices)} vertices")
        return P

    def _load_labeling(self, options: RunOptions, P: Polyomino):
        if not options.labeling:
            raise ParseError("this command needs --labeling FILE")
        return parse_labeling(self._read(options.labeling), P)

    def _validate(self, options: RunOptions):
        P = self._load(options)
        box = P.bounds()
        payload = {
            "valid": True,
            "cells": len(P),
            "vertices": len(P.vertices),
            "bounds": [_point(box.lo), _point(box.hi)],
            "rectangular": is_rectangular(P),
        }
        text = f"valid polyomino: {len(P)} cells, {len(P.vertices)} vertices, bounds {box}"
        if payload["rectangular"]:
            text += ", rectangular"
        return EXIT_OK, text, payload

    def _simple(self, options: RunOptions):
        simple = is_simple(self._load(options))
        return (EXIT_OK if simple else EXIT_FALSE), str(simple).lower(), {"simple": simple}

    def _holes(self, options: RunOptions):
        found = holes(self._load(options))
        lines = [f"hole {k}: {_cells(H)}" for k, H in enumerate(found, 1)]
        payload = {"holes": [anchors_document(H) for H in found]}
        return EXIT_OK, "\n".join(lines) or "no holes", payload

    def _border(self, options: RunOptions):
        R = border_polygon(self._load(options))
        return (
            EXIT_OK,
            " ".join(str(c) for c in R.corners),
            {"corners": [_point(c) for c in R.corners]},
        )

    def _corners(self, options: RunOptions):
        infos = classify_corners(border_polygon(self._load(options)))
        lines = [f"{'corner':<10} {'kind':<8} good"]
        lines += [
            f"{str(i.point):<10} {i.kind.value:<8} {'yes' if i.good else 'no'}" for i in infos
        ]
        convex = sum(1 for i in infos if i.kind.value == "convex")
        good = sum(1 for i in infos if i.good)
        lines.append(f"convex {convex}, concave {len(infos) - convex}, good {good}")
        payload = {
            "corners": [
                {"point": _point(i.point), "kind": i.kind.value, "good": i.good} for i in infos
            ],
            "convex": convex,
            "concave": len(infos) - convex,
            "good": good,
        }
        return EXIT_OK, "\n".join(lines), payload

    def _labeling_check(self, options: RunOptions):
        P = self._load(options)
        alpha = self._load_labeling(options, P)
        failing = [(e, total) for e, total in interval_sums(P, alpha) if total]
        admissible = not failing
        lines = ["admissible" if admissible else "not admissible"]
        lines += [f"  {e.orientation.value} {e}: sum {total}" for e, total in failing]
        payload = {
            "admissible": admissible,
            "failing": [
                {"interval": [_point(e.interval.lo), _point(e.interval.hi)], "sum": total}
                for e, total in failing
            ],
        }
        return (EXIT_OK if admissible else EXIT_FALSE), "\n".join(lines), payload

    def _border_labeling(self, options: RunOptions):
        alpha = border_labeling(self._load(options), options.phase)
        return EXIT_OK, render_labeling(alpha), labeling_document(alpha)

    def _generators(self, options: RunOptions):
        P = self._load(options)
        entries = []
        lines = []
        for interval, g in zip(inner_intervals(P), inner_minor_generators(P)):
            plus = [[i, j, e] for (i, j), e in g.plus.as_dict().items()]
            minus = [[i, j, e] for (i, j), e in g.minus.as_dict().items()]
            entries.append(
                {
                    "interval": [_point(interval.lo), _point(interval.hi)],
                    "plus": plus,
                    "minus": minus,
                }
            )
            lines.append(f"{interval}: +{plus} -{minus}")
        return EXIT_OK, "\n".join(lines), {"generators": entries}

    def _balanced(self, options: RunOptions):
        cert = is_balanced_certified(self._load(options), self._max_nodes(options))
        payload: Dict[str, Any] = {"balanced": cert.balanced}
        lines = [str(cert.balanced).lower()]
        if cert.labeling is not None:
            payload["certificate"] = {
                "labeling": labeling_document(cert.labeling),
                "status": cert.search.status.value,
                "explored": cert.search.explored,
            }
            lines.append(f"certificate: {render_labeling(cert.labeling)}")
            lines.append(f"search: {cert.search.status.value} after {cert.search.explored} states")
        if not cert.certified:
            return EXIT_CAPPED, "\n".join(lines), payload
        return (EXIT_OK if cert.balanced else EXIT_FALSE), "\n".join(lines), payload

    def _decompose(self, options: RunOptions):
        P = self._load(options)
        alpha = self._load_labeling(options, P)
        result = search_witness(P, alpha, self._max_nodes(options))
        payload: Dict[str, Any] = {"status": result.status.value, "explored": result.explored}
        if result.status is SearchStatus.CAPPED:
            return EXIT_CAPPED, "INCONCLUSIVE (capped)", payload
        if result.status is SearchStatus.EXHAUSTED:
            return EXIT_FALSE, "NO WITNESS (exhausted)", payload
        moves = [
            {"interval": [_point(u.source.lo), _point(u.source.hi)], "sign": u.sign}
            for u in result.witness.moves
        ]
        payload["moves"] = moves
        lines = [f"{'+' if u.sign > 0 else '-'}u {u.source}" for u in result.witness.moves]
        lines.append(f"{len(moves)} move(s)")
        return EXIT_OK, "\n".join(lines), payload

    def _cross_check(self, options: RunOptions):
        P = self._load(options)
        max_abs = self._setting(options.max_abs, "max_abs")
        report = cross_check_balanced(P, max_abs, self._max_nodes(options), options.workers)
        lines = []
        outcomes = []
        for o in report.outcomes:
            labels = " ".join(f"{vertex_key(p)}={v}" for p, v in o.labeling.sparse().items())
            detail = f" ({o.witness_length} moves)" if o.witness_length is not None else ""
            lines.append(f"{labels}: {o.status.value}{detail}")
            outcomes.append(
                {
                    "labeling": labeling_document(o.labeling),
                    "status": o.status.value,
                    "witness_length": o.witness_length,
                }
            )
        lines.append(f"simple: {str(report.simple).lower()}, agrees: {str(report.agrees).lower()}")
        payload = {
            "simple": report.simple,
            "agrees": report.agrees,
            "inconclusive": report.inconclusive,
            "outcomes": outcomes,
        }
        if report.inconclusive:
            return EXIT_CAPPED, "\n".join(lines), payload
        return (EXIT_OK if report.agrees else EXIT_FALSE), "\n".join(lines), payload

    def _enumerate(self, options: RunOptions):
        if options.n is None:
            raise ParseError("enumerate needs --n N")
        cap = options.cap if options.cap is not None else self._config.enumeration_cap
        found = enumerate_polyominoes(options.n, cap)
        if options.simple_only:
            found = [P for P in found if is_simple(P)]
        self._logger.info(f"Enumerated {len(found)} polyominoes with {options.n} cells")
        text = "\n".join(render_grid(P) for P in found).rstrip("\n")
        return EXIT_OK, text, {"n": options.n, "polyominoes": [anchors_document(P) for P in found]}
