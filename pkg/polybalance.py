#!/usr/bin/env python3
"""
PolyBalance - Polyomino ideal toolkit
Command-line interface
"""

import argparse
import logging
import sys
from typing import List, Optional

from polycore import __version__
from polycore.backend import COMMANDS, LOG_FORMAT, PolyBackend, RunOptions
from polycore.config import Config


def positive_int(text: str) -> int:
    """argparse type for counts and limits"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every command"""
    parser = argparse.ArgumentParser(
        prog="polybalance",
        description="Check simplicity, admissible labelings and balance of polyominoes.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", nargs="?", help="polyomino grid or JSON anchor document")
    parser.add_argument("--labeling", metavar="FILE", help="JSON labeling document")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--phase", type=int, choices=(1, -1), default=1)
    parser.add_argument("--max-nodes", type=positive_int, help="witness search state limit")
    parser.add_argument("--max-abs", type=positive_int, help="label bound for cross-check")
    parser.add_argument("--n", type=positive_int, help="cell count for enumerate")
    parser.add_argument("--cap", type=positive_int, help="enumeration cap")
    parser.add_argument("--simple-only", action="store_true")
    parser.add_argument("--workers", type=positive_int, default=1, help="cross-check processes")
    parser.add_argument("--echo", action="store_true", help="print the parsed grid first")
    parser.add_argument("--config", metavar="FILE", help="config file path")
    parser.add_argument("--no-log-file", action="store_true", help="skip the debug log file")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)

    if args.verbose:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler.setLevel(logging.DEBUG)
        logging.getLogger("polycore").addHandler(handler)

    backend = PolyBackend(Config(args.config), log_to_file=not args.no_log_file)
    if args.verbose:
        logging.getLogger("polycore").setLevel(logging.DEBUG)

    options = RunOptions(
        path=args.file,
        labeling=args.labeling,
        json=args.json,
        max_nodes=args.max_nodes,
        max_abs=args.max_abs,
        n=args.n,
        cap=args.cap,
        phase=args.phase,
        simple_only=args.simple_only,
        workers=args.workers,
        echo=args.echo,
    )
    result = backend.run(args.command, options)
    stream = sys.stderr if result.exit_code == 2 else sys.stdout
    if result.output:
        print(result.output, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
