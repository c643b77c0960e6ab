import json
import logging
from pathlib import Path

import pytest

import polybalance
from polycore.backend import PolyBackend, RunOptions
from polycore.grid import Interval
from polycore.ideal import MoveVector, Witness, verify_witness
from polycore.labeling import border_labeling, hole_witness_labeling
from polycore.text_utils import anchors_document, dumps, labeling_document, render_grid


@pytest.fixture
def files(tmp_path, with_hole, zigzag, stairs):
    paths = {}
    for name, P in (("hole", with_hole), ("zigzag", zigzag), ("stairs", stairs)):
        path = tmp_path / f"{name}.txt"
        path.write_text(render_grid(P))
        paths[name] = str(path)
    paths["zigzag_json"] = str(tmp_path / "zigzag.json")
    (tmp_path / "zigzag.json").write_text(json.dumps(anchors_document(zigzag)))
    border = tmp_path / "border.json"
    border.write_text(dumps(labeling_document(border_labeling(zigzag))))
    paths["border"] = str(border)
    hole_labels = tmp_path / "hole_labels.json"
    hole_labels.write_text(dumps(labeling_document(hole_witness_labeling(with_hole))))
    paths["hole_labels"] = str(hole_labels)
    bad = tmp_path / "bad.json"
    bad.write_text('{"1,0": 1}')
    paths["bad_labels"] = str(bad)
    return paths


@pytest.fixture
def run(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("POLYOMINO_CAP", raising=False)

    def invoke(*argv):
        code = polybalance.main(
            list(argv) + ["--no-log-file", "--config", str(tmp_path / "config.json")]
        )
        captured = capsys.readouterr()
        return code, captured.out + captured.err

    return invoke


class TestBooleanQueries:
    def test_hole_is_not_simple(self, run, files):
        code, out = run("simple", files["hole"])
        assert (code, out.strip()) == (1, "false")

    def test_zigzag_is_simple(self, run, files):
        code, out = run("simple", files["zigzag_json"])
        assert (code, out.strip()) == (0, "true")

    def test_holes(self, run, files):
        code, out = run("holes", files["hole"], "--json")
        assert code == 0
        assert json.loads(out) == {"holes": [[[2, 1]]]}

    def test_balanced(self, run, files):
        assert run("balanced", files["zigzag"])[0] == 0
        code, out = run("balanced", files["hole"], "--json")
        assert code == 1
        payload = json.loads(out)
        assert payload["balanced"] is False
        assert payload["certificate"]["status"] == "exhausted"

    def test_labeling_check(self, run, files):
        assert run("labeling-check", files["zigzag"], "--labeling", files["border"])[0] == 0
        code, out = run("labeling-check", files["zigzag"], "--labeling", files["bad_labels"])
        assert code == 1
        assert out.startswith("not admissible")


class TestGeometry:
    def test_validate(self, run, files):
        code, out = run("validate", files["stairs"], "--json")
        assert code == 0
        assert json.loads(out) == {
            "valid": True,
            "cells": 7,
            "vertices": 16,
            "bounds": [[0, 0], [3, 4]],
            "rectangular": False,
        }

    def test_validate_rectangle(self, run, tmp_path):
        path = tmp_path / "box.txt"
        path.write_text("###\n###\n")
        code, out = run("validate", str(path))
        assert code == 0
        assert out.strip().endswith(", rectangular")

    def test_border(self, run, files):
        code, out = run("border", files["stairs"], "--json")
        assert code == 0
        assert len(json.loads(out)["corners"]) == 14

    def test_corners(self, run, files):
        code, out = run("corners", files["stairs"], "--json")
        payload = json.loads(out)
        assert (code, payload["convex"], payload["concave"]) == (0, 9, 5)
        assert payload["good"] >= 4

    def test_border_of_holed_polyomino(self, run, files):
        code, out = run("border", files["hole"])
        assert code == 2
        assert "NotSimpleError" in out

    def test_border_labeling(self, run, files):
        code, out = run("border-labeling", files["stairs"], "--phase", "-1")
        assert code == 0
        assert json.loads(out)["1,0"] == -1

    def test_generators(self, run, files):
        code, out = run("generators", files["zigzag"], "--json")
        assert code == 0
        generators = json.loads(out)["generators"]
        assert all(len(g["plus"]) == 2 and len(g["minus"]) == 2 for g in generators)

    def test_echo(self, run, files):
        code, out = run("simple", files["hole"], "--echo")
        assert out.startswith(".###.\n")


class TestDecompose:
    def test_witness_verifies(self, run, files, zigzag):
        code, out = run("decompose", files["zigzag"], "--labeling", files["border"], "--json")
        assert code == 0
        payload = json.loads(out)
        frame = zigzag.frame()
        moves = tuple(
            MoveVector(Interval.of(*m["interval"][0], *m["interval"][1]), m["sign"], frame)
            for m in payload["moves"]
        )
        assert verify_witness(zigzag, border_labeling(zigzag), Witness(moves))

    def test_exhausted(self, run, files):
        code, out = run("decompose", files["hole"], "--labeling", files["hole_labels"])
        assert (code, out.strip()) == (1, "NO WITNESS (exhausted)")

    def test_capped(self, run, files):
        code, out = run(
            "decompose", files["zigzag"], "--labeling", files["border"], "--max-nodes", "1"
        )
        assert (code, out.strip()) == (3, "INCONCLUSIVE (capped)")

    def test_missing_labeling(self, run, files):
        assert run("decompose", files["zigzag"])[0] == 2


class TestCrossCheck:
    def test_domino(self, run, tmp_path):
        path = tmp_path / "domino.txt"
        path.write_text("##\n")
        code, out = run("cross-check", str(path), "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["simple"] and payload["agrees"]
        assert len(payload["outcomes"]) == 6


class TestEnumerate:
    def test_two_dominoes(self, run):
        code, out = run("enumerate", "--n", "2", "--json")
        assert code == 0
        assert json.loads(out)["polyominoes"] == [[[0, 0], [1, 0]], [[0, 0], [0, 1]]]

    def test_text_output(self, run):
        code, out = run("enumerate", "--n", "2")
        assert out == "##\n\n#\n#\n"

    def test_cap_from_environment(self, run, monkeypatch):
        monkeypatch.setenv("POLYOMINO_CAP", "3")
        assert run("enumerate", "--n", "4")[0] == 2
        assert run("enumerate", "--n", "4", "--cap", "4")[0] == 0

    def test_missing_size(self, run):
        assert run("enumerate")[0] == 2

    def test_simple_only_at_seven(self, run):
        code, out = run("enumerate", "--n", "7", "--simple-only", "--json")
        assert code == 0
        assert len(json.loads(out)["polyominoes"]) == 760 - 4

    def test_only_requested_size(self, run):
        code, out = run("enumerate", "--n", "3", "--json")
        assert code == 0
        assert {len(cells) for cells in json.loads(out)["polyominoes"]} == {3}


class TestErrors:
    def test_unknown_command(self, run):
        with pytest.raises(SystemExit) as info:
            run("frobnicate")
        assert info.value.code == 2

    def test_missing_file(self, run, tmp_path):
        code, out = run("simple", str(tmp_path / "nope.txt"))
        assert code == 2
        assert out.startswith("error:")

    def test_json_error(self, run, tmp_path):
        path = tmp_path / "broken.txt"
        path.write_text("#?\n")
        code, out = run("validate", str(path), "--json")
        assert code == 2
        assert "ParseError" in json.loads(out)["error"]

    def test_polyomino_file_not_utf8(self, run, tmp_path):
        path = tmp_path / "binary.txt"
        path.write_bytes(b"#\xff#\n")
        code, out = run("simple", str(path))
        assert code == 2
        assert "ParseError" in out

    def test_labeling_file_not_utf8(self, run, files, tmp_path):
        path = tmp_path / "binary.json"
        path.write_bytes(b"\xfe\xff{}")
        code, out = run("decompose", files["zigzag"], "--labeling", str(path))
        assert code == 2
        assert "ParseError" in out

    def test_label_too_large(self, run, files, tmp_path):
        path = tmp_path / "huge.json"
        path.write_text(json.dumps({"1,0": 10**30, "2,0": -(10**30)}))
        code, out = run("decompose", files["zigzag"], "--labeling", str(path))
        assert code == 2
        assert "ParseError" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ("cross-check", "--max-abs", "-1"),
            ("cross-check", "--max-abs", "0"),
            ("cross-check", "--workers", "0"),
            ("decompose", "--max-nodes", "0"),
            ("enumerate", "--n", "-2"),
            ("enumerate", "--n", "2", "--cap", "0"),
            ("enumerate", "--n", "two"),
        ],
    )
    def test_out_of_range_flags(self, run, files, argv):
        with pytest.raises(SystemExit) as info:
            run(argv[0], files["zigzag"], *argv[1:])
        assert info.value.code == 2

    def test_json_output_is_byte_stable(self, run, files):
        first = run("corners", files["stairs"], "--json")
        second = run("corners", files["stairs"], "--json")
        assert first == second
        assert run("holes", files["hole"], "--json") == run("holes", files["hole"], "--json")


class TestBackend:
    def test_writes_debug_log(self, config, files):
        backend = PolyBackend(config)
        try:
            result = backend.run("simple", RunOptions(path=files["zigzag"]))
            assert result.exit_code == 0
            for handler in logging.getLogger("polycore").handlers:
                handler.flush()
            log = Path(config.get("log_dir"))
            assert "Running simple" in (log / "debug.log").read_text()
        finally:
            for handler in list(logging.getLogger("polycore").handlers):
                logging.getLogger("polycore").removeHandler(handler)
                handler.close()

    def test_last_error(self, config):
        backend = PolyBackend(config, log_to_file=False)
        result = backend.run("validate", RunOptions())
        assert result.exit_code == 2
        assert "ParseError" in backend.get_last_error()

    def test_unknown_command(self, config):
        backend = PolyBackend(config, log_to_file=False)
        assert backend.run("nope", RunOptions()).exit_code == 2

    @pytest.mark.parametrize(
        "command, options",
        [
            ("cross-check", RunOptions(max_abs=0)),
            ("enumerate", RunOptions(n=-2)),
            ("enumerate", RunOptions(n=0)),
            ("enumerate", RunOptions(n=2, cap=0)),
        ],
    )
    def test_out_of_range_options(self, config, files, command, options):
        backend = PolyBackend(config, log_to_file=False)
        if command != "enumerate":
            options.path = files["zigzag"]
        result = backend.run(command, options)
        assert result.exit_code == 2
        assert "InvalidArgumentError" in backend.get_last_error()

    def test_zero_node_limit_is_not_replaced_by_default(self, config, files):
        backend = PolyBackend(config, log_to_file=False)
        options = RunOptions(path=files["zigzag"], labeling=files["border"], max_nodes=0)
        assert backend.run("decompose", options).exit_code == 2
        assert "InvalidArgumentError" in backend.get_last_error()
