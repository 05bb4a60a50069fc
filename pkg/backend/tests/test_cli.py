"""
Tests for the command-line entry point and its exit codes.
"""

import json
import re

import pytest

from src.cli import EXIT_CENSORED, EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from src.formats import load_suite_result, read_map, read_report, read_walk, write_map, write_walk


@pytest.fixture
def triangle_path(tmp_path, map_factory):
    path = tmp_path / "triangle.json"
    write_map(path, map_factory("ca"))
    return path


class TestKmswCommands:
    def test_build_then_invert(self, tmp_path, walk_factory):
        walk = walk_factory("ca")
        walk_path = tmp_path / "walk.txt"
        map_path = tmp_path / "map.json"
        back_path = tmp_path / "back.txt"
        write_walk(walk_path, walk)

        assert main(["kmsw", "build", "--in", str(walk_path), "--out", str(map_path)]) == EXIT_OK
        assert read_map(map_path).oriented_edge_count == walk.length + 1

        assert main(["kmsw", "invert", "--in", str(map_path), "--out", str(back_path)]) == EXIT_OK
        assert read_walk(back_path) == walk

    def test_invert_rejects_missing_edges(self, tmp_path, map_factory):
        path = tmp_path / "b.json"
        write_map(path, map_factory("b"))
        assert main(["kmsw", "invert", "--in", str(path), "--out", str(tmp_path / "w")]) == EXIT_USAGE

    def test_malformed_map(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["kmsw", "invert", "--in", str(path), "--out", str(tmp_path / "w")]) == EXIT_USAGE

    def test_malformed_walk(self, tmp_path):
        path = tmp_path / "walk.txt"
        path.write_text("start 0 0\nabz\n")
        assert main(["kmsw", "build", "--in", str(path), "--out", str(tmp_path / "m")]) == EXIT_USAGE


class TestDistanceCommand:
    def test_all_targets(self, triangle_path, capsys):
        code = main(["distance", "--map", str(triangle_path), "--mode", "LDP", "--src", "0"])
        assert code == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "src,dst,mode,value",
            "0,0,ldp,0",
            "0,1,ldp,2",
            "0,2,ldp,1",
        ]

    def test_unreachable(self, triangle_path, capsys):
        argv = ["distance", "--map", str(triangle_path), "--mode", "sdp", "--src", "1", "--dst", "0"]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[-1] == "1,0,sdp,UNREACHABLE"

    def test_csv_file(self, tmp_path, triangle_path):
        out = tmp_path / "d.csv"
        argv = ["distance", "--map", str(triangle_path), "--mode", "sdp", "--src", "0", "--out", str(out)]
        assert main(argv) == EXIT_OK
        assert out.read_text().splitlines()[2] == "0,1,sdp,1"

    def test_unknown_vertex(self, triangle_path):
        argv = ["distance", "--map", str(triangle_path), "--mode", "ldp", "--src", "7"]
        assert main(argv) == EXIT_USAGE


class TestSampleCommand:
    def test_cell(self, tmp_path):
        out = tmp_path / "cell.json"
        assert main(["sample", "--model", "cell", "--size", "30", "--seed", "1", "--out", str(out)]) == EXIT_OK
        assert read_map(out).oriented_edge_count == 31

    def test_marked_boltzmann(self, tmp_path, capsys):
        out = tmp_path / "boltzmann.json"
        argv = ["sample", "--model", "boltzmann-marked", "--size", "3", "--seed", "2", "--out", str(out)]
        assert main(argv) == EXIT_OK
        assert "marked vertex" in capsys.readouterr().out

    def test_same_seed_same_file(self, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for path in paths:
            main(["sample", "--model", "uiqbot", "--size", "50", "--seed", "9", "--out", str(path)])
        assert paths[0].read_text() == paths[1].read_text()


class TestVerifyAndExperiment:
    def test_verify_ruin(self, tmp_path):
        out = tmp_path / "ruin.json"
        assert main(["verify", "--suite", "ruin", "--out", str(out)]) == EXIT_OK
        result = load_suite_result(out.read_text())
        assert result.suite == "ruin"
        assert result.passed

    def test_verify_prints_json(self, capsys):
        assert main(["verify", "--suite", "ruin"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["suite"] == "ruin"

    def test_calibration_report(self, tmp_path):
        out = tmp_path / "calibrate.json"
        argv = ["experiment", "--name", "calibrate", "--samples", "4000", "--seed", "1", "--out", str(out)]
        code = main(argv)
        report = read_report(out)
        assert code == (EXIT_OK if report.passed else EXIT_FAILED)
        assert report.master_seed == 1
        assert report.parameters["samples"] == 4000

    @pytest.mark.slow
    def test_kappa_reports_repeat(self, tmp_path):
        paths = [tmp_path / "first.json", tmp_path / "second.json"]
        codes = []
        for path in paths:
            argv = [
                "experiment", "--name", "kappa", "--samples", "12", "--seed", "1",
                "--initial-window", "500", "--max-window", "4000", "--probes", "3",
                "--censoring-threshold", "1", "--out", str(path),
            ]
            codes.append(main(argv))
        assert codes[0] == codes[1]
        assert codes[0] in (EXIT_OK, EXIT_FAILED)
        first, second = (
            re.sub(r'"wall_clock_seconds":\s*[^,\n}]*', "", path.read_text()) for path in paths
        )
        assert first == second
        assert read_report(paths[0]).name == "kappa"

    def test_mode_not_offered(self):
        argv = ["experiment", "--name", "kappa", "--mode", "ldp", "--samples", "4", "--seed", "1"]
        assert main(argv) == EXIT_USAGE

    def test_censoring_exit_code(self, tmp_path):
        argv = [
            "experiment", "--name", "recursive", "--mode", "ldp", "--samples", "5", "--seed", "1",
            "--initial-window", "4", "--max-window", "4", "--probes", "2",
            "--censoring-threshold", "0", "--out", str(tmp_path / "r.json"),
        ]
        assert main(argv) == EXIT_CENSORED


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["nonsense"],
            ["verify"],
            ["verify", "--suite", "nope"],
            ["sample", "--model", "cell", "--size", "5"],
            ["experiment", "--name", "unknown", "--seed", "1"],
        ],
    )
    def test_exit_one(self, argv):
        assert main(argv) == EXIT_USAGE
