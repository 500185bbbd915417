#!/usr/bin/env python3
"""Tests for the run_wllab command-line entry point."""

import json
import sys
from pathlib import Path
from unittest.mock import patch

import pytest

# Add the scripts directory to the path
sys.path.insert(0, str(Path(__file__).parent.parent / "scripts"))

from run_wllab import main  # noqa: E402
from wllab.core.config import Limits, configure_limits  # noqa: E402
from wllab.graph_core import FeaturedGraph  # noqa: E402
from wllab.graph_io import dump_graph, load_graph  # noqa: E402
from wllab.synth import cycle_graph, fixture  # noqa: E402


@pytest.fixture(autouse=True)
def reset_limits():
    yield
    configure_limits(Limits())


@pytest.fixture
def fixture_files(tmp_path):
    """Write every fixture pair and return ``{name: (path_a, path_b)}``."""
    files = {}
    for name in ("fig1_pair", "fig3_pair", "fig4_pair"):
        a, b = fixture(name).graphs
        files[name] = (
            dump_graph(a, tmp_path / f"{name}_0.json"),
            dump_graph(b, tmp_path / f"{name}_1.json"),
        )
    return files


def run(capsys, command, *paths):
    argv = command.split() + [str(p) for p in paths]
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestFixturesCommand:
    """Test cases for the fixtures subcommand."""

    def test_list(self, capsys):
        """Test --list prints the fixture names."""
        code, out = run(capsys, "fixtures --list")
        assert code == 0
        assert json.loads(out) == ["fig1_pair", "fig3_pair", "fig4_pair"]

    def test_write(self, capsys, tmp_path):
        """Test both graphs of a pair are written and load back."""
        code, out = run(capsys, "fixtures --name fig4_pair --out", tmp_path)
        assert code == 0
        payload = json.loads(out)
        assert len(payload["files"]) == 2
        assert load_graph(tmp_path / "fig4_pair_0.json").n == 6

    def test_unknown(self, capsys, tmp_path):
        """Test an unknown fixture exits with the input code."""
        code, _ = run(capsys, "fixtures --name fig7_pair --out", tmp_path)
        assert code == 2

    def test_name_required(self, capsys):
        """Test --name is needed without --list."""
        code, _ = run(capsys, "fixtures")
        assert code == 2


class TestWlCommand:
    """Test cases for the wl subcommand."""

    def test_single_graph(self, capsys, fixture_files):
        """Test one graph prints its refinement history."""
        code, out = run(
            capsys, "wl --variant classic --graphs", fixture_files["fig1_pair"][0]
        )
        assert code == 0
        assert json.loads(out)["variant"] == "classic"

    def test_indistinguishable_pair(self, capsys, fixture_files):
        """Test classic WL cannot separate the fig1 pair."""
        a, b = fixture_files["fig1_pair"]
        code, out = run(capsys, "wl --variant classic --graphs", a, b)
        assert code == 0
        assert json.loads(out)["verdict"] == "indistinguishable"

    def test_distinguishable_pair(self, capsys, fixture_files):
        """Test 2-hop subgraph WL separates the fig1 pair."""
        a, b = fixture_files["fig1_pair"]
        code, out = run(capsys, "wl --variant subgraph --k 2 --graphs", a, b)
        assert code == 1
        assert json.loads(out)["verdict"] == "distinguishable"

    def test_khop_fig4(self, capsys, fixture_files):
        """Test k-hop WL cannot separate K3,3 from the prism."""
        a, b = fixture_files["fig4_pair"]
        code, _ = run(capsys, "wl --variant khop --k 3 --graphs", a, b)
        assert code == 0

    def test_missing_file(self, capsys, tmp_path):
        """Test unreadable inputs exit with the input code."""
        missing = str(tmp_path / "absent.json")
        code, _ = run(capsys, "wl --variant classic --graphs", missing)
        assert code == 2

    def test_bad_k(self, capsys, fixture_files):
        """Test k = 0 is an input error."""
        a, _ = fixture_files["fig4_pair"]
        code, _ = run(capsys, "wl --variant khop --k 0 --graphs", a)
        assert code == 2

    def test_three_graphs(self, capsys, fixture_files):
        """Test more than two graphs is an input error, not a crash."""
        a, _ = fixture_files["fig1_pair"]
        code, out = run(capsys, "wl --variant classic --graphs", a, a, a)
        assert code == 2
        assert out == ""


class TestCheckCommand:
    """Test cases for the check subcommand."""

    def test_cycles(self, capsys, fixture_files):
        """Test the fig3 right graph has circumference 6."""
        code, out = run(
            capsys, "check --what cycles --graph", fixture_files["fig3_pair"][1]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["circumference"] == 6
        assert len(payload["witness_cycle"]) == 6

    def test_cycle_bound(self, capsys, fixture_files):
        """Test a bound below the longest cycle is reported as violated."""
        path = str(fixture_files["fig4_pair"][0])
        code, out = run(capsys, "check --what cycles --bound 5 --graph", path)
        assert code == 0
        assert json.loads(out)["satisfied"] is False

    def test_separable(self, capsys, fixture_files):
        """Test the fig3 graphs are 3-separable."""
        path = str(fixture_files["fig3_pair"][0])
        code, out = run(capsys, "check --what k-separable --k 3 --graph", path)
        assert code == 0
        assert json.loads(out)["separable"] is True

    def test_strongly_separable(self, capsys, fixture_files):
        """Test K3,3 is not 1-strongly separable."""
        path = str(fixture_files["fig4_pair"][0])
        code, out = run(capsys, "check --what k-strongly-separable --graph", path)
        assert code == 0
        payload = json.loads(out)
        assert payload["separable"] is False
        assert len(payload["witness"]) == 2

    def test_connected(self, capsys, fixture_files):
        """Test the two squares are disconnected."""
        path = str(fixture_files["fig1_pair"][0])
        code, out = run(capsys, "check --what connected --graph", path)
        assert code == 0
        assert json.loads(out)["connected"] is False

    def test_capacity(self, capsys, tmp_path):
        """Test a 25-cycle exceeds the exact circumference limit."""
        path = dump_graph(cycle_graph(25), tmp_path / "c25.json")
        code, _ = run(capsys, "check --what cycles --graph", path)
        assert code == 3

    def test_config_limits(self, capsys, tmp_path):
        """Test the limits block of --config applies outside verify."""
        config = tmp_path / "tight.yaml"
        config.write_text(
            "limits:\n  circumference_max_vertices: 4\n", encoding="utf-8"
        )
        path = dump_graph(cycle_graph(5), tmp_path / "c5.json")
        code, _ = run(capsys, "check --what cycles --graph", path)
        assert code == 0
        code, _ = run(
            capsys, "--config", config, "check", "--what", "cycles", "--graph", path
        )
        assert code == 3


class TestVerifyCommand:
    """Test cases for the verify subcommand."""

    def test_fixtures(self, capsys):
        """Test the fixture claims pass."""
        code, out = run(capsys, "verify --theorem fixtures")
        assert code == 0
        assert json.loads(out)["result"]["status"] == "PASS"

    def test_small_theorem(self, capsys):
        """Test a small 1-hop run passes."""
        code, out = run(capsys, "verify --theorem t32 --n-max 4 --soundness-trials 1")
        assert code == 0
        result = json.loads(out)["result"]
        assert result["parameters"]["n_max"] == 4

    def test_explore(self, capsys):
        """Test explore mode reports EXPLORED."""
        code, out = run(capsys, "verify --theorem t38 --k 2 --n-max 4 --explore")
        assert code == 0
        assert json.loads(out)["result"]["status"] == "EXPLORED"

    def test_invalid_k(self, capsys):
        """Test k = 1 is refused by the k-hop subgraph check."""
        code, out = run(capsys, "verify --theorem t35 --k 1 --n-max 4")
        assert code == 2
        assert json.loads(out)["error_type"] == "ValueError"

    def test_capacity(self, capsys):
        """Test pools above the limit exit with the capacity code."""
        code, _ = run(capsys, "verify --theorem t32 --n-max 9")
        assert code == 3

    def test_keyboard_interrupt(self, capsys):
        """Test a cancelled run exits with the failure code."""
        with patch("run_wllab.cmd_verify", side_effect=KeyboardInterrupt):
            code, _ = run(capsys, "verify --theorem fixtures")
        assert code == 1

    def test_missing_config_uses_defaults(self, capsys, tmp_path):
        """Test a missing config file falls back to the defaults."""
        config = str(tmp_path / "absent.yaml")
        code, _ = run(capsys, "--config", config, "verify", "--theorem", "fixtures")
        assert code == 0

    def test_all(self, capsys, tmp_path):
        """Test verify all runs every enabled check of the config."""
        config = tmp_path / "small.yaml"
        config.write_text(
            "checks:\n"
            "  t32: {n_max: 3, soundness_trials: 1}\n"
            "  t35: {enabled: false}\n"
            "  t38: {k: 1, n_max: 4}\n"
            "  lemma-c1: {k: 2, n_max: 3}\n"
            "  hierarchy: {n_max: 3, k_values: [1]}\n"
            "  fixtures: {enabled: false}\n",
            encoding="utf-8",
        )
        code, out = run(capsys, "--config", config, "verify", "--theorem", "all")
        assert code == 0
        results = json.loads(out)
        assert [r["check"] for r in results] == ["t32", "t38", "lemma-c1", "hierarchy"]
        assert all(r["result"]["status"] == "PASS" for r in results)


class TestStatsCommand:
    """Test cases for the stats subcommand."""

    def test_histogram(self, capsys, tmp_path):
        """Test cycle lengths are counted per file."""
        corpus = tmp_path / "corpus"
        dump_graph(cycle_graph(5), corpus / "c5.json")
        dump_graph(cycle_graph(3), corpus / "c3.json")
        dump_graph(cycle_graph(3), corpus / "c3b.json")
        dump_graph(FeaturedGraph.from_edges(2, [(0, 1)]), corpus / "k2.json")
        out_file = tmp_path / "stats" / "cycles.json"

        code, out = run(capsys, "stats --corpus", corpus, "--out", out_file)
        assert code == 0
        payload = json.loads(out)
        assert payload["histogram"] == {"0": 1, "3": 2, "5": 1}
        assert payload["files"] == 4
        assert json.loads(out_file.read_text(encoding="utf-8")) == payload

    def test_bad_file(self, capsys, tmp_path):
        """Test invalid files are listed and set the input code."""
        corpus = tmp_path / "corpus"
        dump_graph(cycle_graph(4), corpus / "c4.json")
        (corpus / "broken.json").write_text("{", encoding="utf-8")

        code, out = run(capsys, "stats --corpus", corpus)
        assert code == 2
        payload = json.loads(out)
        assert payload["histogram"] == {"4": 1}
        assert payload["errors"][0]["file"] == "broken.json"

    def test_capacity_file(self, capsys, tmp_path):
        """Test oversized cyclic graphs set the capacity code."""
        corpus = tmp_path / "corpus"
        dump_graph(cycle_graph(25), corpus / "c25.json")
        code, _ = run(capsys, "stats --corpus", corpus)
        assert code == 3

    def test_missing_corpus(self, capsys, tmp_path):
        """Test a missing corpus directory is an input error."""
        code, _ = run(capsys, "stats --corpus", tmp_path / "none")
        assert code == 2


class TestExportDot:
    """Test cases for the export-dot subcommand."""

    def test_stdout(self, capsys, fixture_files):
        """Test DOT goes to stdout by default."""
        path = fixture_files["fig4_pair"][0]
        code, out = run(capsys, "export-dot --graph", path)
        assert code == 0
        assert out.startswith('graph "fig4_pair_0" {')
        assert out.count(" -- ") == 9

    def test_file(self, capsys, tmp_path, fixture_files):
        """Test --out writes the drawing to a file."""
        target = tmp_path / "k33.dot"
        code, out = run(
            capsys, "export-dot --graph", fixture_files["fig4_pair"][0], "--out", target
        )
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8").count(" -- ") == 9


if __name__ == "__main__":
    pytest.main([__file__])
