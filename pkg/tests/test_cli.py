import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from domblocker import (
    cycle_graph,
    emit_dimacs_cnf,
    emit_graph6,
    parse_dimacs_cnf,
    path_graph,
    satisfiable_fixture,
    validate_1in3,
)
from domblocker.cli import main

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner():
    return CliRunner()


class TestGen:
    def test_emits_valid_instance(self, runner):
        result = runner.invoke(main, ["gen", "-n", "3", "--flavor", "1in3", "--seed", "1"])
        assert result.exit_code == 0
        formula = parse_dimacs_cnf(result.output, flavor="1in3")
        assert validate_1in3(formula) == []

    def test_same_seed_identical_bytes(self, runner):
        a = runner.invoke(main, ["gen", "-n", "5", "--seed", "9"]).output
        b = runner.invoke(main, ["gen", "-n", "5", "--seed", "9"]).output
        assert a == b

    def test_too_small_errors(self, runner):
        result = runner.invoke(main, ["gen", "-n", "2"])
        assert result.exit_code == 2

    def test_golden(self, runner):
        result = runner.invoke(main, ["gen", "-n", "4", "--flavor", "1in3", "--seed", "1"])
        assert result.output == (GOLDEN / "gen_1in3_n4_seed1.cnf").read_text()

    def test_3sat_flavor(self, runner):
        result = runner.invoke(main, ["gen", "-n", "4", "--flavor", "3sat", "--clauses", "5", "--seed", "3"])
        assert result.exit_code == 0
        assert result.output.startswith("p cnf 4 5")


class TestBuild:
    def test_subcubic_from_stdin(self, runner):
        result = runner.invoke(
            main, ["build", "--target", "subcubic"], input=emit_dimacs_cnf(satisfiable_fixture())
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["n"] == 48 and len(payload["edges"]) == 63

    def test_golden_build(self, runner):
        result = runner.invoke(
            main, ["build", "--target", "subcubic"], input=emit_dimacs_cnf(satisfiable_fixture())
        )
        assert result.output == (GOLDEN / "build_subcubic_fixture.json").read_text()

    def test_clawfree_from_graph6(self, runner):
        result = runner.invoke(
            main,
            ["build", "--target", "clawfree", "--format", "graph6"],
            input=emit_graph6(cycle_graph(5)) + "\n",
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["n"] == 35

    def test_p7free(self, runner):
        result = runner.invoke(
            main, ["build", "--target", "p7free"], input="p cnf 3 1\n1 2 -3 0\n"
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["n"] == 10

    def test_sidecars(self, runner, tmp_path):
        out = tmp_path / "g.json"
        dot = tmp_path / "g.dot"
        g6 = tmp_path / "g.g6"
        result = runner.invoke(
            main,
            [
                "build", "--target", "subcubic",
                "-o", str(out), "--emit-dot", str(dot), "--emit-graph6", str(g6),
            ],
            input=emit_dimacs_cnf(satisfiable_fixture()),
        )
        assert result.exit_code == 0
        assert json.loads(out.read_text())["n"] == 48
        sidecar = json.loads((tmp_path / "g.json.map.json").read_text())
        assert sidecar["target"] == "subcubic"
        assert dot.read_text().startswith("graph G {")
        assert g6.read_text().strip()

    def test_unknown_target(self, runner):
        result = runner.invoke(main, ["build", "--target", "octagonal"], input="")
        assert result.exit_code == 2

    def test_invalid_formula(self, runner):
        result = runner.invoke(main, ["build", "--target", "subcubic"], input="p cnf 3 1\n1 2 3 0\n")
        assert result.exit_code == 2


class TestSolve:
    def test_c6_blocker(self, runner):
        result = runner.invoke(
            main, ["solve", "--what", "blocker"], input=emit_graph6(cycle_graph(6)) + "\n"
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["gamma"] == 2
        assert payload["one_contraction"] == "no"
        assert payload["ct_gamma"] == 3

    def test_golden_blocker(self, runner):
        result = runner.invoke(
            main, ["solve", "--what", "blocker"], input=emit_graph6(cycle_graph(6)) + "\n"
        )
        assert result.output == (GOLDEN / "solve_c6_blocker.json").read_text()

    def test_p4_one_contraction(self, runner):
        result = runner.invoke(
            main, ["solve", "--what", "one-contraction"], input=emit_graph6(path_graph(4)) + "\n"
        )
        payload = json.loads(result.output)
        assert payload["one_contraction"] == "yes"
        assert "witness_edge" in payload

    def test_gamma_only(self, runner):
        result = runner.invoke(main, ["solve", "--what", "gamma"], input="Dhc\n")
        assert json.loads(result.output)["gamma"] == 2

    def test_disconnected_rejected(self, runner):
        from domblocker import LabeledGraph

        g = LabeledGraph.from_edges(4, [(0, 1), (2, 3)])
        result = runner.invoke(main, ["solve", "--what", "blocker"], input=emit_graph6(g) + "\n")
        assert result.exit_code == 2

    def test_budget_exit_code(self, runner):
        from domblocker import build_subcubic, unsatisfiable_fixture

        g, _ = build_subcubic(unsatisfiable_fixture())
        result = runner.invoke(
            main, ["solve", "--what", "gamma", "--budget", "1"], input=emit_graph6(g) + "\n"
        )
        assert result.exit_code == 3

    def test_budget_env_var(self, runner):
        from domblocker import build_subcubic, unsatisfiable_fixture

        g, _ = build_subcubic(unsatisfiable_fixture())
        result = runner.invoke(
            main,
            ["solve", "--what", "gamma"],
            input=emit_graph6(g) + "\n",
            env={"DOMBLOCKER_BUDGET": "1"},
        )
        assert result.exit_code == 3

    def test_nonpositive_budget_rejected(self, runner):
        result = runner.invoke(main, ["solve", "--budget", "0"], input="Dhc\n")
        assert result.exit_code == 2

    def test_json_input_format(self, runner):
        result = runner.invoke(
            main,
            ["solve", "--what", "gamma", "--format", "json"],
            input='{"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}',
        )
        assert json.loads(result.output)["gamma"] == 1


class TestExport:
    def test_graph6_to_json_and_back(self, runner):
        blob = emit_graph6(cycle_graph(7))
        as_json = runner.invoke(main, ["export", "--from", "graph6", "--to", "json"], input=blob)
        assert as_json.exit_code == 0
        back = runner.invoke(
            main, ["export", "--from", "json", "--to", "graph6"], input=as_json.output
        )
        assert back.output.strip() == blob

    def test_to_dot(self, runner):
        result = runner.invoke(main, ["export", "--to", "dot"], input="Dhc\n")
        assert result.output.startswith("graph G {")

    def test_bad_input(self, runner):
        result = runner.invoke(main, ["export"], input="\x01\x02\n")
        assert result.exit_code == 2


class TestVerifyCommand:
    def test_contraction_suite_passes(self, runner):
        result = runner.invoke(
            main, ["verify", "contraction", "--max-n", "4", "--random-count", "2"]
        )
        assert result.exit_code == 0, result.output
        verdicts = json.loads(result.stdout)
        assert all(v["status"] == "pass" for v in verdicts)
        assert "fail" in result.stderr  # the human summary line

    def test_run_twice_identical(self, runner):
        args = ["verify", "contraction", "--max-n", "4", "--random-count", "2"]
        assert runner.invoke(main, args).stdout == runner.invoke(main, args).stdout

    def test_budget_exit_three(self, runner):
        result = runner.invoke(main, ["verify", "subcubic", "--budget", "1"])
        assert result.exit_code == 3

    def test_unknown_suite_usage_error(self, runner):
        result = runner.invoke(main, ["verify", "unknown-suite"])
        assert result.exit_code == 2

    def test_parallel_all_matches_sequential(self, runner):
        args = ["verify", "all", "--max-n", "4", "--random-count", "2"]
        sequential = runner.invoke(main, args)
        parallel = runner.invoke(main, args + ["--threads", "2", "--no-canonical"])
        assert sequential.exit_code == 0 and parallel.exit_code == 0
        assert sequential.stdout == parallel.stdout
