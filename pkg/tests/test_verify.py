import pytest

from domblocker import cycle_graph, path_graph, satisfiable_fixture, unsatisfiable_fixture
from domblocker.verify import (
    ClaimVerdict,
    all_three_var_formulas,
    eight_pattern_formula,
    run_suite,
    suite_clawfree,
    suite_subcubic,
    verify_clawfree_offset,
    verify_contraction_bound,
    verify_contraction_equivalences,
    verify_nine_cycle_gadget,
    verify_subcubic_efficiency,
    verify_subcubic_gamma,
    verify_triangle_construction,
)


class TestIndividualChecks:
    def test_gamma_iff_sat_on_fixtures(self):
        assert verify_subcubic_gamma(satisfiable_fixture()).passed
        assert verify_subcubic_gamma(unsatisfiable_fixture()).passed

    def test_efficiency_iff_tight_on_fixtures(self):
        assert verify_subcubic_efficiency(satisfiable_fixture()).passed
        verdict = verify_subcubic_efficiency(unsatisfiable_fixture())
        assert verdict.passed  # biconditional holds; witness got re-checked inside

    def test_nine_cycle_gadget(self):
        verdict = verify_nine_cycle_gadget()
        assert verdict.passed
        assert "3 minimum dominating sets" in verdict.detail

    def test_clawfree_offset_small(self):
        assert verify_clawfree_offset(cycle_graph(5), "C5").passed
        assert verify_clawfree_offset(cycle_graph(6), "C6").passed

    def test_triangle_construction_cases(self):
        formulas = all_three_var_formulas(max_clauses=1)
        for f in formulas:
            assert verify_triangle_construction(f).passed
        assert verify_triangle_construction(eight_pattern_formula()).passed

    def test_contraction_checks_tiny_corpus(self):
        corpus = [("P4", path_graph(4)), ("C6", cycle_graph(6)), ("C4", cycle_graph(4))]
        assert verify_contraction_equivalences(corpus).passed
        assert verify_contraction_bound(corpus).passed


class TestFailurePlumbing:
    def test_broken_solver_produces_checkable_counterexample(self, monkeypatch):
        import domblocker.verify as verify_mod

        real = verify_mod.domination_number

        def wrong(g, budget=None, hint=None):
            result = real(g, budget, hint=hint)
            return type(result)(result.gamma + 1, result.witness)

        monkeypatch.setattr(verify_mod, "domination_number", wrong)
        verdict = verify_mod.verify_subcubic_gamma(satisfiable_fixture())
        assert verdict.status == "fail"
        assert verdict.counterexample is not None
        assert verdict.counterexample["gamma"] != verdict.counterexample["target"]

    def test_budget_gives_skipped_not_fail(self):
        verdict = verify_subcubic_gamma(unsatisfiable_fixture(), budget=1)
        assert verdict.status == "skipped"
        assert "budget" in verdict.detail

    def test_verdict_json_shape(self):
        verdict = ClaimVerdict("some-check", "inst", "fail", "boom", {"bad": 1})
        d = verdict.to_json_dict()
        assert d == {
            "claim": "some-check",
            "instance": "inst",
            "status": "fail",
            "detail": "boom",
            "counterexample": {"bad": 1},
        }


class TestSuites:
    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("nope")

    def test_subcubic_suite_small(self):
        verdicts = suite_subcubic(random_instances=2, seed=5)
        assert verdicts and all(v.passed for v in verdicts)

    def test_clawfree_suite_small(self):
        verdicts = suite_clawfree(random_instances=1, seed=5)
        assert verdicts and all(v.passed for v in verdicts)
        claims = {v.claim for v in verdicts}
        assert "clawfree-gamma-offset" in claims and "clawfree-structure" in claims

    def test_contraction_suite_smallest(self):
        verdicts = run_suite("contraction", max_n=4, random_count=3, seed=1)
        assert [v.status for v in verdicts] == ["pass", "pass"]
