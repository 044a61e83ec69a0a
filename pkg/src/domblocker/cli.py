"""Command-line interface: generate instances, build gadget graphs, solve
blocker questions, verify construction guarantees, and convert graph formats.

Every subcommand reads "-" as stdin and writes "-" (the default) as stdout.
Machine output is JSON; exit codes: 0 success/pass, 1 fail or counterexample,
2 usage error, 3 solver budget exceeded.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import sys
from typing import Optional

import click

from . import reductions, verify
from .cnf import (
    CnfError,
    emit_dimacs_cnf,
    gen_1in3,
    gen_3sat,
    parse_dimacs_cnf,
)
from .domination import BudgetExceeded, blocker_report, ct_gamma, domination_number
from .domination import all_efficient_md, all_independent_md, one_contraction_decision
from .graphio import (
    FormatError,
    emit_dot,
    emit_edge_list_json,
    emit_graph6,
    parse_edge_list_json,
    parse_graph6,
)
from .graphs import GraphError, LabeledGraph

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _default_budget() -> Optional[int]:
    raw = os.environ.get("DOMBLOCKER_BUDGET")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise click.UsageError(f"DOMBLOCKER_BUDGET must be an integer, got {raw!r}")
    if value <= 0:
        raise click.UsageError(f"DOMBLOCKER_BUDGET must be positive, got {value}")
    return value


def _validate_budget(ctx, param, value):
    if value is not None and value <= 0:
        raise click.BadParameter("budget must be positive")
    return value


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc}")


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _read_graph(path: str, fmt: str) -> LabeledGraph:
    text = _read_text(path)
    try:
        if fmt == "graph6":
            return parse_graph6(text)
        if fmt == "json":
            return parse_edge_list_json(text)
    except FormatError as exc:
        raise click.UsageError(f"bad {fmt} input: {exc}")
    raise click.UsageError(f"unsupported graph input format {fmt!r}")


def _emit_graph(g: LabeledGraph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    if fmt == "json":
        return emit_edge_list_json(g, indent=2) + "\n"
    if fmt == "dot":
        return emit_dot(g)
    raise click.UsageError(f"unsupported graph output format {fmt!r}")


@click.group()
def main():
    """Domination-number contraction blockers: generate, build, solve, verify."""


@main.command("gen")
@click.option("-n", "--num-vars", type=int, required=True, help="Number of variables.")
@click.option("--flavor", type=click.Choice(["1in3", "3sat"]), default="1in3", show_default=True)
@click.option("--clauses", type=int, default=None, help="Clause count (3sat flavor only).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--output", default="-", show_default=True)
def cmd_gen(num_vars, flavor, clauses, seed, output):
    """Generate a random CNF instance as DIMACS."""
    try:
        if flavor == "1in3":
            formula = gen_1in3(num_vars, seed)
        else:
            if clauses is None:
                clauses = max(1, num_vars)
            formula = gen_3sat(num_vars, clauses, seed)
    except CnfError as exc:
        raise click.UsageError(str(exc))
    _write_text(output, emit_dimacs_cnf(formula))


@main.command("build")
@click.option(
    "--target",
    type=click.Choice(["subcubic", "clawfree", "p7free"]),
    required=True,
    help="Which construction to apply.",
)
@click.option("-i", "--input", "input_path", default="-", show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["dimacs", "graph6", "json"]),
    default=None,
    help="Input format (default: dimacs for formula targets, graph6 for clawfree).",
)
@click.option("-o", "--output", default="-", show_default=True)
@click.option("--emit-dot", "dot_path", default=None, help="Also write a DOT rendering here.")
@click.option("--emit-graph6", "g6_path", default=None, help="Also write graph6 here.")
@click.option("--map", "map_path", default=None, help="Reduction-map sidecar path (default: <output>.map.json).")
def cmd_build(target, input_path, fmt, output, dot_path, g6_path, map_path):
    """Compile a formula (or degree-{2,3} graph) into a gadget graph."""
    try:
        if target == "subcubic":
            formula = parse_dimacs_cnf(_read_text(input_path), flavor="1in3")
            graph, rmap = reductions.build_subcubic(formula)
        elif target == "p7free":
            formula = parse_dimacs_cnf(_read_text(input_path), flavor="3sat")
            graph, rmap = reductions.build_p7free(formula)
        else:
            fmt = fmt or "graph6"
            source = _read_graph(input_path, fmt)
            graph, rmap = reductions.build_clawfree(source)
    except (CnfError, FormatError, reductions.ReductionError, GraphError) as exc:
        raise click.UsageError(str(exc))
    _write_text(output, emit_edge_list_json(graph, indent=2) + "\n")
    if map_path is None and output != "-":
        map_path = output + ".map.json"
    if map_path:
        _write_text(map_path, json.dumps(rmap.to_json_dict(), indent=2, sort_keys=True) + "\n")
    if dot_path:
        _write_text(dot_path, emit_dot(graph))
    if g6_path:
        _write_text(g6_path, emit_graph6(graph) + "\n")


@main.command("solve")
@click.option("-i", "--input", "input_path", default="-", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["graph6", "json"]), default="graph6", show_default=True)
@click.option(
    "--what",
    type=click.Choice(["gamma", "blocker", "ct", "all-efficient", "all-independent", "one-contraction"]),
    default="blocker",
    show_default=True,
)
@click.option("--budget", type=int, default=None, callback=_validate_budget, help="Search-node budget (default: DOMBLOCKER_BUDGET).")
@click.option("-o", "--output", default="-", show_default=True)
def cmd_solve(input_path, fmt, what, budget, output):
    """Solve domination/blocker questions for a graph, reporting JSON."""
    g = _read_graph(input_path, fmt)
    budget = budget if budget is not None else _default_budget()
    try:
        if what == "gamma":
            result = domination_number(g, budget)
            payload = {"gamma": result.gamma, "witness": sorted(result.witness)}
        elif what == "ct":
            payload = {"ct_gamma": ct_gamma(g, max_k=3, budget=budget)}
        elif what == "all-efficient":
            decision = all_efficient_md(g, budget)
            payload = {"all_efficient": "yes" if decision.holds else "no"}
            if not decision.holds:
                payload["witness"] = sorted(decision.witness)
        elif what == "all-independent":
            decision = all_independent_md(g, budget)
            payload = {"all_independent": "yes" if decision.holds else "no"}
            if not decision.holds:
                payload["witness"] = sorted(decision.witness)
        elif what == "one-contraction":
            decision = one_contraction_decision(g, budget)
            payload = {"one_contraction": "yes" if decision.holds else "no"}
            if decision.holds:
                payload["witness_edge"] = list(decision.witness)
        else:
            report = blocker_report(g, budget)
            payload = report.to_json_dict()
            if payload.get("ct_gamma") == "unknown":
                _write_text(output, json.dumps(payload, indent=2, sort_keys=True) + "\n")
                sys.exit(EXIT_BUDGET)
    except GraphError as exc:
        raise click.UsageError(str(exc))
    except BudgetExceeded as exc:
        click.echo(f"budget exceeded: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    _write_text(output, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _run_one_suite(args):
    name, kwargs = args
    return [v.to_json_dict() for v in verify.run_suite(name, **kwargs)]


@main.command("verify")
@click.argument("suite", type=click.Choice(sorted(verify.SUITES) + ["all"]))
@click.option("--max-n", type=int, default=6, show_default=True, help="Exhaustive corpus size (contraction suite).")
@click.option("--random-count", type=int, default=200, show_default=True, help="Random corpus size (contraction suite).")
@click.option("--seed", type=int, default=2024, show_default=True)
@click.option("--budget", type=int, default=None, callback=_validate_budget, help="Search-node budget (default: DOMBLOCKER_BUDGET).")
@click.option("--threads", type=int, default=1, show_default=True, help="Parallel workers across suites (verify only).")
@click.option("--canonical/--no-canonical", default=True, show_default=True, help="Deterministic single-threaded witnesses.")
@click.option("-o", "--output", default="-", show_default=True)
def cmd_verify(suite, max_n, random_count, seed, budget, threads, canonical, output):
    """Run a verification suite; exit 0 only if every check passes."""
    budget = budget if budget is not None else _default_budget()
    common = {"budget": budget}
    per_suite = {
        "contraction": {"max_n": max_n, "random_count": random_count, "seed": seed, **common},
        "subcubic": {"seed": seed, **common},
        "clawfree": {"seed": seed, **common},
        "p7": {**common},
    }
    names = sorted(verify.SUITES) if suite == "all" else [suite]
    jobs = [(name, per_suite[name]) for name in names]
    if threads > 1 and canonical:
        click.echo("note: --threads ignored in canonical mode", err=True)
    if threads > 1 and not canonical and len(jobs) > 1:
        with multiprocessing.Pool(min(threads, len(jobs))) as pool:
            results = pool.map(_run_one_suite, jobs)
        verdicts = [v for chunk in results for v in chunk]
    else:
        verdicts = [v for job in jobs for v in _run_one_suite(job)]
    _write_text(output, json.dumps(verdicts, indent=2, sort_keys=True) + "\n")
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for v in verdicts:
        counts[v["status"]] += 1
    summary = f"{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped"
    click.echo(summary, err=True)
    if counts["fail"]:
        sys.exit(EXIT_FAIL)
    if counts["skipped"]:
        sys.exit(EXIT_BUDGET)


@main.command("export")
@click.option("-i", "--input", "input_path", default="-", show_default=True)
@click.option("--from", "src_fmt", type=click.Choice(["graph6", "json"]), default="graph6", show_default=True)
@click.option("--to", "dst_fmt", type=click.Choice(["graph6", "json", "dot"]), default="json", show_default=True)
@click.option("-o", "--output", default="-", show_default=True)
def cmd_export(input_path, src_fmt, dst_fmt, output):
    """Convert a graph between graph6, edge-list JSON, and DOT."""
    g = _read_graph(input_path, src_fmt)
    _write_text(output, _emit_graph(g, dst_fmt))


if __name__ == "__main__":
    main()
