"""Command-line interface.

Subcommands: analyze, solve, verify, gen, oracle. Exit codes compose in
pipelines: 0 = optimal/feasible, 2 = infeasible, 1 = any error (bad usage,
unreadable or malformed instance, oracle size guard).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import oracle as oracle_mod
from .design import (
    Infeasible,
    PlacementSolution,
    expand_non_dedicated,
    solve_p1,
    solve_p2,
)
from .digraph import scc_decompose
from .formats import (
    InstanceError,
    build_report,
    cost_to_json,
    dumps_instance,
    dumps_report,
    load_instance,
    report_as_text,
    to_dot,
)
from .generators import random_instance
from .matching import maximum_matching, right_unmatched
from .structural import (
    dedicated_counts,
    is_feasible_dedicated_configuration,
    state_bipartite,
    StructuralInputMatrix,
    system_bipartite,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctrlplace",
        description="Minimum-cost actuator/sensor placement for structural controllability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="print SCC structure and input counts")
    p_analyze.add_argument("input", help="instance file (JSON)")
    p_analyze.set_defaults(func=cmd_analyze)

    p_solve = sub.add_parser("solve", help="solve a placement problem")
    p_solve.add_argument("problem", choices=["p1", "p2"])
    p_solve.add_argument("input", help="instance file (JSON)")
    p_solve.add_argument("--dual", action="store_true", help="solve on the transposed pattern (sensor placement)")
    p_solve.add_argument("--non-dedicated", action="store_true", help="append the fewest-columns input matrix")
    p_solve.add_argument("--format", choices=["json", "text", "dot"], default="json")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="check a dedicated input configuration")
    p_verify.add_argument("input", help="instance file (JSON)")
    p_verify.add_argument("--states", required=True, help="comma-separated state ids, e.g. 1,6")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a seeded random instance")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--density", type=float, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--cost-range", default="0:20", help="lo:hi inclusive integer range")
    p_gen.add_argument("--inf-prob", type=float, default=0.0)
    p_gen.set_defaults(func=cmd_gen)

    p_oracle = sub.add_parser("oracle", help="brute-force reference solve (small instances)")
    p_oracle.add_argument("problem", choices=["p1", "p2"])
    p_oracle.add_argument("input", help="instance file (JSON)")
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def cmd_analyze(args) -> int:
    g, _ = load_instance(args.input)
    scc = scc_decompose(g)
    counts = dedicated_counts(g, scc)
    out = {
        "n": g.n,
        "scc_count": len(scc.components),
        "beta": counts.beta,
        "m": counts.m,
        "alpha": counts.alpha,
        "p": counts.p,
        "non_top_linked_sccs": [list(scc.components[cid]) for cid in sorted(scc.non_top_linked)],
    }
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0


def cmd_solve(args) -> int:
    g, c = load_instance(args.input)
    if args.dual:
        g = g.transpose()
    solver = solve_p1 if args.problem == "p1" else solve_p2
    result = solver(g, c)
    scc = scc_decompose(g)
    counts = dedicated_counts(g, scc)
    non_dedicated = None
    if args.non_dedicated and isinstance(result, PlacementSolution):
        non_dedicated = expand_non_dedicated(g, result)

    if args.format == "dot":
        selected = result.selected_states if isinstance(result, PlacementSolution) else ()
        matrix = non_dedicated
        if matrix is None and isinstance(result, PlacementSolution):
            matrix = result.input_matrix
        sys.stdout.write(to_dot(g, c, selected, matrix))
    else:
        report = build_report(args.problem, args.dual, result, counts, scc, non_dedicated)
        if args.format == "json":
            sys.stdout.write(dumps_report(report))
        else:
            sys.stdout.write(report_as_text(report))
    return 0 if isinstance(result, PlacementSolution) else 2


def cmd_verify(args) -> int:
    g, _ = load_instance(args.input)
    text = args.states.strip()
    try:
        states = sorted({int(part) for part in text.split(",") if part.strip() != ""})
    except ValueError as exc:
        raise InstanceError(f"--states: expected comma-separated integers, got {args.states!r}") from exc
    for s in states:
        if not (0 <= s < g.n):
            raise InstanceError(f"--states: state {s} out of range for n={g.n}")

    if is_feasible_dedicated_configuration(g, states):
        sys.stdout.write(f"feasible dedicated input configuration: {states}\n")
        return 0

    scc = scc_decompose(g)
    chosen = set(states)
    missing = [
        list(scc.components[cid])
        for cid in sorted(scc.non_top_linked)
        if not (set(scc.components[cid]) & chosen)
    ]
    if missing:
        sys.stdout.write("infeasible: missing cover for non-top-linked SCC(s):\n")
        for comp in missing:
            sys.stdout.write("  {" + ", ".join(map(str, comp)) + "}\n")
    b = StructuralInputMatrix.identity_columns(g.n, states)
    bg = system_bipartite(g, b)
    unsaturated = sorted(right_unmatched(bg, maximum_matching(bg)))
    if unsaturated:
        sys.stdout.write(
            "infeasible: right vertices left unsaturated by a maximum matching: "
            + ", ".join(map(str, unsaturated))
            + "\n"
        )
    return 2


def cmd_gen(args) -> int:
    try:
        lo_text, hi_text = args.cost_range.split(":")
        cost_range = (int(lo_text), int(hi_text))
    except ValueError as exc:
        raise InstanceError(f"--cost-range: expected lo:hi, got {args.cost_range!r}") from exc
    instance = random_instance(
        args.n, args.density, args.seed, cost_range=cost_range, inf_prob=args.inf_prob
    )
    sys.stdout.write(dumps_instance(instance))
    return 0


def cmd_oracle(args) -> int:
    g, c = load_instance(args.input)
    brute = oracle_mod.brute_force_p1 if args.problem == "p1" else oracle_mod.brute_force_p2
    result = brute(g, c)
    feasible = result.feasible
    out = {
        "problem": args.problem,
        "dual": False,
        "status": "optimal" if feasible else "infeasible",
        "selected_states": list(result.witnesses[0]) if feasible else [],
        "total_cost": cost_to_json(result.best_cost),
        "cardinality": result.best_cardinality if feasible else 0,
        "witnesses": [list(w) for w in result.witnesses] if feasible else [],
    }
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0 if feasible else 2


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; 2 is reserved
        # for infeasible results, so usage errors are remapped to 1
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except InstanceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
