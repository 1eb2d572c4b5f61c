"""Instance and report file handling.

Instance files are JSON objects::

    {"n": 7,
     "edges": [[0, 1], [0, 3], ...],      # [from, to]: digraph edge from -> to,
                                           # i.e. dynamics entry (to, from) nonzero
     "costs": [50, "inf", 10, ...]}        # one entry per state, "inf" = forbidden

Edges are stored in digraph orientation because every construction in this
package is graph-side; the matrix entry correspondence is (to, from).
Infinity is the quoted string ``"inf"``: numeric infinity does not survive
every JSON serializer.

Reports are JSON objects with a fixed key order so rerunning a command on
the same file reproduces the output byte for byte.
"""

from __future__ import annotations

import json
import math
from typing import Optional

from .design import Infeasible, PlacementSolution
from .digraph import CostVector, SccDecomposition, StateDigraph
from .structural import DedicatedCount, StructuralInputMatrix


class InstanceError(ValueError):
    """Raised on malformed instance files, with a field or line diagnostic."""


def cost_to_json(value: float):
    if math.isinf(value):
        return "inf"
    if float(value).is_integer():
        return int(value)
    return value


def parse_instance(data: dict) -> tuple:
    """Validate an instance dict and build (StateDigraph, CostVector)."""
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    for key in ("n", "edges", "costs"):
        if key not in data:
            raise InstanceError(f"missing field '{key}'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise InstanceError(f"n: must be a positive integer, got {n!r}")
    if not isinstance(data["edges"], list):
        raise InstanceError("edges: must be a list of [from, to] pairs")
    edges = set()
    for k, pair in enumerate(data["edges"]):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)
        ):
            raise InstanceError(f"edges[{k}]: expected a pair of integers, got {pair!r}")
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise InstanceError(f"edges[{k}]: vertex out of range for n={n}: {pair!r}")
        edges.add((i, j))
    costs_raw = data["costs"]
    if not isinstance(costs_raw, list) or len(costs_raw) != n:
        raise InstanceError(f"costs: must be a list of length n={n}")
    costs = []
    for k, value in enumerate(costs_raw):
        if value == "inf":
            costs.append(math.inf)
            continue
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InstanceError(f"costs[{k}]: expected a number or \"inf\", got {value!r}")
        value = float(value)
        if math.isnan(value) or math.isinf(value) or value < 0:
            raise InstanceError(f"costs[{k}]: must be a finite nonnegative number or \"inf\"")
        costs.append(value)
    return StateDigraph(n, frozenset(edges)), CostVector(tuple(costs))


def load_instance(path: str) -> tuple:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return parse_instance(data)


def dumps_instance(instance: dict) -> str:
    out = {"n": instance["n"], "edges": instance["edges"], "costs": instance["costs"]}
    return json.dumps(out, indent=2) + "\n"


def _diagnostics_dict(counts: DedicatedCount, scc: SccDecomposition) -> dict:
    return {
        "p": counts.p,
        "m": counts.m,
        "beta": counts.beta,
        "alpha": counts.alpha,
        "non_top_linked_sccs": [
            list(scc.components[cid]) for cid in sorted(scc.non_top_linked)
        ],
    }


def build_report(
    problem: str,
    dual: bool,
    result,
    counts: DedicatedCount,
    scc: SccDecomposition,
    non_dedicated: Optional[StructuralInputMatrix] = None,
) -> dict:
    report = {
        "problem": problem,
        "dual": dual,
    }
    diagnostics = _diagnostics_dict(counts, scc)
    if isinstance(result, PlacementSolution):
        report["status"] = "optimal"
        report["selected_states"] = list(result.selected_states)
        report["total_cost"] = cost_to_json(result.total_cost)
        report["cardinality"] = result.cardinality
    else:
        assert isinstance(result, Infeasible)
        report["status"] = "infeasible"
        report["selected_states"] = []
        report["total_cost"] = "inf"
        report["cardinality"] = 0
        diagnostics["reason"] = result.reason
        diagnostics["witness"] = result.witness
        diagnostics["witness_kind"] = result.witness_kind
    report["diagnostics"] = diagnostics
    if non_dedicated is not None:
        report["non_dedicated"] = non_dedicated.columns()
    return report


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_as_text(report: dict) -> str:
    lines = [
        f"problem: {report['problem']}" + (" (dual)" if report["dual"] else ""),
        f"status: {report['status']}",
    ]
    if report["status"] == "optimal":
        lines.append("selected states: " + ", ".join(str(s) for s in report["selected_states"]))
        lines.append(f"total cost: {report['total_cost']}")
        lines.append(f"cardinality: {report['cardinality']}")
    else:
        d = report["diagnostics"]
        witness = "" if d["witness"] is None else f" (witness {d['witness_kind']} {d['witness']})"
        lines.append(f"reason: {d['reason']}{witness}")
    d = report["diagnostics"]
    lines.append(f"p={d['p']} m={d['m']} beta={d['beta']} alpha={d['alpha']}")
    lines.append(
        "non-top-linked SCCs: "
        + "; ".join("{" + ", ".join(map(str, comp)) + "}" for comp in d["non_top_linked_sccs"])
    )
    if "non_dedicated" in report:
        for j, states in enumerate(report["non_dedicated"]):
            lines.append(f"input {j} actuates: " + ", ".join(str(s) for s in states))
    return "\n".join(lines) + "\n"


def to_dot(g: StateDigraph, c: CostVector, selected: tuple, input_matrix=None) -> str:
    """DOT rendering of the system digraph with selected states highlighted."""
    lines = ["digraph system {", "  rankdir=LR;"]
    chosen = set(selected)
    for v in range(g.n):
        cost = "inf" if math.isinf(c[v]) else cost_to_json(c[v])
        style = " style=filled fillcolor=lightblue" if v in chosen else ""
        lines.append(f'  x{v} [label="x{v} (cost {cost})"{style}];')
    if input_matrix is not None:
        for col in range(input_matrix.p_cols):
            lines.append(f'  u{col} [shape=box label="u{col}"];')
        for row, col in sorted(input_matrix.entries):
            lines.append(f"  u{col} -> x{row};")
    for i, j in sorted(g.edges):
        lines.append(f"  x{i} -> x{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
