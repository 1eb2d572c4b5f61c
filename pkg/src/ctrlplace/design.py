"""Minimum-cost input placement solvers.

Two problems over a dynamics sparsity pattern ``g`` and per-state actuation
costs ``c``:

* P1: among all input matrices with the fewest possible nonzeros that make
  the pair structurally controllable, pick one of minimum total cost.
* P2: drop the cardinality restriction; minimize total cost alone. Actuating
  extra states can be strictly cheaper, because a single state sometimes has
  to play a double role (right-unmatched vertex and source-SCC cover) that
  two cheaper states can split.

Both reduce to one minimum-weight maximum matching on a slack-augmented
state bipartite graph. Slack vertices stand for the inputs to be placed; the
state the matching assigns to a slack is the state that input will drive.

P1 weighting: ``p`` slacks, the first ``beta`` restricted to the states of
"their" non-top-linked SCC, the rest wired to every state. Slack edges cost
the target state's actuation cost; state-state edges cost one more than the
largest finite cost, so the matching spends slack edges greedily (they are
always cheaper) and the chosen targets form a cheapest minimal dedicated
configuration.

P2 weighting: every slack is wired to every state. An edge that sends
source-SCC slack ``k`` outside its SCC costs the target's cost plus the
cheapest cost inside SCC ``k``: choosing it means "drive that outside state,
and also drive the SCC's cheapest member", which is exactly the double-role
split. The selection is then read off the matched slack edges.

Infeasibility (some mandatory state has infinite cost) surfaces as an
infinite optimum; no finite sentinel is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .digraph import StateDigraph, CostVector, SccDecomposition, scc_decompose
from .matching import BipartiteGraph, Matching, WeightedBipartiteGraph, min_weight_maximum_matching
from .structural import (
    DedicatedCount,
    StructuralInputMatrix,
    dedicated_counts,
    is_structurally_controllable,
)

REASON_UNCOVERABLE_VERTEX = "uncoverable right-unmatched vertex"
REASON_FORBIDDEN_SCC = "forbidden non-top-linked SCC"
REASON_SLACK_UNMATCHED = "slack left unmatched"


@dataclass(frozen=True)
class PlacementDiagnostics:
    """Solver internals kept for reporting: counts, the winning matching, and
    the matched slack edges. ``omega`` records, per slack, the state set the
    P2 extraction derived from that slack's matched edge (None for P1)."""

    counts: DedicatedCount
    matching: Matching
    slack_targets: tuple
    omega: Optional[tuple] = None


@dataclass(frozen=True)
class PlacementSolution:
    selected_states: tuple
    input_matrix: StructuralInputMatrix
    total_cost: float
    diagnostics: PlacementDiagnostics

    def __post_init__(self):
        object.__setattr__(self, "selected_states", tuple(sorted(self.selected_states)))

    @property
    def cardinality(self) -> int:
        return len(self.selected_states)


@dataclass(frozen=True)
class Infeasible:
    """No finite-cost placement exists. ``witness`` is the offending SCC id or
    state id when one can be singled out; ``witness_kind`` says which."""

    reason: str
    witness: Optional[int] = None
    witness_kind: Optional[str] = None


def _check_instance(g: StateDigraph, c: CostVector) -> None:
    if len(c) != g.n:
        raise ValueError(f"cost vector has length {len(c)}, digraph has {g.n} states")


def _forbidden_source_scc(c: CostVector, scc: SccDecomposition) -> Optional[int]:
    for cid in sorted(scc.non_top_linked):
        if all(math.isinf(c[v]) for v in scc.components[cid]):
            return cid
    return None


def _classify_infeasible(
    c: CostVector,
    scc: SccDecomposition,
    source_comps: list,
    counts: DedicatedCount,
    slack_targets: list,
    weights: dict,
    n: int,
) -> Infeasible:
    cid = _forbidden_source_scc(c, scc)
    if cid is not None:
        return Infeasible(REASON_FORBIDDEN_SCC, witness=cid, witness_kind="scc")
    infinite_hits = sorted(
        x for k, x in slack_targets if math.isinf(weights[(n + k, x)])
    )
    if infinite_hits:
        return Infeasible(REASON_UNCOVERABLE_VERTEX, witness=infinite_hits[0], witness_kind="state")
    matched = {k for k, _ in slack_targets}
    unmatched = sorted(set(range(counts.p)) - matched)
    witness = source_comps[unmatched[0]] if unmatched and unmatched[0] < counts.beta else None
    return Infeasible(
        REASON_SLACK_UNMATCHED,
        witness=witness,
        witness_kind="scc" if witness is not None else None,
    )


def _solve_common(g: StateDigraph, c: CostVector, build_slack_weights):
    """Shared driver: build the weighted slack graph, match, hand back the pieces."""
    _check_instance(g, c)
    n = g.n
    scc = scc_decompose(g)
    counts = dedicated_counts(g, scc)
    source_comps = sorted(scc.non_top_linked)
    state_weight = c.finite_max() + 1.0

    weights = {edge: state_weight for edge in g.edges}
    build_slack_weights(weights, counts, source_comps, scc)

    graph = BipartiteGraph(n + counts.p, n, frozenset(weights))
    matching, total = min_weight_maximum_matching(WeightedBipartiteGraph(graph, weights))
    slack_targets = sorted((l - n, r) for l, r in matching.pairs if l >= n)
    return scc, counts, source_comps, weights, matching, total, slack_targets


def solve_p1(g: StateDigraph, c: CostVector):
    """Cheapest placement among the minimum-cardinality ones (problem P1).

    Returns a :class:`PlacementSolution` with exactly ``p`` dedicated inputs,
    or :class:`Infeasible` when every minimum-cardinality configuration needs
    a forbidden (infinite-cost) state.
    """
    n = g.n

    def build(weights, counts, source_comps, scc):
        for k, cid in enumerate(source_comps):
            for v in scc.components[cid]:
                weights[(n + k, v)] = c[v]
        for k in range(counts.beta, counts.p):
            for v in range(n):
                weights[(n + k, v)] = c[v]

    scc, counts, source_comps, weights, matching, total, slack_targets = _solve_common(g, c, build)

    if len(slack_targets) < counts.p or math.isinf(total):
        return _classify_infeasible(c, scc, source_comps, counts, slack_targets, weights, n)

    selected = sorted(x for _, x in slack_targets)
    solution = PlacementSolution(
        selected_states=tuple(selected),
        input_matrix=StructuralInputMatrix.identity_columns(n, selected),
        total_cost=sum(c[x] for x in selected),
        diagnostics=PlacementDiagnostics(counts, matching, tuple(slack_targets)),
    )
    _post_check(g, solution, expect_cardinality=counts.p)
    return solution


def solve_p2(g: StateDigraph, c: CostVector):
    """Cheapest placement with no cardinality restriction (problem P2).

    Returns a :class:`PlacementSolution` selecting between ``p`` and
    ``p + beta`` states, or :class:`Infeasible` when no finite-cost placement
    exists at all.
    """
    n = g.n
    member_sets: list = []
    cheapest_member: list = []

    def build(weights, counts, source_comps, scc):
        for k, cid in enumerate(source_comps):
            members = set(scc.components[cid])
            member_sets.append(members)
            cheapest_member.append(min(members, key=lambda v: (c[v], v)))
            c_min = c[cheapest_member[k]]
            for v in range(n):
                weights[(n + k, v)] = c[v] if v in members else c[v] + c_min
        for k in range(counts.beta, counts.p):
            for v in range(n):
                weights[(n + k, v)] = c[v]

    scc, counts, source_comps, weights, matching, total, slack_targets = _solve_common(g, c, build)

    if len(slack_targets) < counts.p or math.isinf(total):
        return _classify_infeasible(c, scc, source_comps, counts, slack_targets, weights, n)

    omega = []
    selected = set()
    for k, x in slack_targets:
        if k >= counts.beta or x in member_sets[k]:
            group = (x,)
        else:
            group = tuple(sorted({x, cheapest_member[k]}))
        omega.append((k, group))
        selected.update(group)

    uncovered = [cid for cid in source_comps if not (set(scc.components[cid]) & selected)]
    if uncovered:
        return Infeasible(REASON_SLACK_UNMATCHED, witness=uncovered[0], witness_kind="scc")

    selected = sorted(selected)
    solution = PlacementSolution(
        selected_states=tuple(selected),
        input_matrix=StructuralInputMatrix.identity_columns(n, selected),
        total_cost=sum(c[x] for x in selected),
        diagnostics=PlacementDiagnostics(counts, matching, tuple(slack_targets), tuple(omega)),
    )
    _post_check(g, solution, min_cardinality=counts.p, max_cardinality=counts.p + counts.beta)
    return solution


def _post_check(g, solution, expect_cardinality=None, min_cardinality=None, max_cardinality=None):
    if expect_cardinality is not None and solution.cardinality != expect_cardinality:
        raise RuntimeError(
            f"solver selected {solution.cardinality} states, expected {expect_cardinality}"
        )
    if min_cardinality is not None and not (
        min_cardinality <= solution.cardinality <= max_cardinality
    ):
        raise RuntimeError(
            f"solver selected {solution.cardinality} states, expected between "
            f"{min_cardinality} and {max_cardinality}"
        )
    if not math.isfinite(solution.total_cost):
        raise RuntimeError("finite solution carries an infinite cost")
    if not is_structurally_controllable(g, solution.input_matrix):
        raise RuntimeError("solver produced a placement that fails the controllability check")


def solve_p1_dual(g: StateDigraph, c: CostVector):
    """P1 on the transposed pattern: minimum-cost sensor placement for structural
    observability, with the fewest measured states."""
    return solve_p1(g.transpose(), c)


def solve_p2_dual(g: StateDigraph, c: CostVector):
    """P2 on the transposed pattern: minimum-cost sensor placement for structural
    observability."""
    return solve_p2(g.transpose(), c)


def expand_non_dedicated(g: StateDigraph, sol: PlacementSolution) -> StructuralInputMatrix:
    """Compress a dedicated solution into the fewest input columns.

    Re-matches the system bipartite graph with state-state edges cheaper than
    input edges, so input edges survive only on states no maximum state
    matching can cover. Those states each keep a dedicated column; every other
    selected state is merged into the lowest-indexed column (an arbitrary but
    fixed policy), preserving the actuated state set, the cost, and structural
    controllability.

    When no selected state needs a dedicated column the result is a single
    shared column: an input matrix with no columns at all can never yield
    controllability.
    """
    b = sol.input_matrix
    if b.n != g.n or not set(sol.selected_states) <= set(range(g.n)):
        raise ValueError("solution is inconsistent with the digraph")
    if not is_structurally_controllable(g, b):
        raise ValueError("solution input matrix is not structurally controllable for this digraph")

    n = g.n
    weights = {edge: 1.0 for edge in g.edges}
    for row, col in b.entries:
        weights[(n + col, row)] = 2.0
    graph = BipartiteGraph(n + b.p_cols, n, frozenset(weights))
    matching, _ = min_weight_maximum_matching(WeightedBipartiteGraph(graph, weights))

    dedicated = sorted(r for l, r in matching.pairs if l >= n)
    if dedicated:
        columns = [[s] for s in dedicated]
        own_column = set(dedicated)
        for s in sol.selected_states:
            if s not in own_column:
                columns[0].append(s)
    else:
        columns = [list(sol.selected_states)]

    entries = frozenset((s, j) for j, states in enumerate(columns) for s in states)
    result = StructuralInputMatrix(n, len(columns), entries)
    if not is_structurally_controllable(g, result):
        raise RuntimeError("non-dedicated expansion lost controllability")
    return result
