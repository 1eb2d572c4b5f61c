"""Shared test utilities: random graph builders and literal brute-force checks."""

from __future__ import annotations

import math
import random

from ctrlplace import (
    BipartiteGraph,
    CostVector,
    StateDigraph,
    WeightedBipartiteGraph,
    enumerate_maximum_matchings,
    scc_decompose,
)


def random_digraph(rng: random.Random, n: int, density: float) -> StateDigraph:
    edges = frozenset(
        (i, j) for i in range(n) for j in range(n) if rng.random() < density
    )
    return StateDigraph(n, edges)


def random_costs(rng: random.Random, n: int, inf_prob: float = 0.0, hi: int = 20) -> CostVector:
    values = []
    for _ in range(n):
        if rng.random() < inf_prob:
            values.append(math.inf)
        else:
            values.append(float(rng.randint(0, hi)))
    return CostVector(tuple(values))


def random_state_slack_graph(rng: random.Random, max_states: int = 6, max_slacks: int = 3):
    """A bipartite graph whose lefts split into state copies and slack vertices.

    Returns (graph, n_states, n_slacks); lefts < n_states are state copies,
    lefts >= n_states are slacks.
    """
    n = rng.randint(2, max_states)
    q = rng.randint(1, max_slacks)
    density = rng.choice([0.2, 0.3, 0.4, 0.5])
    edges = set()
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                edges.add((i, j))
    for k in range(q):
        for j in range(n):
            if rng.random() < 0.5:
                edges.add((n + k, j))
    return BipartiteGraph(n + q, n, frozenset(edges)), n, q


def split_state_slack(pairs, n_states: int):
    """Split matching pairs into the state part and the slack part."""
    state_part = frozenset(p for p in pairs if p[0] < n_states)
    slack_part = frozenset(p for p in pairs if p[0] >= n_states)
    return state_part, slack_part


def state_subgraph(g: BipartiteGraph, n_states: int) -> BipartiteGraph:
    return BipartiteGraph(
        n_states, g.n_right, frozenset(e for e in g.edges if e[0] < n_states)
    )


def slack_subgraph(g: BipartiteGraph, n_states: int) -> BipartiteGraph:
    return BipartiteGraph(
        g.n_left - n_states,
        g.n_right,
        frozenset((l - n_states, r) for l, r in g.edges if l >= n_states),
    )


def restrict_rights(g: BipartiteGraph, allowed) -> BipartiteGraph:
    return BipartiteGraph(
        g.n_left, g.n_right, frozenset(e for e in g.edges if e[1] in allowed)
    )


def max_matching_size_by_enumeration(g: BipartiteGraph) -> int:
    return len(enumerate_maximum_matchings(g)[0])


def theorem_feasible(g: StateDigraph, states) -> bool:
    """Literal dedicated-configuration test: some maximum matching of the state
    bipartite graph leaves only chosen states right-unmatched, and every
    non-top-linked SCC contains a chosen state."""
    chosen = set(states)
    scc = scc_decompose(g)
    for cid in scc.non_top_linked:
        if not (set(scc.components[cid]) & chosen):
            return False
    state_graph = BipartiteGraph(g.n, g.n, frozenset(g.edges))
    for matching in enumerate_maximum_matchings(state_graph):
        unmatched = set(range(g.n)) - {r for _, r in matching}
        if unmatched <= chosen:
            return True
    return False


def weighted(g: BipartiteGraph, weight_of) -> WeightedBipartiteGraph:
    return WeightedBipartiteGraph(g, {e: weight_of(e) for e in g.edges})
