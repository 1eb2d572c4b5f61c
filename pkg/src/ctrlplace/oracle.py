"""Independent brute-force references for the placement solvers.

Everything here enumerates rather than optimizes, so results can be trusted
as ground truth at desk scale. The enumeration cap is deliberate; these are
verification tools, not solvers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .digraph import StateDigraph, CostVector
from .matching import BipartiteGraph, Matching, WeightedBipartiteGraph
from .structural import is_feasible_dedicated_configuration

MAX_ORACLE_STATES = 20
_MAX_ENUM_SIDE = 12


@dataclass(frozen=True)
class OracleResult:
    """Best cost, the cardinality at which it is achieved, and every optimal set."""

    best_cost: float
    best_cardinality: int
    witnesses: tuple

    @property
    def feasible(self) -> bool:
        return math.isfinite(self.best_cost)


def _guard(n: int) -> None:
    if n > MAX_ORACLE_STATES:
        raise ValueError(f"oracle refuses n={n} (> {MAX_ORACLE_STATES} states)")


def brute_force_p1(g: StateDigraph, c: CostVector) -> OracleResult:
    """Exhaustive P1: scan subsets by increasing size; at the first feasible
    size, return the cheapest subsets of that size.

    Checking dedicated configurations only is enough: any feasible input
    matrix is cost-matched by the dedicated placement on the same actuated
    states, with no more nonzeros.
    """
    _guard(g.n)
    if len(c) != g.n:
        raise ValueError("cost vector length mismatch")
    for size in range(1, g.n + 1):
        best = math.inf
        witnesses: list = []
        feasible_at_size = False
        for subset in combinations(range(g.n), size):
            if not is_feasible_dedicated_configuration(g, subset):
                continue
            feasible_at_size = True
            cost = sum(c[v] for v in subset)
            if cost < best:
                best = cost
                witnesses = [subset]
            elif cost == best:
                witnesses.append(subset)
        if feasible_at_size:
            return OracleResult(best, size, tuple(sorted(witnesses)))
    raise RuntimeError("unreachable: actuating every state is always feasible")


def brute_force_p2(g: StateDigraph, c: CostVector) -> OracleResult:
    """Exhaustive P2: cheapest feasible subset of any size."""
    _guard(g.n)
    if len(c) != g.n:
        raise ValueError("cost vector length mismatch")
    best = math.inf
    witnesses: list = []
    any_feasible = False
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            cost = sum(c[v] for v in subset)
            if cost > best and any_feasible:
                continue
            if not is_feasible_dedicated_configuration(g, subset):
                continue
            any_feasible = True
            if cost < best:
                best = cost
                witnesses = [subset]
            elif cost == best:
                witnesses.append(subset)
    if not any_feasible:
        raise RuntimeError("unreachable: actuating every state is always feasible")
    best_cardinality = min(len(w) for w in witnesses)
    return OracleResult(best, best_cardinality, tuple(sorted(witnesses)))


def enumerate_matchings(g: BipartiteGraph):
    """Yield every matching of ``g`` (as a frozenset of pairs), desk scale only."""
    if g.n_left > _MAX_ENUM_SIDE or g.n_right > _MAX_ENUM_SIDE:
        raise ValueError(f"matching enumeration capped at {_MAX_ENUM_SIDE} per side")
    adj: list[list[int]] = [[] for _ in range(g.n_left)]
    for l, r in sorted(g.edges):
        adj[l].append(r)

    def rec(left: int, used_rights: frozenset, chosen: tuple):
        if left == g.n_left:
            yield frozenset(chosen)
            return
        yield from rec(left + 1, used_rights, chosen)
        for r in adj[left]:
            if r not in used_rights:
                yield from rec(left + 1, used_rights | {r}, chosen + ((left, r),))

    yield from rec(0, frozenset(), ())


def enumerate_maximum_matchings(g: BipartiteGraph) -> list:
    """All maximum-cardinality matchings of ``g``, as frozensets of pairs."""
    best_size = -1
    best: list = []
    for pairs in enumerate_matchings(g):
        if len(pairs) > best_size:
            best_size = len(pairs)
            best = [pairs]
        elif len(pairs) == best_size:
            best.append(pairs)
    return best


def brute_force_min_weight_maximum_matching(wg: WeightedBipartiteGraph) -> tuple:
    """Exhaustive reference for the weighted matching solver.

    Ranks maximum matchings by (number of infinite edges, finite weight sum),
    so a finite-weight optimum is preferred exactly when one exists. Returns
    the best matching and its weight-sum in the extended reals.
    """
    best_key = None
    best_pairs = None
    for pairs in enumerate_maximum_matchings(wg.graph):
        inf_count = sum(1 for e in pairs if math.isinf(wg.weight[e]))
        finite = sum(wg.weight[e] for e in pairs if math.isfinite(wg.weight[e]))
        key = (inf_count, finite, tuple(sorted(pairs)))
        if best_key is None or key < best_key:
            best_key = key
            best_pairs = pairs
    total = math.inf if best_key[0] else best_key[1]
    return Matching(best_pairs), total


def reference_instance() -> tuple:
    """The 7-state benchmark network used across tests, demos, and docs.

    A three-state source cycle feeding a chain that forks into two sinks,
    with costs ``[50, inf, 10, 10, 1, 10, 20]``. Its optima are certified by
    the brute-force oracles in the test suite rather than assumed:

    * one non-top-linked SCC {0, 1, 2}, m = 2, p = 2,
    * cheapest 2-input placement: states {0, 5}, cost 60,
    * cheapest unrestricted placement: states {2, 3, 5}, cost 30.
    """
    edges = frozenset(
        {(0, 1), (0, 3), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (4, 6)}
    )
    costs = CostVector((50.0, math.inf, 10.0, 10.0, 1.0, 10.0, 20.0))
    return StateDigraph(7, edges), costs
