"""Structural controllability primitives.

A sparsity pattern pair (dynamics, input matrix) is structurally controllable
when almost every numerical realization with that pattern is controllable.
The classic graph criterion implemented here: every state is reachable from
some input in the system digraph, and a maximum matching of the system
bipartite graph saturates all state (right) vertices.

The module also computes the minimum number ``p`` of dedicated inputs needed
for structural controllability, decomposed as ``p = m + beta - alpha``:

* ``m``     right-unmatched vertices of any maximum matching of the state
            bipartite graph (states that must be directly driven),
* ``beta``  non-top-linked SCCs (source components of the condensation, each
            of which must contain a driven state),
* ``alpha`` the largest number of states that can serve both roles at once,
            obtained with one extra matching on a slack-augmented graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .digraph import StateDigraph, SccDecomposition, scc_decompose, reachable_from
from .matching import BipartiteGraph, maximum_matching


@dataclass(frozen=True)
class StructuralInputMatrix:
    """Sparsity pattern of an n-state input matrix: (state row, input column) nonzeros.

    A column with exactly one entry is a dedicated input.
    """

    n: int
    p_cols: int
    entries: frozenset = frozenset()

    def __post_init__(self):
        if self.n <= 0 or self.p_cols < 0:
            raise ValueError("need n >= 1 and p_cols >= 0")
        normalized = set()
        for entry in self.entries:
            row, col = entry
            if not (0 <= row < self.n and 0 <= col < self.p_cols):
                raise ValueError(
                    f"entry ({row}, {col}) out of range for {self.n}x{self.p_cols} matrix"
                )
            normalized.add((int(row), int(col)))
        object.__setattr__(self, "entries", frozenset(normalized))

    @classmethod
    def identity_columns(cls, n: int, states: Iterable[int]) -> "StructuralInputMatrix":
        """One dedicated input per given state; column order follows sorted states."""
        states = sorted(set(states))
        return cls(n, len(states), frozenset((s, j) for j, s in enumerate(states)))

    @property
    def actuated_states(self) -> frozenset:
        return frozenset(row for row, _ in self.entries)

    def columns(self) -> list[list[int]]:
        """Actuated states per column, each list sorted."""
        cols: list[list[int]] = [[] for _ in range(self.p_cols)]
        for row, col in sorted(self.entries):
            cols[col].append(row)
        return cols


@dataclass(frozen=True)
class DedicatedCount:
    """Minimum dedicated input count and its decomposition p = m + beta - alpha."""

    p: int
    m: int
    beta: int
    alpha: int

    def __post_init__(self):
        if not (0 <= self.alpha <= min(self.m, self.beta)):
            raise ValueError(f"alpha={self.alpha} outside [0, min(m, beta)]")
        if self.p != self.m + self.beta - self.alpha:
            raise ValueError("p must equal m + beta - alpha")


def state_bipartite(g: StateDigraph) -> BipartiteGraph:
    """Bipartite copy of the state digraph: left i connects to right j per edge i->j."""
    return BipartiteGraph(g.n, g.n, frozenset(g.edges))


def system_bipartite(g: StateDigraph, b: StructuralInputMatrix) -> BipartiteGraph:
    """State bipartite graph extended with input vertices on the left.

    Left vertices 0..n-1 are state copies, n..n+p_cols-1 the inputs; an input
    matrix entry (row, col) becomes the edge (n + col, row).
    """
    if b.n != g.n:
        raise ValueError(f"input matrix is for {b.n} states, digraph has {g.n}")
    edges = set(g.edges)
    for row, col in b.entries:
        edges.add((g.n + col, row))
    return BipartiteGraph(g.n + b.p_cols, g.n, frozenset(edges))


def is_structurally_controllable(g: StateDigraph, b: StructuralInputMatrix) -> bool:
    """Accessibility plus right-saturation test for the pattern pair (g, b)."""
    if b.n != g.n:
        raise ValueError(f"input matrix is for {b.n} states, digraph has {g.n}")
    actuated = b.actuated_states
    if len(reachable_from(g, actuated)) != g.n:
        return False
    return len(maximum_matching(system_bipartite(g, b))) == g.n


def is_feasible_dedicated_configuration(g: StateDigraph, states: Iterable[int]) -> bool:
    """True iff one dedicated input per state in ``states`` yields structural controllability."""
    states = set(states)
    for s in states:
        if not (0 <= s < g.n):
            raise ValueError(f"state {s} out of range for n={g.n}")
    return is_structurally_controllable(g, StructuralInputMatrix.identity_columns(g.n, states))


def minimum_dedicated_inputs(g: StateDigraph) -> DedicatedCount:
    """Minimum number of dedicated inputs for structural controllability of ``g``."""
    return dedicated_counts(g, scc_decompose(g))


def dedicated_counts(g: StateDigraph, scc: SccDecomposition) -> DedicatedCount:
    """Same as :func:`minimum_dedicated_inputs` with a precomputed SCC decomposition.

    ``alpha`` is the matching-number gain from adding one slack vertex per
    non-top-linked SCC, wired to exactly that SCC's states: slack edges can
    only land on states left right-unmatched by the state part, so the gain
    counts how many source SCCs can simultaneously host a right-unmatched
    vertex of one maximum matching.
    """
    nu_state = len(maximum_matching(state_bipartite(g)))
    m = g.n - nu_state
    source_comps = sorted(scc.non_top_linked)
    beta = len(source_comps)
    slack_edges = {
        (g.n + k, v)
        for k, cid in enumerate(source_comps)
        for v in scc.components[cid]
    }
    augmented = BipartiteGraph(g.n + beta, g.n, frozenset(set(g.edges) | slack_edges))
    alpha = len(maximum_matching(augmented)) - nu_state
    return DedicatedCount(p=m + beta - alpha, m=m, beta=beta, alpha=alpha)
