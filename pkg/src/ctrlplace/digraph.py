"""Directed sparsity patterns and their strongly connected component structure."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class StateDigraph:
    """Zero/nonzero pattern of an n-by-n dynamics matrix, viewed as a digraph.

    Edge ``(i, j)`` means state ``i`` feeds state ``j``, i.e. entry ``(j, i)``
    of the matrix is nonzero. Vertices are 0-based. Duplicate edges collapse
    to one; self-loops are meaningful (a state feeding itself) and preserved.
    """

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n <= 0:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        normalized = set()
        for edge in self.edges:
            i, j = edge
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
            normalized.add((int(i), int(j)))
        object.__setattr__(self, "edges", frozenset(normalized))

    def out_adjacency(self) -> list[list[int]]:
        """Successor lists, each sorted, indexed by vertex."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            adj[i].append(j)
        return adj

    def transpose(self) -> "StateDigraph":
        """The digraph with every edge reversed (pattern of the transposed matrix)."""
        return StateDigraph(self.n, frozenset((j, i) for i, j in self.edges))


@dataclass(frozen=True)
class CostVector:
    """Per-state actuation cost: a nonnegative real or ``math.inf`` (forbidden)."""

    costs: tuple = ()

    def __post_init__(self):
        normalized = []
        for k, value in enumerate(self.costs):
            value = float(value)
            if math.isnan(value) or value < 0:
                raise ValueError(f"costs[{k}] must be a nonnegative real or inf, got {value!r}")
            normalized.append(value)
        object.__setattr__(self, "costs", tuple(normalized))

    def __len__(self) -> int:
        return len(self.costs)

    def __getitem__(self, i: int) -> float:
        return self.costs[i]

    def finite_max(self) -> float:
        """Largest finite entry, or 0.0 when every entry is infinite."""
        finite = [v for v in self.costs if math.isfinite(v)]
        return max(finite) if finite else 0.0

    def scaled(self, factor: float) -> "CostVector":
        return CostVector(tuple(v * factor for v in self.costs))


@dataclass(frozen=True)
class SccDecomposition:
    """SCC partition of a digraph plus its condensation DAG.

    Component ids are canonical: components are numbered in increasing order
    of their smallest member vertex, so downstream tie-breaking is
    reproducible. ``non_top_linked`` holds the ids of components with no
    incoming condensation edge.
    """

    component_of: tuple
    components: tuple
    dag_edges: frozenset
    non_top_linked: frozenset


def scc_decompose(g: StateDigraph) -> SccDecomposition:
    """Tarjan's algorithm, iterative so deep graphs cannot hit the recursion limit."""
    n = g.n
    adj = g.out_adjacency()
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    raw_components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        frames: list[list[int]] = [[root, 0]]
        while frames:
            v, pos = frames[-1]
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            neighbors = adj[v]
            while frames[-1][1] < len(neighbors):
                w = neighbors[frames[-1][1]]
                frames[-1][1] += 1
                if index[w] == -1:
                    frames.append([w, 0])
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            frames.pop()
            if frames:
                parent = frames[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                raw_components.append(sorted(comp))

    raw_components.sort(key=lambda comp: comp[0])
    component_of = [0] * n
    for cid, comp in enumerate(raw_components):
        for v in comp:
            component_of[v] = cid

    dag_edges = set()
    for i, j in g.edges:
        a, b = component_of[i], component_of[j]
        if a != b:
            dag_edges.add((a, b))
    has_incoming = {b for _, b in dag_edges}
    non_top_linked = frozenset(cid for cid in range(len(raw_components)) if cid not in has_incoming)

    return SccDecomposition(
        component_of=tuple(component_of),
        components=tuple(tuple(comp) for comp in raw_components),
        dag_edges=frozenset(dag_edges),
        non_top_linked=non_top_linked,
    )


def reachable_from(g: StateDigraph, sources: Iterable[int]) -> set:
    """All vertices reachable by directed paths from ``sources``, sources included."""
    sources = set(sources)
    for v in sources:
        if not (0 <= v < g.n):
            raise ValueError(f"source vertex {v} out of range for n={g.n}")
    adj = g.out_adjacency()
    seen = set(sources)
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen
