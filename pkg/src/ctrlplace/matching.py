"""Bipartite matching engines.

Two solvers live here: maximum-cardinality matching (Hopcroft-Karp) and
minimum-weight maximum matching (successive shortest augmenting paths with
vertex potentials). Both are deterministic: adjacency is processed in sorted
edge order and heap ties break on vertex id, so a given graph always yields
the same matching.

Weights are extended nonnegative reals. ``math.inf`` marks an edge that may
be used only when cardinality demands it; internally the weight solver
optimizes the pair (number of infinite edges, finite weight sum)
lexicographically, which guarantees a finite-weight maximum matching is
returned whenever one exists. No large-sentinel tuning is involved, so
"the optimum is infinite" is an exact infeasibility signal for callers.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from heapq import heappush, heappop
from typing import Mapping


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on ``n_left`` + ``n_right`` vertices, edges as (left, right) pairs."""

    n_left: int
    n_right: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n_left < 0 or self.n_right < 0:
            raise ValueError("vertex counts must be nonnegative")
        normalized = set()
        for edge in self.edges:
            l, r = edge
            if not (0 <= l < self.n_left and 0 <= r < self.n_right):
                raise ValueError(
                    f"edge ({l}, {r}) out of range for {self.n_left}x{self.n_right} graph"
                )
            normalized.add((int(l), int(r)))
        object.__setattr__(self, "edges", frozenset(normalized))


@dataclass(frozen=True)
class Matching:
    """A set of edges sharing no endpoints."""

    pairs: frozenset = frozenset()

    def __post_init__(self):
        pairs = frozenset((int(l), int(r)) for l, r in self.pairs)
        lefts = [l for l, _ in pairs]
        rights = [r for _, r in pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("matching pairs share an endpoint")
        object.__setattr__(self, "pairs", pairs)

    @property
    def lefts(self) -> frozenset:
        return frozenset(l for l, _ in self.pairs)

    @property
    def rights(self) -> frozenset:
        return frozenset(r for _, r in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class WeightedBipartiteGraph:
    """A bipartite graph plus an edge weight map (finite nonnegative or ``math.inf``)."""

    graph: BipartiteGraph
    weight: Mapping = field(default_factory=dict)

    def __post_init__(self):
        weight = {}
        for edge, value in self.weight.items():
            l, r = edge
            value = float(value)
            if math.isnan(value) or value < 0:
                raise ValueError(f"weight of edge ({l}, {r}) must be nonnegative or inf")
            weight[(int(l), int(r))] = value
        if set(weight) != set(self.graph.edges):
            missing = set(self.graph.edges) - set(weight)
            extra = set(weight) - set(self.graph.edges)
            raise ValueError(
                f"weight map must cover exactly the graph edges "
                f"(missing {sorted(missing)}, extra {sorted(extra)})"
            )
        object.__setattr__(self, "weight", weight)


def maximum_matching(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching via Hopcroft-Karp, O(E * sqrt(V)).

    The BFS/DFS phases are iterative, so long augmenting paths are safe.
    """
    nl, nr = g.n_left, g.n_right
    adj: list[list[int]] = [[] for _ in range(nl)]
    for l, r in sorted(g.edges):
        adj[l].append(r)
    match_l = [-1] * nl
    match_r = [-1] * nr
    unreached = nl + nr + 1

    while True:
        dist = [unreached] * nl
        queue = deque()
        for l in range(nl):
            if match_l[l] == -1 and adj[l]:
                dist[l] = 0
                queue.append(l)
        found_free_right = False
        while queue:
            l = queue.popleft()
            for r in adj[l]:
                l2 = match_r[r]
                if l2 == -1:
                    found_free_right = True
                elif dist[l2] == unreached:
                    dist[l2] = dist[l] + 1
                    queue.append(l2)
        if not found_free_right:
            break

        ptr = [0] * nl
        for start in range(nl):
            if match_l[start] != -1 or not adj[start]:
                continue
            # iterative layered DFS for one augmenting path from `start`
            stack = [start]
            path_rights: list[int] = []
            while stack:
                v = stack[-1]
                advanced = False
                while ptr[v] < len(adj[v]):
                    r = adj[v][ptr[v]]
                    ptr[v] += 1
                    u = match_r[r]
                    if u == -1:
                        path_rights.append(r)
                        for left, right in zip(stack, path_rights):
                            match_l[left] = right
                            match_r[right] = left
                        stack = []
                        path_rights = []
                        advanced = True
                        break
                    if dist[u] == dist[v] + 1:
                        path_rights.append(r)
                        stack.append(u)
                        advanced = True
                        break
                if advanced:
                    continue
                dist[v] = unreached
                stack.pop()
                if path_rights:
                    path_rights.pop()

    return Matching(frozenset((l, match_l[l]) for l in range(nl) if match_l[l] != -1))


def right_unmatched(g: BipartiteGraph, m: Matching) -> set:
    """Right vertices not covered by ``m``. Raises if ``m`` is not a matching of ``g``."""
    bad = set(m.pairs) - set(g.edges)
    if bad:
        raise ValueError(f"pairs {sorted(bad)} are not edges of the graph")
    return set(range(g.n_right)) - {r for _, r in m.pairs}


def min_weight_maximum_matching(wg: WeightedBipartiteGraph) -> tuple:
    """A maximum matching of minimum weight-sum, and that sum.

    Among all maximum-cardinality matchings the returned one minimizes the
    weight-sum in the extended reals (inf absorbs: any matching containing an
    infinite edge sums to inf). If a finite-weight maximum matching exists it
    is found exactly; otherwise some maximum matching is returned with total
    weight ``math.inf``.

    Algorithm: successive shortest augmenting paths over reduced costs, each
    phase a multi-source Dijkstra from the currently free left vertices that
    stops at the nearest free right vertex. Costs are lexicographic pairs
    (infinite-edge count, finite weight), which keeps the arithmetic exact
    for infinite weights. Runs in O(V * E * log V); for a dense graph on
    max(n_left, n_right) = N vertices that is the Hungarian cubic bound times
    a log factor.
    """
    g = wg.graph
    nl, nr = g.n_left, g.n_right
    adj: list[list[tuple]] = [[] for _ in range(nl)]
    for l, r in sorted(g.edges):
        w = wg.weight[(l, r)]
        if math.isinf(w):
            adj[l].append((r, 1, 0.0))
        else:
            adj[l].append((r, 0, w))

    match_l = [-1] * nl
    match_r = [-1] * nr
    # vertex potentials, split into the two cost channels
    pl0 = [0] * nl
    pl1 = [0.0] * nl
    pr0 = [0] * nr
    pr1 = [0.0] * nr

    while True:
        dist_l: list = [None] * nl
        dist_r: list = [None] * nr
        done_l = [False] * nl
        done_r = [False] * nr
        prev_r = [-1] * nr
        heap: list[tuple] = []
        for l in range(nl):
            if match_l[l] == -1 and adj[l]:
                dist_l[l] = (0, 0.0)
                heappush(heap, (0, 0.0, l))
        target = -1
        target_dist = None

        while heap:
            d0, d1, node = heappop(heap)
            if node < nl:
                l = node
                if done_l[l] or dist_l[l] != (d0, d1):
                    continue
                done_l[l] = True
                for r, c0, c1 in adj[l]:
                    if done_r[r]:
                        continue
                    rc0 = c0 + pl0[l] - pr0[r]
                    rc1 = c1 + pl1[l] - pr1[r]
                    if rc0 == 0 and rc1 < 0.0:
                        rc1 = 0.0  # float drift guard; exact arithmetic gives rc1 >= 0 here
                    nd = (d0 + rc0, d1 + rc1)
                    if dist_r[r] is None or nd < dist_r[r]:
                        dist_r[r] = nd
                        prev_r[r] = l
                        heappush(heap, (nd[0], nd[1], nl + r))
            else:
                r = node - nl
                if done_r[r] or dist_r[r] != (d0, d1):
                    continue
                done_r[r] = True
                if match_r[r] == -1:
                    target = r
                    target_dist = (d0, d1)
                    break
                l2 = match_r[r]
                if dist_l[l2] is None or (d0, d1) < dist_l[l2]:
                    dist_l[l2] = (d0, d1)
                    heappush(heap, (d0, d1, l2))

        if target == -1:
            break  # no augmenting path: matching is maximum

        td0, td1 = target_dist
        for l in range(nl):
            d = dist_l[l]
            if d is not None:
                e = d if d < target_dist else target_dist
                pl0[l] += e[0] - td0
                pl1[l] += e[1] - td1
        for r in range(nr):
            d = dist_r[r]
            if d is not None:
                e = d if d < target_dist else target_dist
                pr0[r] += e[0] - td0
                pr1[r] += e[1] - td1

        r = target
        while True:
            l = prev_r[r]
            previous = match_l[l]
            match_l[l] = r
            match_r[r] = l
            if previous == -1:
                break
            r = previous

    pairs = frozenset((l, match_l[l]) for l in range(nl) if match_l[l] != -1)
    total = 0.0
    for pair in pairs:
        total += wg.weight[pair]
    return Matching(pairs), total
