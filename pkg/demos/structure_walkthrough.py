"""Walk through the structural analysis layer on a small supply network.

Shows how the SCC decomposition and the matching counts (m, beta, alpha, p)
explain why certain states must be driven directly.
"""

from ctrlplace import (
    StateDigraph,
    StructuralInputMatrix,
    is_feasible_dedicated_configuration,
    is_structurally_controllable,
    minimum_dedicated_inputs,
    scc_decompose,
)

# A hub (state 0) drives two leaves, plus an isolated 2-cycle on the side.
g = StateDigraph(5, frozenset({(0, 1), (0, 2), (3, 4), (4, 3)}))

print("digraph edges:", sorted(g.edges))
scc = scc_decompose(g)
print("\nSCCs:", [list(comp) for comp in scc.components])
print("condensation edges:", sorted(scc.dag_edges))
print("non-top-linked (source) SCCs:", [list(scc.components[c]) for c in sorted(scc.non_top_linked)])

counts = minimum_dedicated_inputs(g)
print("\ncounts:")
print(f"  m     = {counts.m}   states left right-unmatched by any maximum matching")
print(f"  beta  = {counts.beta}   source SCCs, each needs a driven state")
print(f"  alpha = {counts.alpha}   overlaps (states serving both roles at once)")
print(f"  p     = {counts.p}   minimum number of dedicated inputs")

print("\ntrying candidate input sets:")
for candidate in [{0}, {0, 3}, {1, 2, 3}, {0, 1, 2, 3, 4}]:
    ok = is_feasible_dedicated_configuration(g, candidate)
    print(f"  drive {sorted(candidate)}: {'feasible' if ok else 'not feasible'}")

# the hub alone cannot work: the 2-cycle is unreachable from it
b = StructuralInputMatrix.identity_columns(5, [0])
print("\ncontrollable with input at the hub only?", is_structurally_controllable(g, b))

# a minimal feasible set: the hub (no in-edges) is right-unmatched and covers
# its own source SCC, one leaf is the remaining deficit, 4 covers the 2-cycle
b = StructuralInputMatrix.identity_columns(5, [0, 1, 4])
print("controllable driving {0, 1, 4}?", is_structurally_controllable(g, b))
