"""Sensor placement through duality.

Measuring a system for structural observability is actuator placement on
the transposed pattern: information flows against the edges. The dual
solvers do exactly that transposition.
"""

from ctrlplace import CostVector, StateDigraph, solve_p1, solve_p1_dual, solve_p2_dual

# a sensing cascade: 0 -> 1 -> 2 -> 3, with a side branch 1 -> 4
g = StateDigraph(5, frozenset({(0, 1), (1, 2), (2, 3), (1, 4)}))
c = CostVector((1.0, 1.0, 4.0, 9.0, 2.0))

print("edges:", sorted(g.edges), "costs:", list(c.costs))

actuation = solve_p1(g, c)
print(f"\nactuators (controllability): drive {list(actuation.selected_states)}, "
      f"cost {actuation.total_cost}")

sensing = solve_p1_dual(g, c)
print(f"sensors  (observability):   measure {list(sensing.selected_states)}, "
      f"cost {sensing.total_cost}")
print("the sinks 3 and 4 must be measured: nothing downstream observes them.")

relaxed = solve_p2_dual(g, c)
print(f"\nunconstrained sensing: measure {list(relaxed.selected_states)}, "
      f"cost {relaxed.total_cost}")

assert solve_p1_dual(g, c) == solve_p1(g.transpose(), c)
print("\nsolve_p1_dual(g, c) == solve_p1(g.transpose(), c) holds by construction.")
