"""Certify the solvers against exhaustive search on a batch of random instances.

The same pattern the test suite uses, in miniature: seeded instances,
solve, brute force, compare exactly.
"""

from ctrlplace import (
    Infeasible,
    brute_force_p1,
    brute_force_p2,
    instance_objects,
    random_instance,
    solve_p1,
    solve_p2,
)

checked = agreements = 0
for seed in range(40):
    inst = random_instance(n=3 + seed % 6, density=0.1 + (seed % 8) * 0.1,
                           seed=seed, cost_range=(0, 20), inf_prob=0.15)
    g, c = instance_objects(inst)

    for solve, brute, label in ((solve_p1, brute_force_p1, "P1"),
                                (solve_p2, brute_force_p2, "P2")):
        result = solve(g, c)
        reference = brute(g, c)
        checked += 1
        if isinstance(result, Infeasible):
            match = not reference.feasible
            summary = f"infeasible ({result.reason})"
        else:
            match = result.total_cost == reference.best_cost
            summary = f"cost {result.total_cost} via {list(result.selected_states)}"
        agreements += match
        flag = "ok " if match else "BAD"
        print(f"[{flag}] seed {seed:2d} {label}: {summary}")

print(f"\n{agreements}/{checked} solver results match the exhaustive reference")
assert agreements == checked
