"""ctrlplace: minimum-cost actuator/sensor placement for structural controllability.

Given only the zero/nonzero pattern of a linear system's dynamics matrix and
a per-state actuation cost (infinite cost = forbidden), this package computes
input placements that guarantee structural controllability:

* ``solve_p1``  cheapest placement among those with the fewest driven states;
* ``solve_p2``  cheapest placement overall (may drive more states for less);
* ``solve_p1_dual`` / ``solve_p2_dual``  the sensor-placement duals on the
  transposed pattern (structural observability);
* ``expand_non_dedicated``  compress a dedicated solution into the minimum
  number of input columns.

Supporting layers: SCC decomposition of the state digraph, bipartite matching
engines, structural controllability tests, brute-force oracles for
verification, and seeded random instance generation. The ``ctrlplace``
command line exposes the same operations on JSON instance files.
"""

from .digraph import (
    CostVector,
    SccDecomposition,
    StateDigraph,
    reachable_from,
    scc_decompose,
)
from .matching import (
    BipartiteGraph,
    Matching,
    WeightedBipartiteGraph,
    maximum_matching,
    min_weight_maximum_matching,
    right_unmatched,
)
from .structural import (
    DedicatedCount,
    StructuralInputMatrix,
    dedicated_counts,
    is_feasible_dedicated_configuration,
    is_structurally_controllable,
    minimum_dedicated_inputs,
    state_bipartite,
    system_bipartite,
)
from .design import (
    Infeasible,
    PlacementDiagnostics,
    PlacementSolution,
    REASON_FORBIDDEN_SCC,
    REASON_SLACK_UNMATCHED,
    REASON_UNCOVERABLE_VERTEX,
    expand_non_dedicated,
    solve_p1,
    solve_p1_dual,
    solve_p2,
    solve_p2_dual,
)
from .oracle import (
    OracleResult,
    brute_force_min_weight_maximum_matching,
    brute_force_p1,
    brute_force_p2,
    enumerate_matchings,
    enumerate_maximum_matchings,
    reference_instance,
)
from .generators import instance_objects, random_instance

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "CostVector",
    "DedicatedCount",
    "Infeasible",
    "Matching",
    "OracleResult",
    "PlacementDiagnostics",
    "PlacementSolution",
    "REASON_FORBIDDEN_SCC",
    "REASON_SLACK_UNMATCHED",
    "REASON_UNCOVERABLE_VERTEX",
    "SccDecomposition",
    "StateDigraph",
    "StructuralInputMatrix",
    "WeightedBipartiteGraph",
    "brute_force_min_weight_maximum_matching",
    "brute_force_p1",
    "brute_force_p2",
    "dedicated_counts",
    "enumerate_matchings",
    "enumerate_maximum_matchings",
    "expand_non_dedicated",
    "instance_objects",
    "is_feasible_dedicated_configuration",
    "is_structurally_controllable",
    "maximum_matching",
    "min_weight_maximum_matching",
    "minimum_dedicated_inputs",
    "random_instance",
    "reachable_from",
    "reference_instance",
    "right_unmatched",
    "scc_decompose",
    "solve_p1",
    "solve_p1_dual",
    "solve_p2",
    "solve_p2_dual",
    "state_bipartite",
    "system_bipartite",
]
