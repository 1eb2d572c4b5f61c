"""Seeded random instance generation.

One ``random.Random(seed)`` stream drives everything, with a fixed draw
order so a given (seed, flags) combination always produces the same
instance, byte for byte once serialized:

1. edges: ordered pairs scanned row-major over all n*n candidates
   (self-loops included), each kept when ``rng.random() < density``;
2. costs: per state, first one ``rng.random()`` against ``inf_prob``,
   then, only when finite, one ``rng.randint(lo, hi)``.
"""

from __future__ import annotations

import random

from .digraph import StateDigraph, CostVector


def random_instance(
    n: int,
    density: float,
    seed: int,
    cost_range: tuple = (0, 20),
    inf_prob: float = 0.0,
) -> dict:
    """Instance dict with keys ``n``, ``edges``, ``costs`` (``"inf"`` encodes infinity)."""
    if n <= 0:
        raise ValueError("n must be positive")
    if not (0.0 <= density <= 1.0):
        raise ValueError("density must be in [0, 1]")
    if not (0.0 <= inf_prob <= 1.0):
        raise ValueError("inf-prob must be in [0, 1]")
    lo, hi = int(cost_range[0]), int(cost_range[1])
    if lo < 0 or hi < lo:
        raise ValueError("cost range must satisfy 0 <= lo <= hi")

    rng = random.Random(seed)
    edges = [[i, j] for i in range(n) for j in range(n) if rng.random() < density]
    costs: list = []
    for _ in range(n):
        if rng.random() < inf_prob:
            costs.append("inf")
        else:
            costs.append(rng.randint(lo, hi))
    return {"n": n, "edges": edges, "costs": costs}


def instance_objects(instance: dict) -> tuple:
    """Convert an instance dict into (StateDigraph, CostVector)."""
    edges = frozenset((int(i), int(j)) for i, j in instance["edges"])
    costs = CostVector(
        tuple(float("inf") if v == "inf" else float(v) for v in instance["costs"])
    )
    return StateDigraph(int(instance["n"]), edges), costs
