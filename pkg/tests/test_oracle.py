import math
import random

import pytest

from ctrlplace import (
    CostVector,
    StateDigraph,
    StructuralInputMatrix,
    brute_force_p1,
    brute_force_p2,
    is_structurally_controllable,
    reference_instance,
)
from helpers import random_costs, random_digraph


def path3():
    return StateDigraph(3, frozenset({(0, 1), (1, 2)}))


def test_p1_path_any_costs():
    r = brute_force_p1(path3(), CostVector((2, 3, 4)))
    assert r.best_cardinality == 1
    assert r.witnesses == ((0,),)


def test_p1_edgeless_pair():
    r = brute_force_p1(StateDigraph(2, frozenset()), CostVector((1, 1)))
    assert r.best_cardinality == 2
    assert r.best_cost == 2.0
    assert r.witnesses == ((0, 1),)


def test_reference_instance_optima():
    g, c = reference_instance()
    r1 = brute_force_p1(g, c)
    assert r1.best_cost == 60.0 and r1.best_cardinality == 2
    assert (0, 5) in r1.witnesses

    r2 = brute_force_p2(g, c)
    assert r2.best_cost == 30.0
    assert (2, 3, 5) in r2.witnesses


def test_p2_cycle_singleton():
    g = StateDigraph(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    r = brute_force_p2(g, CostVector((4, 2, 9)))
    assert r.best_cost == 2.0
    assert r.witnesses == ((1,),)


def test_p2_never_costs_more_than_p1():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 6)
        g = random_digraph(rng, n, rng.choice([0.2, 0.4]))
        c = random_costs(rng, n, inf_prob=0.15)
        assert brute_force_p2(g, c).best_cost <= brute_force_p1(g, c).best_cost


def test_witnesses_are_controllable():
    rng = random.Random(19)
    for _ in range(20):
        n = rng.randint(2, 6)
        g = random_digraph(rng, n, 0.3)
        c = random_costs(rng, n)
        for oracle in (brute_force_p1, brute_force_p2):
            for witness in oracle(g, c).witnesses:
                b = StructuralInputMatrix.identity_columns(n, witness)
                assert is_structurally_controllable(g, b)


def test_oracle_guard():
    g = StateDigraph(21, frozenset())
    with pytest.raises(ValueError):
        brute_force_p1(g, CostVector((1.0,) * 21))
    with pytest.raises(ValueError):
        brute_force_p2(g, CostVector((1.0,) * 21))


def test_infinite_optimum_reported_not_raised():
    g = StateDigraph(1, frozenset())
    r = brute_force_p2(g, CostVector((math.inf,)))
    assert not r.feasible
    assert r.best_cost == math.inf
