import random
from itertools import combinations

import pytest

import oracles
from cga.comgraph.components import analyze_vertex_set
from cga.comgraph.graph import CommutingGraph, VertexSet
from cga.comgraph.solvers import (
    BudgetExhausted,
    clique_cover_number,
    complement,
    exact_partition,
    independence_number,
    max_clique,
    min_set_cover,
)
from cga.groups import GroupSpec, class_labels, class_representative, class_size
from cga.perm import Permutation, conjugate
from cga.validate import check_analysis


def _random_class_slices(count: int, seed: int = 2024):
    """(spec, VertexSet) pairs: up to 16 random members of a random class."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, 8)
        spec = GroupSpec(rng.choice(["sym", "alt"]), n)
        labels = [lab for lab in class_labels(spec)
                  if lab.cycle_type.parts and class_size(lab, spec) >= 2]
        lab = rng.choice(labels)
        rep = class_representative(lab)
        size = min(class_size(lab, spec), rng.randint(2, 16))
        members = set()
        while len(members) < size:
            imgs = list(range(n))
            rng.shuffle(imgs)
            q = Permutation(imgs)
            if spec.contains(q):
                members.add(conjugate(rep, q))
        out.append((spec, VertexSet.build(members, n, lab)))
    return out


SLICES = _random_class_slices(100)


@pytest.mark.parametrize("idx", range(len(SLICES)))
def test_solvers_match_exhaustive_enumeration(idx):
    spec, vs = SLICES[idx]
    adj = CommutingGraph.build(vs).adj
    assert adj == oracles.adjacency([v.images for v in vs.elements])
    alpha = oracles.independence_number(adj)
    theta = oracles.clique_cover_number(adj)
    omega = oracles.independence_number(complement(adj))

    mis = independence_number(adj)
    assert mis.exact and mis.value == alpha
    assert all(not (adj[a] >> b) & 1 for a, b in combinations(mis.certificate, 2))

    cover = clique_cover_number(adj)
    assert cover.exact and cover.value == theta

    mc = max_clique(adj)
    assert mc.exact and mc.value == omega

    a = analyze_vertex_set(vs, spec)
    assert a.certified or a.delta_exact
    assert (a.delta, a.Delta) == (alpha, theta)
    assert a.delta <= a.Delta
    assert check_analysis(a) == []


def test_min_set_cover_small():
    # universe {0..4}; the optimum uses {0,1,2} and {3,4}
    sets = [0b00111, 0b11000, 0b00011, 0b01100, 0b10000]
    res = min_set_cover(0b11111, sets)
    assert res.exact and res.value == 2
    covered = 0
    for i in res.certificate:
        covered |= sets[i]
    assert covered == 0b11111


def _brute_partition(universe, sets):
    for k in range(1, len(sets) + 1):
        for combo in combinations(range(len(sets)), k):
            chosen = [set(sets[i]) for i in combo]
            if sum(len(c) for c in chosen) == universe and set().union(*chosen) == set(range(universe)):
                return True
    return False


@pytest.mark.parametrize("seed", range(60))
def test_exact_partition_against_brute_force(seed):
    rng = random.Random(seed)
    universe = rng.randint(1, 9)
    sets = [sorted(rng.sample(range(universe), rng.randint(1, min(4, universe))))
            for _ in range(rng.randint(1, 10))]
    sol = exact_partition(universe, sets)
    assert (sol is not None) == _brute_partition(universe, sets)
    if sol is not None:
        points = [p for i in sol for p in sets[i]]
        assert sorted(points) == list(range(universe))


def test_exact_partition_budget():
    # many overlapping pairs with no perfect matching on an odd universe
    universe = 11
    sets = [[i, j] for i in range(universe) for j in range(i + 1, universe)]
    with pytest.raises(BudgetExhausted):
        exact_partition(universe, sets, budget=50)
    assert exact_partition(universe, sets, budget=10**7) is None


def test_empty_and_trivial_graphs():
    assert independence_number([]).value == 0
    assert clique_cover_number([]).value == 0
    assert independence_number([0]).value == 1
    assert clique_cover_number([0b10, 0b01]).value == 1
