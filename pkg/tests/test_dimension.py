import itertools
import random

import pytest

from strongdim import (
    GraphError,
    all_pairs_distances,
    brute_force_dimension,
    complete_graph,
    cycle_graph,
    is_mmd,
    is_resolving_set,
    is_strong_resolving_set,
    path_graph,
    random_tree,
    star_graph,
    strong_dimension,
    strong_resolving_graph,
    strongly_resolves,
)
from strongdim.graph import Graph, leaves_of

from .conftest import atlas_connected, random_connected_graph


def test_mmd_complete():
    g = complete_graph(4)
    dm = all_pairs_distances(g)
    for u, v in itertools.combinations(range(4), 2):
        assert is_mmd(g, dm, u, v)


def test_mmd_path_and_cycle():
    p3 = path_graph(3)
    dm = all_pairs_distances(p3)
    assert is_mmd(p3, dm, 0, 2)
    assert not is_mmd(p3, dm, 0, 1)
    c4 = cycle_graph(4)
    dm = all_pairs_distances(c4)
    assert is_mmd(c4, dm, 0, 2)


def test_mmd_rejects_equal_vertices():
    g = path_graph(3)
    dm = all_pairs_distances(g)
    with pytest.raises(GraphError):
        is_mmd(g, dm, 1, 1)


def test_mmd_symmetric_random(rng):
    for _ in range(30):
        g = random_connected_graph(rng.randrange(2, 10), rng)
        dm = all_pairs_distances(g)
        for u, v in itertools.combinations(range(g.n), 2):
            assert is_mmd(g, dm, u, v) == is_mmd(g, dm, v, u)


def test_sr_of_complete_is_complete():
    sr = strong_resolving_graph(complete_graph(5)).sr
    assert sr.m == 10


def test_sr_of_path_is_endpoint_edge():
    sr = strong_resolving_graph(path_graph(6)).sr
    assert sr.label_edges() == [("0", "5")]


def test_tree_sr_is_leaf_clique():
    for seed in range(200):
        t = random_tree(random.Random(seed).randrange(2, 30), seed=seed)
        sr = strong_resolving_graph(t).sr
        leaves = {t.labels[v] for v in leaves_of(t)}
        expected = sorted(
            tuple(sorted(e)) for e in itertools.combinations(sorted(leaves), 2)
        )
        assert sr.label_edges() == expected


def test_strongly_resolves_examples():
    p4 = path_graph(4)
    dm = all_pairs_distances(p4)
    assert strongly_resolves(dm, 0, 1, 3)
    c4 = cycle_graph(4)
    dmc = all_pairs_distances(c4)
    assert not strongly_resolves(dmc, 0, 1, 3)
    # degenerate: w equals one of the pair
    assert strongly_resolves(dm, 1, 1, 3)


def test_strong_resolving_set_examples():
    for g in (path_graph(5), cycle_graph(5), complete_graph(4)):
        assert is_strong_resolving_set(g, list(g.labels))
    assert is_strong_resolving_set(path_graph(8), ["0"])
    assert not is_strong_resolving_set(complete_graph(3), ["0"])


def test_resolving_set_examples():
    assert not is_resolving_set(cycle_graph(4), ["0"])
    assert is_resolving_set(path_graph(9), ["0"])


def test_strong_implies_resolving(rng):
    for _ in range(40):
        g = random_connected_graph(rng.randrange(2, 9), rng)
        for k in range(1, g.n + 1):
            for W in itertools.combinations(g.labels, k):
                if is_strong_resolving_set(g, W):
                    assert is_resolving_set(g, W)


def test_strong_dimension_complete_and_trees():
    for n in range(2, 8):
        assert strong_dimension(complete_graph(n)).value == n - 1
    for seed in range(30):
        t = random_tree(4 + seed % 20, seed=seed)
        assert strong_dimension(t).value == len(leaves_of(t)) - 1


def test_strong_dimension_star_example():
    assert strong_dimension(star_graph(7)).value == 6


def test_strong_dimension_k1():
    g = Graph.from_edges(["0"], [])
    res = strong_dimension(g)
    assert res.value == 0 and res.witness == ()


def test_cycle_dimension_matches_brute_force():
    for n in range(4, 11):
        c = cycle_graph(n)
        brute = brute_force_dimension(c, "strong")
        assert brute.value == (n + 1) // 2
        assert strong_dimension(c).value == brute.value


def test_brute_force_path_strong_is_one():
    assert brute_force_dimension(path_graph(7), "strong").value == 1


def test_brute_force_metric_complete():
    for n in (3, 5, 6):
        assert brute_force_dimension(complete_graph(n), "metric").value == n - 1


def test_reduction_agrees_with_brute_force_small(rng):
    # the full exhaustive n<=7 run lives in the acceptance suite
    for g in atlas_connected(6, min_n=2)[::3]:
        assert strong_dimension(g).value == brute_force_dimension(g, "strong").value
    for _ in range(50):
        g = random_connected_graph(rng.randrange(2, 10), rng)
        assert strong_dimension(g).value == brute_force_dimension(g, "strong").value


def test_metric_le_strong(rng):
    for _ in range(30):
        g = random_connected_graph(rng.randrange(2, 9), rng)
        assert (
            brute_force_dimension(g, "metric").value
            <= brute_force_dimension(g, "strong").value
        )


def test_witness_is_deterministic_and_valid(rng):
    for _ in range(20):
        g = random_connected_graph(rng.randrange(2, 9), rng)
        a = strong_dimension(g)
        b = strong_dimension(g)
        assert a == b
        assert is_strong_resolving_set(g, a.witness)
        assert len(a.witness) == a.value
