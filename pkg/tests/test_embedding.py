import pytest

from strongdim import (
    Embedding,
    GraphError,
    UnresolvedPairError,
    all_pairs_distances,
    anchor_distances_collapse,
    brute_force_dimension,
    chebyshev,
    cycle_graph,
    dim2_diagnostics,
    distance_vector_embedding,
    feasible_region,
    induced_supergraph,
    is_isometric_in_product,
    is_resolving_set,
    is_strong_resolving_set,
    is_w_resolved,
    path_graph,
    render_grid,
)
from strongdim.constructions import cycle_embedding, gn_family, g1_placement

from .conftest import random_connected_graph


def test_chebyshev_examples():
    assert chebyshev((0, 0), (3, 1)) == 3
    assert chebyshev((2, 5), (2, 5)) == 0
    assert chebyshev((2, 5), (3, 4)) == 1
    with pytest.raises(GraphError):
        chebyshev((1, 2), (1, 2, 3))


def test_chebyshev_is_a_metric(rng):
    for _ in range(10_000):
        k = rng.randrange(1, 5)
        x, y, z = (tuple(rng.randrange(8) for _ in range(k)) for _ in range(3))
        assert chebyshev(x, y) == chebyshev(y, x)
        assert (chebyshev(x, y) == 0) == (x == y)
        assert chebyshev(x, z) <= chebyshev(x, y) + chebyshev(y, z)


def test_distance_vector_embedding_path():
    e = distance_vector_embedding(path_graph(4), ["0"])
    assert e.placement == {"0": (0,), "1": (1,), "2": (2,), "3": (3,)}
    assert e.side == 4


def test_distance_vector_embedding_collision():
    with pytest.raises(UnresolvedPairError) as exc:
        distance_vector_embedding(cycle_graph(4), ["0"])
    assert set(exc.value.pair) == {"1", "3"}


def test_g1_fixture_distance_vectors_match_grid():
    g1 = gn_family(1)
    emb = distance_vector_embedding(g1, ["w1_1", "w2_1"])
    assert emb.placement == g1_placement()
    assert is_w_resolved(emb, g1)
    assert anchor_distances_collapse(emb)
    # the anchors resolve the graph but do not strongly resolve it
    assert is_resolving_set(g1, ["w1_1", "w2_1"])
    assert not is_strong_resolving_set(g1, ["w1_1", "w2_1"])
    assert not is_isometric_in_product(emb)


def test_w_resolved_perturbation_fails_clause_c():
    from strongdim.constructions import l3n_family

    g, e = l3n_family(3)
    placement = dict(e.placement)
    placement["u3"] = (3, 4)  # leaf shifted: edges and injectivity survive
    bad = Embedding(2, 5, e.anchors, placement)
    res = is_w_resolved(bad, g)
    assert not res and res.clause == "W-resolved(c)"


def test_w_resolved_clause_a_and_b():
    g = path_graph(3)
    bad = Embedding(1, 3, ("0",), {"0": (0,), "1": (2,), "2": (1,)})
    assert is_w_resolved(bad, g).clause == "W-resolved(a)"
    g2 = cycle_graph(4)
    collide = Embedding(2, 3, ("0", "1"), {"0": (0, 1), "1": (1, 0), "2": (1, 1), "3": (1, 1)})
    assert is_w_resolved(collide, g2).clause in ("W-resolved(a)", "W-resolved(b)")


def test_distance_vector_roundtrip_random(rng):
    """Distance-vector embeddings of resolving sets certify and collapse."""
    done = 0
    while done < 200:
        g = random_connected_graph(rng.randrange(2, 11), rng)
        k = rng.randrange(1, min(4, g.n) + 1)
        W = rng.sample(list(g.labels), k)
        if not is_resolving_set(g, W):
            continue
        e = distance_vector_embedding(g, W)
        assert is_w_resolved(e, g)
        assert anchor_distances_collapse(e)
        done += 1


def test_isometric_examples():
    e = cycle_embedding(9)
    assert is_isometric_in_product(e)
    single = Embedding(2, 1, ("v",), {"v": (0, 0)})
    assert is_isometric_in_product(single)


def test_induced_supergraph_contains_host():
    g = cycle_graph(7)
    e = cycle_embedding(7)
    sup = induced_supergraph(e, g)
    host_edges = set(g.label_edges())
    sup_edges = set(sup.h.label_edges())
    assert host_edges <= sup_edges
    assert len(sup_edges) > len(host_edges)


def test_feasible_region_examples():
    r = feasible_region(5, 5)
    assert r.contains(0, 5) and not r.contains(0, 0)
    r2 = feasible_region(5, 2)
    assert not r2.contains(5, 2)  # x - y exceeds the anchor distance
    with pytest.raises(GraphError):
        feasible_region(3, 4)


def test_feasible_region_contains_every_basis_embedding(rng):
    checked = 0
    while checked < 25:
        g = random_connected_graph(rng.randrange(3, 8), rng)
        res = brute_force_dimension(g, "metric")
        if res.value != 2:
            continue
        W = list(res.witness)
        dm = all_pairs_distances(g)
        a = dm.dist[g.index(W[0])][g.index(W[1])]
        region = feasible_region(dm.diameter, a)
        e = distance_vector_embedding(g, W)
        assert all(region.contains(x, y) for x, y in e.placement.values())
        checked += 1


def test_dim2_diagnostics_on_fixture():
    g1 = gn_family(1)
    rep = dim2_diagnostics(g1, ["w1_1", "w2_1"])
    assert rep.all_ok
    assert rep.unique_geodesic
    assert rep.geodesic == ("w1_1", "a1_1", "b1_1", "c1_1", "d1_1", "w2_1")
    assert rep.anchor_degrees == {"w1_1": 3, "w2_1": 3}


def test_dim2_diagnostics_rejects_non_resolving():
    with pytest.raises(UnresolvedPairError):
        dim2_diagnostics(cycle_graph(4), ["0", "2"])


def test_dim2_diagnostics_on_brute_forced_cycle_basis():
    g = cycle_graph(6)
    basis = brute_force_dimension(g, "metric")
    assert basis.value == 2
    rep = dim2_diagnostics(g, list(basis.witness))
    assert rep.all_ok


def test_render_grid():
    e = distance_vector_embedding(path_graph(3), ["0", "2"])
    art = render_grid(e)
    assert art.splitlines() == ["0 . .", ". 1 .", ". . 2"]
    with pytest.raises(GraphError, match="k=2"):
        render_grid(distance_vector_embedding(path_graph(3), ["0"]))


def test_render_grid_cycle_fixture():
    art = render_grid(cycle_embedding(11))
    rows = art.splitlines()
    # w1 at (0,5) sits in the top row, w2 at (5,0) in the bottom row
    assert rows[0].split()[0] == "0"
    assert rows[-1].split()[-1] == "5"


def test_embedding_json_roundtrip():
    e = cycle_embedding(8)
    again = Embedding.from_json(e.to_json())
    assert again == e
