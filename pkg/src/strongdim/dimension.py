"""Strong/metric dimension of connected graphs.

The strong dimension is computed by reduction: build the graph on the same
vertex set whose edges are the mutually-maximally-distant pairs, then take a
minimum vertex cover of it. Brute-force subset enumeration is kept alongside
as an independent oracle for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cover import min_vertex_cover
from .graph import DistanceMatrix, Graph, GraphError, all_pairs_distances, require_connected


@dataclass(frozen=True)
class StrongResolvingGraph:
    base: Graph
    sr: Graph


@dataclass(frozen=True)
class DimensionResult:
    value: int
    witness: tuple[str, ...]
    method: str  # "reduction" | "brute_force"

    def to_json(self) -> dict:
        return {"value": self.value, "witness": list(self.witness), "method": self.method}


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise GraphError(f"u and v must differ, both are {g.labels[u]!r}")


def is_mmd(g: Graph, dm: DistanceMatrix, u: int, v: int) -> bool:
    """True iff u and v are mutually maximally distant.

    v is maximally distant from u when no neighbour of v is farther from u
    than v itself; the relation here requires it both ways.
    """
    _check_pair(g, u, v)
    d = dm.dist
    if d[u][v] < 0:
        raise GraphError("is_mmd requires a connected graph")
    duv = d[u][v]
    if any(d[u][x] > duv for x in g.adj[v]):
        return False
    return all(d[v][y] <= duv for y in g.adj[u])


def strong_resolving_graph(g: Graph) -> StrongResolvingGraph:
    """Graph on the same labels whose edges are exactly the MMD pairs."""
    require_connected(g)
    dm = all_pairs_distances(g)
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if is_mmd(g, dm, u, v)
    ]
    return StrongResolvingGraph(g, Graph.from_edges(g.labels, edges))


def strongly_resolves(dm: DistanceMatrix, w: int, u: int, v: int) -> bool:
    """w strongly resolves u,v: one of them lies on a geodesic from the other to w."""
    if u == v:
        raise GraphError("u and v must differ")
    d = dm.dist
    return d[u][w] == d[u][v] + d[v][w] or d[v][w] == d[v][u] + d[u][w]


def _resolves(dm: DistanceMatrix, w: int, u: int, v: int) -> bool:
    return dm.dist[u][w] != dm.dist[v][w]


def _is_set(dm: DistanceMatrix, witness_idx: Sequence[int], n: int, strong: bool) -> bool:
    pred = strongly_resolves if strong else _resolves
    for u in range(n):
        for v in range(u + 1, n):
            if not any(pred(dm, w, u, v) for w in witness_idx):
                return False
    return True


def is_strong_resolving_set(g: Graph, witness: Iterable[str],
                            dm: DistanceMatrix | None = None) -> bool:
    require_connected(g)
    dm = dm or all_pairs_distances(g)
    return _is_set(dm, [g.index(lb) for lb in witness], g.n, strong=True)


def is_resolving_set(g: Graph, witness: Iterable[str],
                     dm: DistanceMatrix | None = None) -> bool:
    require_connected(g)
    dm = dm or all_pairs_distances(g)
    return _is_set(dm, [g.index(lb) for lb in witness], g.n, strong=False)


def strong_dimension(g: Graph) -> DimensionResult:
    """Strong dimension via the MMD-pair graph's minimum vertex cover."""
    require_connected(g)
    if g.n == 1:
        return DimensionResult(0, (), "reduction")
    sr = strong_resolving_graph(g).sr
    cov = min_vertex_cover(sr)
    if not is_strong_resolving_set(g, cov.cover):
        raise AssertionError("cover of the MMD graph failed the strong-resolving check")
    return DimensionResult(cov.size, cov.cover, "reduction")


def brute_force_dimension(g: Graph, mode: str = "strong") -> DimensionResult:
    """Smallest witness by subset enumeration (size, then label order); n <= ~12."""
    if mode not in ("metric", "strong"):
        raise GraphError(f"mode must be 'metric' or 'strong', got {mode!r}")
    require_connected(g)
    strong = mode == "strong"
    if g.n == 1:
        return DimensionResult(0, (), "brute_force")
    dm = all_pairs_distances(g)
    order = sorted(range(g.n), key=lambda u: g.labels[u])
    for size in range(1, g.n + 1):
        for combo in combinations(order, size):
            if _is_set(dm, combo, g.n, strong):
                return DimensionResult(
                    size, tuple(sorted(g.labels[u] for u in combo)), "brute_force"
                )
    raise AssertionError("the full vertex set always resolves a connected graph")
