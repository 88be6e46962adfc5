"""Embeddings into strong products of paths, and their certification.

A placement maps each vertex to a k-tuple over {0..side-1}. The induced
supergraph joins two placed vertices exactly when their tuples are at
Chebyshev distance 1; a placement is anchor-resolved when, for every vertex,
its i-th coordinate equals its induced-graph distance to the i-th anchor.
Certification operations return the first violated clause for testability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import (
    Graph,
    GraphError,
    all_pairs_distances,
    bfs_from,
    require_connected,
)

Coord = tuple[int, ...]


class UnresolvedPairError(GraphError):
    """The anchor set fails to resolve the graph; carries one colliding pair."""

    def __init__(self, u: str, v: str):
        self.pair = (u, v)
        super().__init__(f"anchors do not resolve the graph: {u!r} and {v!r} collide")


@dataclass(frozen=True)
class Embedding:
    k: int
    side: int
    anchors: tuple[str, ...]
    placement: dict[str, Coord]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "side": self.side,
            "anchors": list(self.anchors),
            "placement": {lb: list(c) for lb, c in sorted(self.placement.items())},
        }

    @staticmethod
    def from_json(obj: dict) -> "Embedding":
        placement = {lb: tuple(int(x) for x in c) for lb, c in obj["placement"].items()}
        return Embedding(
            int(obj["k"]), int(obj["side"]), tuple(obj["anchors"]), placement
        )


@dataclass(frozen=True)
class InducedSupergraph:
    host: Graph
    h: Graph


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    clause: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def chebyshev(x: Sequence[int], y: Sequence[int]) -> int:
    """Max coordinate gap; the strong-product distance between tuples."""
    if len(x) != len(y):
        raise GraphError(f"tuple length mismatch: {len(x)} vs {len(y)}")
    return max((abs(a - b) for a, b in zip(x, y)), default=0)


def _chebyshev_adjacency(labels: Sequence[str], placement: dict[str, Coord]):
    coords = [placement[lb] for lb in labels]
    n = len(labels)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if chebyshev(coords[i], coords[j]) == 1:
                adj[i].append(j)
                adj[j].append(i)
    return [sorted(a) for a in adj]


def induced_supergraph(e: Embedding, host: Graph | None = None) -> InducedSupergraph:
    """Graph induced by the placement: edges are Chebyshev-1 tuple pairs."""
    labels = host.labels if host is not None else tuple(sorted(e.placement))
    adj = _chebyshev_adjacency(labels, e.placement)
    h = Graph.from_edges(labels, [(u, v) for u in range(len(labels)) for v in adj[u] if u < v])
    return InducedSupergraph(host if host is not None else h, h)


def distance_vector_embedding(h: Graph, anchors: Sequence[str],
                              side: int | None = None) -> Embedding:
    """Map each vertex to its vector of graph distances to the anchors.

    Raises UnresolvedPairError when two vertices get the same vector, i.e.
    the anchors do not resolve h.
    """
    require_connected(h)
    if not anchors:
        raise GraphError("at least one anchor is required")
    a_idx = [h.index(lb) for lb in anchors]
    dm = all_pairs_distances(h)
    placement = {
        h.labels[v]: tuple(dm.dist[w][v] for w in a_idx) for v in range(h.n)
    }
    seen: dict[Coord, str] = {}
    for lb in h.labels:
        c = placement[lb]
        if c in seen:
            raise UnresolvedPairError(seen[c], lb)
        seen[c] = lb
    min_side = max(max(c) for c in placement.values()) + 1
    if side is None:
        side = dm.diameter + 1
    if side < min_side:
        raise GraphError(f"side {side} too small, need at least {min_side}")
    return Embedding(len(anchors), side, tuple(anchors), placement)


def _anchor_distance_rows(e: Embedding, labels: Sequence[str]):
    """BFS distances in the induced graph from each anchor, by label."""
    adj = _chebyshev_adjacency(labels, e.placement)
    index = {lb: i for i, lb in enumerate(labels)}
    return [bfs_from(adj, index[w]) for w in e.anchors], index


def is_w_resolved(e: Embedding, g: Graph) -> CheckResult:
    """Check the three clauses of an anchor-resolved embedding of g.

    (a) every edge of g maps to Chebyshev-adjacent tuples,
    (b) the placement is injective,
    (c) each coordinate equals the induced-supergraph distance to its anchor.
    """
    missing = [lb for lb in g.labels if lb not in e.placement]
    if missing:
        return CheckResult(False, "domain", f"placement missing {missing[0]!r}")
    for w in e.anchors:
        if w not in e.placement:
            return CheckResult(False, "domain", f"anchor {w!r} not placed")
    for lb in g.labels:
        c = e.placement[lb]
        if len(c) != e.k or any(x < 0 or x >= e.side for x in c):
            return CheckResult(False, "range", f"{lb!r} -> {c} outside the grid")

    for u, v in g.edges():
        a, b = g.labels[u], g.labels[v]
        if chebyshev(e.placement[a], e.placement[b]) > 1:
            return CheckResult(False, "W-resolved(a)", f"edge {a!r}-{b!r} not adjacent in the product")

    seen: dict[Coord, str] = {}
    for lb in g.labels:
        c = e.placement[lb]
        if c in seen:
            return CheckResult(False, "W-resolved(b)", f"{seen[c]!r} and {lb!r} share cell {c}")
        seen[c] = lb

    rows, index = _anchor_distance_rows(e, g.labels)
    for i, w in enumerate(e.anchors):
        for lb in g.labels:
            want = e.placement[lb][i]
            got = rows[i][index[lb]]
            if got != want:
                return CheckResult(
                    False,
                    "W-resolved(c)",
                    f"coordinate {i} of {lb!r} is {want} but distance to {w!r} is {got}",
                )
    return CheckResult(True)


def is_isometric_in_product(e: Embedding) -> CheckResult:
    """True iff induced-graph distances equal Chebyshev distances for all pairs."""
    labels = tuple(sorted(e.placement))
    adj = _chebyshev_adjacency(labels, e.placement)
    for i, lb in enumerate(labels):
        dist = bfs_from(adj, i)
        for j in range(i + 1, len(labels)):
            want = chebyshev(e.placement[lb], e.placement[labels[j]])
            if dist[j] != want:
                if dist[j] < 0:
                    return CheckResult(
                        False, "isometric", f"{lb!r} and {labels[j]!r} are in different components"
                    )
                return CheckResult(
                    False,
                    "isometric",
                    f"d({lb!r},{labels[j]!r}) = {dist[j]} in the image but {want} in the product",
                )
    return CheckResult(True)


def anchor_distances_collapse(e: Embedding) -> CheckResult:
    """Induced distance to each anchor must equal the Chebyshev distance to it."""
    labels = tuple(sorted(e.placement))
    rows, index = _anchor_distance_rows(e, labels)
    for i, w in enumerate(e.anchors):
        cw = e.placement[w]
        for lb in labels:
            want = chebyshev(e.placement[lb], cw)
            if rows[i][index[lb]] != want:
                return CheckResult(
                    False,
                    "anchor-collapse",
                    f"d({lb!r},{w!r}) = {rows[i][index[lb]]} but Chebyshev gap is {want}",
                )
    return CheckResult(True)


@dataclass(frozen=True)
class FeasibleRegion:
    """Lattice region that contains every 2-anchor resolved placement.

    Bounded by the grid (x,y <= D), the triangle inequality floor
    (x + y >= a) and the two diagonals (|x - y| <= a), where a is the
    anchor distance.
    """

    D: int
    a: int

    def contains(self, x: int, y: int) -> bool:
        return (
            0 <= x <= self.D
            and 0 <= y <= self.D
            and x + y >= self.a
            and y - x <= self.a
            and x - y <= self.a
        )

    def cells(self) -> Iterator[tuple[int, int]]:
        for x in range(self.D + 1):
            for y in range(self.D + 1):
                if self.contains(x, y):
                    yield (x, y)


def feasible_region(D: int, a: int) -> FeasibleRegion:
    if not 0 <= a <= D:
        raise GraphError(f"need 0 <= a <= D, got a={a}, D={D}")
    return FeasibleRegion(D, a)


@dataclass(frozen=True)
class Dim2Report:
    """Structure checks available to any graph resolved by two anchors."""

    anchor_degrees: dict[str, int]
    anchor_degree_ok: bool
    unique_geodesic: bool
    geodesic: tuple[str, ...] | None
    geodesic_degree_ok: bool
    level_paths_ok: bool
    level_size_ok: bool
    up_down_degree_ok: bool
    failures: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return not self.failures


def _count_geodesics(g: Graph, dm, s: int, t: int):
    """Number of shortest s-t paths, plus one such path if unique."""
    ds = dm.dist[s]
    dt = dm.dist[t]
    total = ds[t]
    counts = [0] * g.n
    counts[s] = 1
    for v in sorted(range(g.n), key=lambda v: ds[v]):
        if ds[v] + dt[v] != total or v == s:
            continue
        counts[v] = sum(counts[u] for u in g.adj[v] if ds[u] == ds[v] - 1 and ds[u] + dt[u] == total)
    if counts[t] != 1:
        return counts[t], None
    path = [t]
    cur = t
    while cur != s:
        cur = next(u for u in g.adj[cur] if ds[u] == ds[cur] - 1 and ds[u] + dt[u] == total and counts[u] > 0)
        path.append(cur)
    return 1, tuple(reversed(path))


def dim2_diagnostics(h: Graph, anchors: Sequence[str]) -> Dim2Report:
    """Run the two-anchor structure checks; anchors must resolve h."""
    if len(anchors) != 2:
        raise GraphError("dim2 diagnostics needs exactly two anchors")
    require_connected(h)
    dm = all_pairs_distances(h)
    w = [h.index(lb) for lb in anchors]
    from .dimension import is_resolving_set  # local import avoids a cycle

    if not is_resolving_set(h, anchors, dm):
        raise UnresolvedPairError(*_find_collision(h, dm, w))

    failures: list[str] = []
    degs = {anchors[j]: h.degree(w[j]) for j in range(2)}
    anchor_degree_ok = all(d <= 3 for d in degs.values())
    if not anchor_degree_ok:
        failures.append("anchor degree exceeds 3")

    count, path = _count_geodesics(h, dm, w[0], w[1])
    unique = count == 1
    if not unique:
        failures.append(f"{count} shortest paths between the anchors")
    geodesic = tuple(h.labels[v] for v in path) if path else None
    geodesic_degree_ok = bool(path) and all(h.degree(v) <= 5 for v in path)
    if path and not geodesic_degree_ok:
        failures.append("a geodesic vertex has degree above 5")

    level_paths_ok = True
    level_size_ok = True
    up_down_ok = True
    for j in range(2):
        row = dm.dist[w[j]]
        ecc = dm.eccentricities[w[j]]
        levels: dict[int, list[int]] = {}
        for v in range(h.n):
            levels.setdefault(row[v], []).append(v)
        for i in range(ecc + 1):
            members = levels.get(i, [])
            if len(members) > 2 * i + 1:
                level_size_ok = False
            if not _induces_disjoint_paths(h, members):
                level_paths_ok = False
            for v in members:
                up = sum(1 for x in h.adj[v] if row[x] == i + 1)
                down = sum(1 for x in h.adj[v] if row[x] == i - 1)
                if up > 3 or down > 3:
                    up_down_ok = False
    if not level_size_ok:
        failures.append("a distance level exceeds the 2i+1 cap")
    if not level_paths_ok:
        failures.append("a distance level does not induce disjoint paths")
    if not up_down_ok:
        failures.append("a vertex has more than 3 neighbours in an adjacent level")

    return Dim2Report(
        anchor_degrees=degs,
        anchor_degree_ok=anchor_degree_ok,
        unique_geodesic=unique,
        geodesic=geodesic,
        geodesic_degree_ok=geodesic_degree_ok,
        level_paths_ok=level_paths_ok,
        level_size_ok=level_size_ok,
        up_down_degree_ok=up_down_ok,
        failures=tuple(failures),
    )


def _find_collision(h: Graph, dm, w: list[int]) -> tuple[str, str]:
    seen: dict[tuple[int, ...], int] = {}
    for v in range(h.n):
        key = tuple(dm.dist[x][v] for x in w)
        if key in seen:
            return h.labels[seen[key]], h.labels[v]
        seen[key] = v
    raise AssertionError("no collision found although the set does not resolve")


def _induces_disjoint_paths(g: Graph, members: list[int]) -> bool:
    """The induced subgraph is a disjoint union of paths (max degree 2, acyclic)."""
    inside = set(members)
    deg = {}
    edge_count = 0
    for v in members:
        nbrs = [x for x in g.adj[v] if x in inside]
        deg[v] = len(nbrs)
        edge_count += len(nbrs)
        if deg[v] > 2:
            return False
    edge_count //= 2
    # acyclic iff every component is a tree: edges = vertices - components
    seen: set[int] = set()
    components = 0
    for v in members:
        if v in seen:
            continue
        components += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for x in g.adj[u]:
                if x in inside and x not in seen:
                    seen.add(x)
                    stack.append(x)
    return edge_count == len(members) - components


def render_grid(e: Embedding) -> str:
    """ASCII grid for 2-coordinate embeddings: rows are y descending."""
    if e.k != 2:
        raise GraphError("grid rendering requires k=2")
    cells: dict[tuple[int, int], str] = {}
    for lb, (x, y) in e.placement.items():
        cells[(x, y)] = lb
    width = max((len(lb) for lb in e.placement), default=1)
    rows = []
    for y in range(e.side - 1, -1, -1):
        row = [cells.get((x, y), ".").rjust(width) for x in range(e.side)]
        rows.append(" ".join(row).rstrip())
    return "\n".join(rows)
