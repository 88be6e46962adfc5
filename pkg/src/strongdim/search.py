"""Placement search for threshold (strong) dimension.

Whether some supergraph of g on the same vertex set is (strongly) resolved
by a given anchor set W is a finite question: the supergraph is determined
by an injective placement of V(g) into the grid {0..side-1}^|W|, where each
vertex's i-th coordinate must equal its distance to the i-th anchor in the
graph the placement induces (Chebyshev-adjacency), and g's edges must map
to adjacent cells. In the strong mode the induced graph must additionally
be isometric in the product. The DFS below enumerates placements with sound
interval prunes and verifies candidates exactly at the leaves, so "no" is a
certificate; running out of node budget is a distinct outcome.

Threshold dimensions iterate the anchor-set size k upward, refuting every
set of size k before accepting k+1. Anchor sets are grouped into orbits
under graph automorphisms so a refuted orbit is searched once; outcomes and
counters do not depend on the worker count.
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations, product

from .dimension import is_resolving_set, is_strong_resolving_set, strong_dimension
from .embedding import (
    Embedding,
    chebyshev,
    distance_vector_embedding,
    is_isometric_in_product,
    is_w_resolved,
)
from .graph import Graph, GraphError, all_pairs_distances, bfs_from, require_connected

MODE_RESOLVED = "resolved"
MODE_STRONG = "strongly_resolved"
_AUTOMORPHISM_CAP = 20000


@dataclass(frozen=True)
class PlacementSearchConfig:
    mode: str = MODE_STRONG
    max_side: int | None = None  # default diam(g)+1 at call time
    node_budget: int = 10_000_000
    symmetry_pruning: bool = True
    upper_bound_fallback: bool = True
    jobs: int = 1

    def __post_init__(self):
        if self.node_budget <= 0:
            raise GraphError("node_budget must be positive")
        if self.mode not in (MODE_RESOLVED, MODE_STRONG):
            raise GraphError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "yes" | "no" | "budget_exhausted"
    embedding: Embedding | None
    nodes: int


@dataclass(frozen=True)
class ThresholdResult:
    status: str  # "exact" | "bounds" | "lower_bound_only"
    value: int | None
    bounds: tuple[int, int | None] | None
    witness_W: tuple[str, ...] | None
    embedding: Embedding | None
    stats: dict
    wall_time_s: float = 0.0

    def to_json(self) -> dict:
        if self.status == "exact":
            value: object = self.value
        elif self.status == "bounds":
            value = {"lo": self.bounds[0], "hi": self.bounds[1]}
        else:
            value = {"lo": self.bounds[0]}
        return {
            "status": self.status,
            "value": value,
            "witness_W": list(self.witness_W) if self.witness_W is not None else None,
            "embedding": self.embedding.to_json() if self.embedding else None,
            "stats": self.stats,
        }


class _BudgetExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# automorphisms (used only to skip orbit-mates of refuted anchor sets)


def _refine_colors(g: Graph) -> list[int]:
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def graph_automorphisms(g: Graph, cap: int = _AUTOMORPHISM_CAP) -> list[tuple[int, ...]] | None:
    """All automorphisms as index permutations, or None when more than cap."""
    colors = _refine_colors(g)
    order = sorted(range(g.n), key=lambda v: (colors[v], v))
    found: list[tuple[int, ...]] = []
    image = [-1] * g.n
    used = [False] * g.n
    adj = [set(a) for a in g.adj]

    def extend(p: int) -> bool:
        if p == g.n:
            found.append(tuple(image))
            return len(found) <= cap
        v = order[p]
        for w in range(g.n):
            if used[w] or colors[w] != colors[v]:
                continue
            if all((order[q] in adj[v]) == (image[order[q]] in adj[w]) for q in range(p)):
                image[v] = w
                used[w] = True
                if not extend(p + 1):
                    return False
                used[w] = False
                image[v] = -1
        return True

    completed = extend(0)
    return found if completed else None


def _canonical_set(W: tuple[int, ...], auts: list[tuple[int, ...]]) -> tuple[int, ...]:
    return min(tuple(sorted(p[w] for w in W)) for p in auts)


# ---------------------------------------------------------------------------
# the placement DFS


def _bfs_vertex_order(g: Graph, root: int) -> list[int]:
    dist = bfs_from(g.adj, root)
    return [v for v, _ in sorted(enumerate(dist), key=lambda t: (t[1], t[0]))]


def _try_fast_path(g: Graph, anchors: list[str], mode: str) -> Embedding | None:
    """If W already (strongly) resolves g itself, its distance vectors work."""
    try:
        if mode == MODE_RESOLVED:
            if not is_resolving_set(g, anchors):
                return None
        else:
            if not is_strong_resolving_set(g, anchors):
                return None
        emb = distance_vector_embedding(g, anchors)
    except GraphError:
        return None
    if not is_w_resolved(emb, g):
        return None
    if mode == MODE_STRONG and not is_isometric_in_product(emb):
        return None
    return emb


class _Dim2Context:
    """Per-anchor-distance structures for the two-anchor pruned search.

    Region membership and the per-cell neighbour capacity bound any resolved
    placement; the interior cells of the anchor-to-anchor diagonal must all
    end up occupied (the induced graph needs a geodesic between the anchors),
    so each keeps a pool of vertices that could still fill it.
    """

    def __init__(self, g: Graph, dG, anchors: list[int], side: int, a: int):
        self.a = a
        hi = side - 1
        self.region = {
            (x, y)
            for x in range(hi + 1)
            for y in range(hi + 1)
            if x + y >= a and abs(x - y) <= a
        }
        self.cap = {
            c: sum(
                1
                for dx in (-1, 0, 1)
                for dy in (-1, 0, 1)
                if (dx or dy) and (c[0] + dx, c[1] + dy) in self.region
            )
            for c in self.region
        }
        self.diag = [(t, a - t) for t in range(1, a)]
        self.admissible = {
            v: frozenset(
                r
                for r in self.diag
                if r[0] <= dG[v][anchors[0]]
                and r[1] <= dG[v][anchors[1]]
                and self.cap[r] >= g.degree(v)
            )
            for v in range(g.n)
            if v not in anchors
        }


def _run_search(
    g: Graph, anchor_labels: list[str], cfg: PlacementSearchConfig, dim2_prunes: bool
) -> SearchOutcome:
    mode = cfg.mode
    require_connected(g)
    if len(set(anchor_labels)) != len(anchor_labels):
        raise GraphError("anchor labels must be distinct")
    k = len(anchor_labels)
    n = g.n
    if k == 0:
        if n == 1:
            return SearchOutcome("yes", Embedding(0, 1, (), {g.labels[0]: ()}), 0)
        return SearchOutcome("no", None, 0)

    dm = all_pairs_distances(g)
    D = dm.diameter
    side = cfg.max_side if cfg.max_side is not None else D + 1

    if side >= D + 1:
        fast = _try_fast_path(g, anchor_labels, mode)
        if fast is not None:
            return SearchOutcome("yes", fast, 0)
    if side**k < n:
        return SearchOutcome("no", None, 0)

    anchors = [g.index(lb) for lb in anchor_labels]
    if dim2_prunes and k == 2 and any(g.degree(w) > 3 for w in anchors):
        return SearchOutcome("no", None, 0)

    dG = dm.dist
    adjset = [frozenset(a) for a in g.adj]
    in_anchor = {v: i for i, v in enumerate(anchors)}
    rest = [v for v in _bfs_vertex_order(g, anchors[0]) if v not in in_anchor]
    order = anchors + rest
    targets = [tuple(min(dG[v][w], side - 1) for w in anchors) for v in range(n)]
    krange = range(k)

    INF = n + 2
    coords: list[tuple[int, ...] | None] = [None] * n
    used: set[tuple[int, ...]] = set()
    placed: list[int] = []
    hadj: list[list[int]] = [[] for _ in range(n)]  # placed-subgraph adjacency
    pdist = [[INF] * n for _ in krange]  # partial-subgraph distance to each anchor
    state = {"nodes": 0}
    budget = cfg.node_budget
    solution: list[Embedding] = []

    use_dim2 = dim2_prunes and k == 2
    dim2_cache: dict[int, _Dim2Context] = {}
    # each frame: (pools: cell -> remaining fillers, unfilled: frozenset of cells)
    pool_stack: list[tuple[dict, frozenset]] = []
    ctx_holder: list[_Dim2Context] = []

    def candidates(v: int) -> list[tuple[int, ...]]:
        lows, highs = [], []
        row_v = dG[v]
        adj_v = adjset[v]
        for i in krange:
            w = anchors[i]
            if v == w:
                lo = hi = 0
            else:
                lo, hi = 1, min(row_v[w], side - 1)
            for u in placed:
                cu = coords[u][i]
                b = 1 if u in adj_v else row_v[u]
                if cu - b > lo:
                    lo = cu - b
                if cu + b < hi:
                    hi = cu + b
            if lo > hi:
                return []
            lows.append(lo)
            highs.append(hi)
        placed_anchor = [
            (j, coords[w]) for j, w in enumerate(anchors) if coords[w] is not None
        ]
        anchor_slot = in_anchor.get(v)
        ctx = ctx_holder[0] if ctx_holder else None
        deg_v = g.degree(v)
        out = []
        for c in product(*[range(lo, hi + 1) for lo, hi in zip(lows, highs)]):
            if c in used:
                continue
            ok = True
            for j, cw in placed_anchor:
                # induced distance to anchor j is coordinate j, and it must
                # coincide with the Chebyshev gap to that anchor's cell
                gap = 0
                for a, b in zip(c, cw):
                    d = a - b if a >= b else b - a
                    if d > gap:
                        gap = d
                if gap != c[j]:
                    ok = False
                    break
                if anchor_slot is not None and cw[anchor_slot] != c[j]:
                    ok = False
                    break
            if not ok:
                continue
            if ctx is not None and (c not in ctx.region or ctx.cap[c] < deg_v):
                continue
            out.append(c)
        tgt = targets[v]
        out.sort(key=lambda c: (sum(abs(a - b) for a, b in zip(c, tgt)), c))
        return out

    def attach(v: int, c: tuple[int, ...]):
        """Join v to the placed subgraph and relax anchor distances through it.

        Returns (ok, undo). Placing v can only shorten partial-subgraph
        distances; any placed vertex whose distance to an anchor drops below
        its claimed coordinate kills the whole subtree (the final induced
        graph only gains more edges).
        """
        nbrs = []
        for u in placed:
            if u == v:
                continue
            cu = coords[u]
            gap = 0
            for a, b in zip(c, cu):
                d = a - b if a >= b else b - a
                if d > gap:
                    gap = d
            if gap == 1:
                nbrs.append(u)
        hadj[v] = nbrs
        for u in nbrs:
            hadj[u].append(v)
        dist_undo: list[tuple[int, int, int]] = []
        ok = True
        for i in krange:
            row = pdist[i]
            if v == anchors[i]:
                d0 = 0
            else:
                d0 = INF
                for u in nbrs:
                    if row[u] + 1 < d0:
                        d0 = row[u] + 1
            if d0 >= row[v]:
                continue
            if d0 < c[i]:
                ok = False
                break
            dist_undo.append((i, v, row[v]))
            row[v] = d0
            queue = deque([v])
            while queue:
                u = queue.popleft()
                du1 = row[u] + 1
                for x in hadj[u]:
                    if du1 < row[x]:
                        if du1 < coords[x][i]:
                            ok = False
                            queue.clear()
                            break
                        dist_undo.append((i, x, row[x]))
                        row[x] = du1
                        queue.append(x)
                if not ok:
                    break
            if not ok:
                break
        return ok, (v, nbrs, dist_undo)

    def detach(undo) -> None:
        v, nbrs, dist_undo = undo
        for i, u, old in reversed(dist_undo):
            pdist[i][u] = old
        for u in nbrs:
            hadj[u].pop()
        hadj[v] = []

    def leaf_ok() -> bool:
        for i in krange:
            row = pdist[i]
            if any(row[v] != coords[v][i] for v in range(n)):
                return False
        if mode == MODE_STRONG:
            for u in range(n):
                dist = bfs_from(hadj, u)
                cu = coords[u]
                for v in range(u + 1, n):
                    cv = coords[v]
                    gap = 0
                    for a, b in zip(cu, cv):
                        d = a - b if a >= b else b - a
                        if d > gap:
                            gap = d
                    if dist[v] != gap:
                        return False
        return True

    def push_pools(v: int, c: tuple[int, ...]) -> bool:
        """Update diagonal fill pools after placing v at c; False prunes."""
        ctx = ctx_holder[0]
        pools, unfilled = pool_stack[-1]
        new_pools = dict(pools)
        new_unfilled = unfilled - {c} if c in unfilled else unfilled
        for r in ctx.admissible.get(v, ()):
            if r != c:
                new_pools[r] -= 1
        if any(new_pools[r] <= 0 for r in new_unfilled):
            return False
        if len(new_unfilled) > n - len(placed):
            return False
        pool_stack.append((new_pools, new_unfilled))
        return True

    def open_dim2() -> bool:
        """Build the context once both anchor cells are fixed."""
        a = coords[anchors[0]][1]
        ctx = dim2_cache.get(a)
        if ctx is None:
            ctx = _Dim2Context(g, dG, anchors, side, a)
            dim2_cache[a] = ctx
        c1, c2 = coords[anchors[0]], coords[anchors[1]]
        if ctx.cap.get(c1, 0) < g.degree(anchors[0]):
            return False
        if ctx.cap.get(c2, 0) < g.degree(anchors[1]):
            return False
        pools = {r: 0 for r in ctx.diag}
        for v in rest:
            for r in ctx.admissible[v]:
                pools[r] += 1
        if any(pools[r] <= 0 for r in ctx.diag):
            return False
        ctx_holder.append(ctx)
        pool_stack.append((pools, frozenset(ctx.diag)))
        return True

    def place(p: int) -> bool:
        if p == n:
            if leaf_ok():
                placement = {g.labels[v]: coords[v] for v in range(n)}
                solution.append(Embedding(k, side, tuple(anchor_labels), placement))
                return True
            return False
        opened = False
        if use_dim2 and p == 2:
            if not open_dim2():
                return False
            opened = True
        v = order[p]
        try:
            for c in candidates(v):
                state["nodes"] += 1
                if state["nodes"] > budget:
                    raise _BudgetExceeded
                coords[v] = c
                used.add(c)
                placed.append(v)
                ok, undo = attach(v, c)
                pushed = False
                if ok and use_dim2 and p >= 2:
                    ok = push_pools(v, c)
                    pushed = ok
                if ok and place(p + 1):
                    return True
                if pushed:
                    pool_stack.pop()
                detach(undo)
                placed.pop()
                used.discard(c)
                coords[v] = None
            return False
        finally:
            if opened and not solution:
                pool_stack.pop()
                ctx_holder.pop()

    try:
        found = place(0)
    except _BudgetExceeded:
        return SearchOutcome("budget_exhausted", None, state["nodes"])
    if found:
        emb = solution[0]
        check = is_w_resolved(emb, g)
        if not check:
            raise AssertionError(f"search produced an invalid embedding: {check.detail}")
        if mode == MODE_STRONG:
            iso = is_isometric_in_product(emb)
            if not iso:
                raise AssertionError(f"search produced a non-isometric embedding: {iso.detail}")
        return SearchOutcome("yes", emb, state["nodes"])
    return SearchOutcome("no", None, state["nodes"])


def exists_supergraph_resolved_by(
    g: Graph, anchors: list[str] | tuple[str, ...], cfg: PlacementSearchConfig | None = None
) -> SearchOutcome:
    """Search all placements for the given anchor set; exhaustive unless budgeted out."""
    cfg = cfg or PlacementSearchConfig()
    return _run_search(g, list(anchors), cfg, dim2_prunes=False)


def dim2_pruned_search(
    g: Graph,
    anchors: list[str] | tuple[str, ...],
    mode: str = MODE_STRONG,
    cfg: PlacementSearchConfig | None = None,
) -> SearchOutcome:
    """Two-anchor specialization: anchor degree cap, cell capacities, forced diagonal."""
    if len(anchors) != 2:
        raise GraphError("dim2 pruned search needs exactly two anchors")
    cfg = replace(cfg or PlacementSearchConfig(), mode=mode)
    return _run_search(g, list(anchors), cfg, dim2_prunes=True)


# ---------------------------------------------------------------------------
# threshold dimension


def _search_task(args):
    g, labels, cfg, dim2 = args
    return _run_search(g, list(labels), cfg, dim2)


def threshold_dimension(
    g: Graph,
    mode: str = "strong",
    cfg: PlacementSearchConfig | None = None,
    max_k: int | None = None,
) -> ThresholdResult:
    """Smallest anchor-set size admitting a certified placement, or bounds.

    mode "metric" searches resolved placements, "strong" adds the isometry
    requirement. Size k is reported exact only when size k-1 was refuted
    exhaustively; feasibility is monotone in the anchor set, so a refuted
    level also refutes every smaller one.
    """
    t0 = time.monotonic()
    if mode not in ("metric", "strong"):
        raise GraphError(f"mode must be 'metric' or 'strong', got {mode!r}")
    cfg = replace(
        cfg or PlacementSearchConfig(),
        mode=MODE_RESOLVED if mode == "metric" else MODE_STRONG,
    )
    require_connected(g)
    n = g.n
    if n == 1:
        return ThresholdResult(
            "exact", 0, None, (), None, {"nodes": 0, "levels": []}, time.monotonic() - t0
        )

    ecc = all_pairs_distances(g).eccentricities
    auts = None
    if cfg.symmetry_pruning:
        auts = graph_automorphisms(g)
        if auts is not None and len(auts) <= 1:
            auts = None

    pool = ProcessPoolExecutor(cfg.jobs) if cfg.jobs > 1 else None
    total_nodes = 0
    levels: list[dict] = []
    lo = 1
    prev_exhaustive = True
    try:
        top = max_k if max_k is not None else n - 1
        for k in range(1, top + 1):
            sets = sorted(
                combinations(range(n), k),
                key=lambda W: (-sum(ecc[v] for v in W), tuple(g.labels[v] for v in W)),
            )
            # orbit grouping: search one representative, first in enumeration order
            orbit_of: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
            orbit_order: list[tuple[int, ...]] = []
            for W in sets:
                canon = _canonical_set(W, auts) if auts is not None else W
                if canon not in orbit_of:
                    orbit_of[canon] = []
                    orbit_order.append(canon)
                orbit_of[canon].append(W)

            dim2 = k == 2
            level = {
                "k": k,
                "sets_total": len(sets),
                "orbits": len(orbit_order),
                "sets_searched": 0,
                "refuted": 0,
                "budget_exhausted": 0,
            }
            level_yes: tuple[tuple[str, ...], Embedding] | None = None
            level_all_refuted = True

            def run_one(W: tuple[int, ...]) -> SearchOutcome:
                return _run_search(g, [g.labels[v] for v in W], cfg, dim2)

            def run_orbit(members: list[tuple[int, ...]], first_result: SearchOutcome):
                """Fold one orbit; returns (yes_W or None, refuted_whole_orbit).

                A budget-exhausted member falls through to the next one; a
                single exhaustive "no" refutes every isomorphic copy.
                """
                nonlocal total_nodes
                res = first_result
                for i, W in enumerate(members):
                    level["sets_searched"] += 1
                    total_nodes += res.nodes
                    if res.status == "yes":
                        return (W, res.embedding), False
                    if res.status == "no":
                        level["refuted"] += len(members) - i
                        return None, True
                    level["budget_exhausted"] += 1
                    if i + 1 < len(members):
                        res = run_one(members[i + 1])
                return None, False

            reps = [orbit_of[c][0] for c in orbit_order]
            if pool is None:
                rep_results = map(run_one, reps)
            else:
                rep_results = pool.map(
                    _search_task,
                    [(g, tuple(g.labels[v] for v in W), cfg, dim2) for W in reps],
                    chunksize=1,
                )
            for canon, first_res in zip(orbit_order, rep_results):
                yes, _refuted = run_orbit(orbit_of[canon], first_res)
                if yes is not None:
                    W, emb = yes
                    level_yes = (tuple(g.labels[v] for v in W), emb)
                    break
                if not _refuted:
                    level_all_refuted = False
            levels.append(level)

            if level_yes is not None:
                stats = {"nodes": total_nodes, "levels": levels}
                witness, emb = level_yes
                elapsed = time.monotonic() - t0
                if prev_exhaustive:
                    return ThresholdResult("exact", k, None, witness, emb, stats, elapsed)
                return ThresholdResult("bounds", None, (lo, k), witness, emb, stats, elapsed)
            if level_all_refuted:
                lo = k + 1
            else:
                prev_exhaustive = False
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)

    stats = {"nodes": total_nodes, "levels": levels}
    elapsed = time.monotonic() - t0
    if cfg.upper_bound_fallback:
        hi = strong_dimension(g).value
        return ThresholdResult("bounds", None, (lo, hi), None, None, stats, elapsed)
    return ThresholdResult("lower_bound_only", None, (lo, None), None, None, stats, elapsed)


@dataclass(frozen=True)
class GapReport:
    n: int
    vertices: int
    tau: ThresholdResult
    tau_s: ThresholdResult

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": self.vertices,
            "tau": self.tau.to_json(),
            "tau_s": self.tau_s.to_json(),
        }

    def row(self) -> str:
        ts = self.tau_s
        if ts.status == "exact":
            span = str(ts.value)
        else:
            hi = ts.bounds[1] if ts.bounds[1] is not None else "?"
            span = f"[{ts.bounds[0]}, {hi}]"
        tau = self.tau.value if self.tau.status == "exact" else f">={self.tau.bounds[0]}"
        return (
            f"G_{self.n}  vertices={self.vertices}  tau={tau}  tau_s={span}  "
            f"status={ts.status}  nodes={ts.stats['nodes']}"
        )


def tau_gap_experiment(
    n: int, cfg: PlacementSearchConfig | None = None, max_k: int | None = None
) -> GapReport:
    """Threshold vs. threshold-strong dimension on the chained corridor family."""
    if n < 1:
        raise GraphError("need n >= 1")
    from .constructions import gn_family

    g = gn_family(n)
    cfg = cfg or PlacementSearchConfig()
    tau = threshold_dimension(g, "metric", cfg, max_k=max_k)
    tau_s = threshold_dimension(g, "strong", cfg, max_k=max_k)
    return GapReport(n, g.n, tau, tau_s)
