"""Exact longest cycles and paths; Berge circumference; 2k-saturation.

The searches are depth-first branch-and-bound over node bitmasks.  At
each state the nodes still reachable from the path's head bound what the
path can grow to, and since every cycle or path alternates between the
parts, the smaller part caps the length.  Worst case is exponential,
which is fine at the sizes this package is meant for (a few dozen nodes).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraph import BipartiteGraph, blocks, iter_bits
from .hypercore import BergeWitness, MultiHypergraph, incidence_graph

__all__ = [
    "CycleWitness",
    "circumference",
    "has_cycle_at_least",
    "longest_path",
    "has_xy_path_at_least",
    "berge_circumference",
    "berge_cycle",
    "has_berge_cycle_at_least",
    "longest_berge_path",
    "berge_path",
    "direct_berge_cycle",
    "direct_berge_path",
    "is_saturated",
    "saturate",
    "NotInRegime",
]


class NotInRegime(ValueError):
    """Raised by saturation helpers when ``c(G) >= 2k`` already."""


@dataclass(frozen=True)
class CycleWitness:
    nodes: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.nodes)

    def validate(self, G: BipartiteGraph) -> None:
        ns = self.nodes
        if len(ns) < 4 or len(ns) % 2:
            raise ValueError("bipartite cycles have even length >= 4")
        if len(set(ns)) != len(ns):
            raise ValueError("cycle repeats a node")
        for i, v in enumerate(ns):
            w = ns[(i + 1) % len(ns)]
            if not G.has_edge(v, w):
                raise ValueError(f"({v}, {w}) is not an edge")


class _Found(Exception):
    pass


def _reach(adj, v, free):
    """Nodes of ``free`` reachable from ``v`` through ``free`` (``v`` excluded)."""
    seen = 0
    frontier = adj[v] & free
    while frontier:
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & free & ~seen
    return seen


def _cycle_search(adj, allowed, xmask, best, target):
    """Longest cycle inside node set ``allowed``.

    Returns ``(length, nodes)`` for the best cycle longer than ``best``,
    or ``(best, None)``.  Stops early once a cycle of ``target`` nodes is seen.
    """
    state = {"best": best, "cycle": None}
    remaining = allowed

    def dfs(s, v, visited, path, px, py):
        free = remaining & ~visited
        if len(path) >= 4 and (adj[v] >> s) & 1:
            if len(path) > state["best"]:
                state["best"] = len(path)
                state["cycle"] = tuple(path)
                if target is not None and len(path) >= target:
                    raise _Found
        r = _reach(adj, v, free)
        if not r & adj[s]:
            return
        rx = (r & xmask).bit_count()
        ry = r.bit_count() - rx
        if 2 * min(px + rx, py + ry) <= state["best"]:
            return
        cand = adj[v] & free
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            if (xmask >> w) & 1:
                dfs(s, w, visited | low, path, px + 1, py)
            else:
                dfs(s, w, visited | low, path, px, py + 1)
            path.pop()

    try:
        for s in list(iter_bits(allowed)):
            nx_ = (remaining & xmask).bit_count()
            ny_ = remaining.bit_count() - nx_
            if 2 * min(nx_, ny_) <= state["best"]:
                break
            sx = (xmask >> s) & 1
            dfs(s, s, 1 << s, [s], sx, 1 - sx)
            remaining &= ~(1 << s)
    except _Found:
        pass
    return state["best"], state["cycle"]


def circumference(G: BipartiteGraph) -> tuple[int, CycleWitness | None]:
    """Length of a longest cycle with a witness; ``(0, None)`` for forests."""
    dec = blocks(G)
    best, cyc = 0, None
    order = sorted(range(len(dec.blocks)), key=lambda i: -dec.blocks[i].bit_count())
    for i in order:
        b = dec.blocks[i]
        bx = (b & G.x_mask).bit_count()
        if 2 * min(bx, b.bit_count() - bx) <= best:
            continue
        length, nodes = _cycle_search(G.adj, b, G.x_mask, best, None)
        if nodes is not None:
            best, cyc = length, CycleWitness(nodes)
    return best, cyc


def has_cycle_at_least(G: BipartiteGraph, length: int) -> CycleWitness | None:
    """A cycle with at least ``length`` nodes, or None.  Stops at the first hit."""
    return cycle_at_least_adj(G.adj, G.all_mask, G.x_mask, length)


def cycle_at_least_adj(adj, allowed, xmask, length):
    _, nodes = _cycle_search(adj, allowed, xmask, max(length, 4) - 1, max(length, 4))
    return None if nodes is None else CycleWitness(nodes)


def _path_search(adj, allowed, xmask, starts, ends, best):
    """Longest path (in nodes) with first node in ``starts``, last in ``ends``."""
    state = {"best": best, "path": None}
    total_x = (allowed & xmask).bit_count()
    total_y = allowed.bit_count() - total_x

    def cap(nx_, ny_):
        return min(nx_ + ny_, 2 * min(nx_, ny_) + 1)

    def dfs(v, visited, path, px, py):
        if (ends >> v) & 1 and len(path) > state["best"]:
            state["best"] = len(path)
            state["path"] = tuple(path)
        free = allowed & ~visited
        r = _reach(adj, v, free)
        if not r & ends:
            return
        rx = (r & xmask).bit_count()
        if cap(px + rx, py + r.bit_count() - rx) <= state["best"]:
            return
        cand = adj[v] & free
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            if (xmask >> w) & 1:
                dfs(w, visited | low, path, px + 1, py)
            else:
                dfs(w, visited | low, path, px, py + 1)
            path.pop()

    for s in iter_bits(starts & allowed):
        if cap(total_x, total_y) <= state["best"]:
            break
        sx = (xmask >> s) & 1
        dfs(s, 1 << s, [s], sx, 1 - sx)
    return state["best"], state["path"]


def longest_path(G: BipartiteGraph) -> tuple[int, tuple[int, ...]]:
    """Length in edges of a longest path, with its node sequence."""
    if G.num_nodes == 0:
        return 0, ()
    best, path = _path_search(G.adj, G.all_mask, G.x_mask, G.all_mask, G.all_mask, 0)
    return best - 1, path


def has_xy_path_at_least(G: BipartiteGraph, x: int, y: int, nodes: int) -> tuple[int, ...] | None:
    """An ``x``-``y`` path with at least ``nodes`` nodes, or None."""
    adj = G.adj
    target = 1 << y
    found: list[tuple[int, ...]] = []

    def dfs(v, visited, path):
        if v == y:
            if len(path) >= nodes:
                found.append(tuple(path))
                raise _Found
            return
        free = G.all_mask & ~visited
        r = _reach(adj, v, free)
        if not r & target or len(path) + r.bit_count() < nodes:
            return
        cand = adj[v] & free
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            dfs(w, visited | low, path)
            path.pop()

    try:
        dfs(x, 1 << x, [x])
    except _Found:
        return found[0]
    return None


# ---------------------------------------------------------------------------
# Berge objects via the incidence graph


def _witness_from_cycle(H: MultiHypergraph, nodes) -> BergeWitness:
    n = H.n
    i = next(j for j, v in enumerate(nodes) if v < n)
    nodes = nodes[i:] + nodes[:i]
    return BergeWitness("cycle", tuple(nodes[0::2]), tuple(v - n for v in nodes[1::2]))


def berge_circumference(H: MultiHypergraph) -> int:
    """Length of a longest Berge cycle: half the incidence-graph circumference."""
    return circumference(incidence_graph(H))[0] // 2


def berge_cycle(H: MultiHypergraph) -> BergeWitness | None:
    """A longest Berge cycle, read off a longest cycle of ``G(H)``."""
    _, cyc = circumference(incidence_graph(H))
    return None if cyc is None else _witness_from_cycle(H, cyc.nodes)


def has_berge_cycle_at_least(H: MultiHypergraph, k: int) -> BergeWitness | None:
    """A Berge cycle of length at least ``k`` (``k >= 2``), or None."""
    if H.num_edges < k:
        return None
    G = incidence_graph(H)
    cyc = has_cycle_at_least(G, 2 * k)
    return None if cyc is None else _witness_from_cycle(H, cyc.nodes)


def berge_path(H: MultiHypergraph) -> BergeWitness | None:
    """A longest Berge path: a longest path of ``G(H)`` with both ends on the vertex side."""
    if H.n == 0:
        return None
    G = incidence_graph(H)
    _, path = _path_search(G.adj, G.all_mask, G.x_mask, G.x_mask, G.x_mask, 0)
    n = H.n
    return BergeWitness("path", tuple(path[0::2]), tuple(v - n for v in path[1::2]))


def longest_berge_path(H: MultiHypergraph) -> int:
    w = berge_path(H)
    return 0 if w is None else w.length


# ---------------------------------------------------------------------------
# direct backtracking on the hypergraph (independent of the incidence graph)


def direct_berge_cycle(H: MultiHypergraph, at_least: int | None = None) -> BergeWitness | None:
    """Longest Berge cycle by backtracking over base vertices and edges.

    The smallest base vertex is fixed as the starting point.  With
    ``at_least`` the search returns the first cycle of that length.
    """
    incident = [[j for j, e in enumerate(H.edges) if v in e] for v in range(H.n)]
    m = H.num_edges
    ceiling = min(m, H.n)  # a cycle uses distinct edges and distinct base vertices
    best: list = [1 if at_least is None else at_least - 1, None]

    def grow(v0, bases, used_edges, edges):
        v = bases[-1]
        # vertices still available as bases: those above v0 not yet used
        spare_vertices = H.n - v0 - len(bases)
        for j in incident[v]:
            if j in used_edges:
                continue
            e = H.edges[j]
            if len(edges) >= 1 and v0 in e and len(edges) + 1 > best[0]:
                best[0] = len(edges) + 1
                best[1] = BergeWitness("cycle", tuple(bases), tuple(edges + [j]))
                if at_least is not None or best[0] >= ceiling:
                    raise _Found
            if len(edges) + 1 + min(m - len(used_edges) - 1, spare_vertices) <= best[0]:
                continue
            for w in sorted(e):
                if w > v0 and w not in bases:
                    bases.append(w)
                    edges.append(j)
                    used_edges.add(j)
                    grow(v0, bases, used_edges, edges)
                    used_edges.discard(j)
                    edges.pop()
                    bases.pop()

    try:
        for v0 in range(H.n):
            grow(v0, [v0], set(), [])
    except _Found:
        pass
    return best[1]


def direct_berge_path(H: MultiHypergraph, at_least: int | None = None) -> BergeWitness | None:
    """Longest Berge path by backtracking (length 0 for a lone vertex)."""
    incident = [[j for j, e in enumerate(H.edges) if v in e] for v in range(H.n)]
    m = H.num_edges
    best: list = [-1 if at_least is None else at_least - 1, None]

    def grow(bases, used_edges, edges):
        if len(edges) > best[0]:
            best[0] = len(edges)
            best[1] = BergeWitness("path", tuple(bases), tuple(edges))
            if at_least is not None:
                raise _Found
        if len(edges) + (m - len(used_edges)) <= best[0]:
            return
        v = bases[-1]
        for j in incident[v]:
            if j in used_edges:
                continue
            for w in sorted(H.edges[j]):
                if w not in bases:
                    bases.append(w)
                    edges.append(j)
                    used_edges.add(j)
                    grow(bases, used_edges, edges)
                    used_edges.discard(j)
                    edges.pop()
                    bases.pop()

    try:
        for v0 in range(H.n):
            grow([v0], set(), [])
    except _Found:
        pass
    return best[1]


# ---------------------------------------------------------------------------
# 2k-saturation


def _require_regime(G: BipartiteGraph, k: int) -> None:
    if has_cycle_at_least(G, 2 * k) is not None:
        raise NotInRegime(f"not in the c(G)<2k regime (k={k})")


def _closes_long_cycle(G: BipartiteGraph, x: int, y: int, k: int) -> bool:
    # with c(G) < 2k every cycle of length >= 2k in G + xy runs through xy
    return has_xy_path_at_least(G, x, y, 2 * k) is not None


def is_saturated(G: BipartiteGraph, k: int) -> bool:
    """True iff adding any missing X-Y pair creates a cycle of length >= 2k."""
    _require_regime(G, k)
    for x in G.x_nodes:
        for y in iter_bits(G.y_mask & ~G.adj[x]):
            if not _closes_long_cycle(G, x, y, k):
                return False
    return True


def saturate(G: BipartiteGraph, k: int) -> BipartiteGraph:
    """Add X-Y pairs in lexicographic order while ``c < 2k`` is kept.

    A pair that would close a long cycle keeps doing so in every
    supergraph, so one pass reaches the same fixed point as rescanning
    from the start after each addition.
    """
    _require_regime(G, k)
    for x in G.x_nodes:
        for y in G.y_nodes:
            if G.has_edge(x, y):
                continue
            if not _closes_long_cycle(G, x, y, k):
                G = G.add_edges([(x, y)])
    return G
