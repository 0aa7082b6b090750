"""Deterministic generators for the extremal families, and the apex lift.

Vertices are 0-based internally; docstrings describe them 1-based
(``v_1 .. v_n``) to match the external file formats.
"""

from __future__ import annotations

from typing import Sequence

from .bigraph import BipartiteGraph
from .bounds import Frame
from .hypercore import MultiHypergraph

__all__ = [
    "make_block",
    "make_block_tree",
    "make_star",
    "make_ht",
    "make_t1_family",
    "lift_for_paths",
]


def _check_rk(r: int, k: int) -> None:
    if k < 4:
        raise ValueError("k must be at least 4")
    if r < k + 1:
        raise ValueError("r must be at least k+1")


def make_block(r: int, k: int, *, full_edges: int = 0) -> MultiHypergraph:
    """Canonical (r+1, k-1)-block on ``v_1 .. v_{r+1}``.

    Edge ``i`` (``i = 1..k-1``) is every vertex except ``v_i``.  With
    ``full_edges = f`` the last ``f`` edges are replaced by the whole
    vertex set instead (size ``r + 1``), which the definition also allows.
    """
    _check_rk(r, k)
    if not 0 <= full_edges <= k - 1:
        raise ValueError("full_edges must lie in 0..k-1")
    everything = range(r + 1)
    edges = []
    for i in range(k - 1):
        if i >= k - 1 - full_edges:
            edges.append(everything)
        else:
            edges.append([v for v in everything if v != i])
    return MultiHypergraph(r + 1, edges)


def make_block_tree(r: int, k: int, blocks: int, shape: str | Sequence[int] = "path") -> MultiHypergraph:
    """Glue ``blocks`` canonical blocks along single vertices.

    ``shape`` chooses the block each new block attaches to: ``"path"``
    (the previous one), ``"star"`` (always the first) or an explicit
    list whose ``i``-th entry is the parent of block ``i + 1``
    (0-based, each parent earlier than its child).  The shared vertex
    is the highest-indexed vertex of the parent block; for ``"star"``
    every block therefore meets block 0 in the same vertex.
    Produces ``n = blocks*r + 1`` vertices and ``blocks*(k-1)`` edges.
    """
    _check_rk(r, k)
    if blocks < 1:
        raise ValueError("need at least one block")
    if shape == "path":
        parents = list(range(blocks - 1))
    elif shape == "star":
        parents = [0] * (blocks - 1)
    elif isinstance(shape, str):
        raise ValueError(f"unknown shape {shape!r}")
    else:
        parents = list(shape)
        if len(parents) != blocks - 1 or any(not 0 <= p <= i for i, p in enumerate(parents)):
            raise ValueError("seed list must give, for block i+1, a parent in 0..i")
    base = make_block(r, k)
    vertex_sets: list[list[int]] = [list(range(r + 1))]
    edges = [sorted(e) for e in base.edges]
    n = r + 1
    for child in range(1, blocks):
        glue = max(vertex_sets[parents[child - 1]])
        fresh = list(range(n, n + r))
        n += r
        # local vertex r (the highest) becomes the glue vertex
        local = fresh + [glue]
        vertex_sets.append(local)
        for e in base.edges:
            edges.append(sorted(local[v] for v in e))
    return MultiHypergraph(n, edges)


def make_star(n: int, r: int) -> MultiHypergraph:
    """``e_i = {v_i} u {v_n, ..., v_{n-r+2}}`` for ``i = 1..n-r+1``; Berge circumference ``r - 1``."""
    if r < 3:
        raise ValueError("r must be at least 3")
    if n <= r:
        raise ValueError("need n > r")
    core = list(range(n - r + 1, n))
    return MultiHypergraph(n, ([i] + core for i in range(n - r + 1)))


def make_ht(k: int, r: int, t: int) -> MultiHypergraph:
    """``(k-1)/2`` copies of ``V_i u {a, b}`` for disjoint ``V_1..V_t`` of size ``r - 2``.

    ``a, b`` are ``v_1, v_2``; ``V_i`` follows in order.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be odd and at least 3")
    if r < 4:
        raise ValueError("r must be at least 4")
    if t < 1:
        raise ValueError("t must be at least 1")
    n = 2 + t * (r - 2)
    edges = []
    for i in range(t):
        e = [0, 1] + list(range(2 + i * (r - 2), 2 + (i + 1) * (r - 2)))
        edges += [e] * ((k - 1) // 2)
    return MultiHypergraph(n, edges)


def make_t1_family(r: int, k: int, s: int, t: int) -> Frame:
    """Chain of ``s`` copies of ``K_{k-1,r}`` then ``t`` of ``K_{k-1,r+1}``.

    Consecutive blocks share one Y-node; every X-node lies in exactly one
    block and ``X* = X``.  Sizes: ``m = (s+t)(k-1)``,
    ``n = s(r-1) + t*r + 1``.
    """
    _check_rk(r, k)
    if s < 0 or t < 0 or s + t < 1:
        raise ValueError("need s, t >= 0 and s + t >= 1")
    sizes = [r] * s + [r + 1] * t
    m = (s + t) * (k - 1)
    n = 1 + sum(sz - 1 for sz in sizes)
    edges = []
    shared = 0  # local Y index carried over from the previous block
    next_y = 0
    for bi, sz in enumerate(sizes):
        if bi == 0:
            ys = list(range(sz))
            next_y = sz
        else:
            ys = [shared] + list(range(next_y, next_y + sz - 1))
            next_y += sz - 1
        shared = ys[-1]
        for x in range(bi * (k - 1), (bi + 1) * (k - 1)):
            edges += [(x, y) for y in ys]
    G = BipartiteGraph.from_edges(m, n, edges)
    return Frame.full(G, r)


def lift_for_paths(H: MultiHypergraph) -> MultiHypergraph:
    """Add a new vertex ``v_{n+1}`` to every edge."""
    return MultiHypergraph(H.n + 1, (set(e) | {H.n} for e in H.edges))
