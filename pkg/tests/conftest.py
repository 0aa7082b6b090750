"""Shared seeded generators for the test suite."""

from __future__ import annotations

import random

import pytest

from berge_lab.bigraph import BipartiteGraph
from berge_lab.hypercore import MultiHypergraph

SEED = 20240611


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_bipartite(rng: random.Random, m: int, n: int, p: float) -> BipartiteGraph:
    edges = [(x, y) for x in range(m) for y in range(n) if rng.random() < p]
    return BipartiteGraph.from_edges(m, n, edges)


def random_2_connected(rng: random.Random, max_part: int = 8, extra: float = 0.1) -> BipartiteGraph:
    """Ear decomposition: an even cycle, then ears between existing nodes.

    An ear is a fresh path between two distinct existing nodes (odd
    interior count when the ends share a side, even otherwise), so the
    graph stays bipartite and 2-connected.  Random chords are added last.
    """
    half = rng.randint(2, min(4, max_part))
    count = {"x": half, "y": half}
    edges = {(i, i) for i in range(half)} | {((i + 1) % half, i) for i in range(half)}
    for _ in range(rng.randint(0, 5)):
        sa, sb = rng.choice("xy"), rng.choice("xy")
        a, b = (sa, rng.randrange(count[sa])), (sb, rng.randrange(count[sb]))
        if a == b:
            continue
        interior = rng.choice([1, 3]) if sa == sb else rng.choice([0, 2])
        # interior nodes alternate sides, starting opposite to a
        need = {"x": 0, "y": 0}
        side = sa
        for _i in range(interior):
            side = "y" if side == "x" else "x"
            need[side] += 1
        if any(count[s] + need[s] > max_part for s in "xy"):
            continue
        cur, path = a, [a]
        for _i in range(interior):
            side = "y" if cur[0] == "x" else "x"
            cur = (side, count[side])
            count[side] += 1
            path.append(cur)
        path.append(b)
        for u, v in zip(path, path[1:]):
            x, y = (u, v) if u[0] == "x" else (v, u)
            edges.add((x[1], y[1]))
    m, n = count["x"], count["y"]
    for x in range(m):
        for y in range(n):
            if rng.random() < extra:
                edges.add((x, y))
    return BipartiteGraph.from_edges(m, n, sorted(edges))


def random_path(rng: random.Random, G: BipartiteGraph, min_nodes: int = 2) -> list[int] | None:
    """A random self-avoiding walk, extended greedily until stuck."""
    starts = [v for v in range(G.num_nodes) if G.degree(v) > 0]
    if not starts:
        return None
    for _ in range(20):
        v = rng.choice(starts)
        P = [v]
        seen = {v}
        while True:
            nbrs = [w for w in G.neighbors(P[-1]) if w not in seen]
            if not nbrs or (len(P) >= min_nodes and rng.random() < 0.15):
                break
            w = rng.choice(nbrs)
            P.append(w)
            seen.add(w)
        if len(P) >= min_nodes:
            return P
    return None


def random_hypergraph(rng: random.Random, n: int, m: int, sizes=(2, 5)) -> MultiHypergraph:
    lo, hi = sizes
    edges = [rng.sample(range(n), rng.randint(lo, min(hi, n))) for _ in range(m)]
    return MultiHypergraph(n, edges)


def pytest_terminal_summary(terminalreporter):
    """Print the acceptance verdict lines collected by ``test_acceptance``."""
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
