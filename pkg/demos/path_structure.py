"""Path decorations, crossing pairs, the long-cycle construction and peeling.

Run with ``python3 demos/path_structure.py``.
"""

from __future__ import annotations

import random

from berge_lab.bigraph import BipartiteGraph
from berge_lab.circumference import circumference, saturate
from berge_lab.structure import decorate, disintegrate_trace, lemma_cycle_bound, long_cycle_from_path


def names(G, nodes):
    return " ".join(f"{G.side(v).lower()}{G.local(v) + 1}" for v in nodes)


def main():
    G = BipartiteGraph.cycle(6)
    P = [0, 3, 1, 4, 2, 5]
    d = decorate(G, P)
    print("C6 with the Hamiltonian path", names(G, P))
    print("  neighbours of the first end on P (indices):", d.n_first)
    print("  neighbours of the last end on P (indices): ", d.n_last)
    print("  crossing pairs:", d.pairs)
    w = long_cycle_from_path(G, P)
    print(f"  cycle found: {names(G, w.nodes)} (length {w.length}, guaranteed {lemma_cycle_bound(G, P)})")

    rng = random.Random(3)
    edges = [(x, y) for x in range(6) for y in range(6) if rng.random() < 0.45]
    H = BipartiteGraph.from_edges(6, 6, edges)
    print(f"\nA random 6x6 graph with {H.num_edges} edges, circumference {circumference(H)[0]}")
    for alpha in range(4):
        keep, removed = disintegrate_trace(H, alpha, alpha)
        core = H.induced(keep)
        print(f"  alpha={alpha}: core keeps {core.num_nodes:>2} nodes, peeled in order: {names(H, removed) or '-'}")

    print("\nSaturating C6 for k=4 (no cycle of length >= 8 may appear):")
    S = saturate(G, 4)
    print(f"  edges {G.num_edges} -> {S.num_edges}; complete K33: {S == BipartiteGraph.complete(3, 3)}")


if __name__ == "__main__":
    main()
