"""Multi-hypergraphs, their incidence graphs, hyperblocks and block-trees."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bigraph import BipartiteGraph, blocks, components, iter_bits

__all__ = [
    "MultiHypergraph",
    "BergeWitness",
    "Hyperblock",
    "HyperblockDecomposition",
    "lower_rank",
    "max_multiplicity",
    "incidence_graph",
    "hyperblocks",
    "is_block",
    "is_block_tree",
    "block_groups",
]


@dataclass(frozen=True)
class MultiHypergraph:
    """Vertices ``0..n-1`` and an ordered list of hyperedges.

    Edges are stored positionally, so two copies of the same vertex set
    are two distinct edges that a Berge path or cycle may both use.
    Each edge is a frozenset of 0-based vertices.
    """

    n: int
    edges: tuple[frozenset[int], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        es = tuple(frozenset(e) for e in edges)
        for i, e in enumerate(es):
            if not e:
                raise ValueError(f"edge {i} is empty")
            if min(e) < 0 or max(e) >= n:
                raise ValueError(f"edge {i} has a vertex outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_one_based(cls, n: int, edges: Iterable[Iterable[int]]) -> "MultiHypergraph":
        return cls(n, ([v - 1 for v in e] for e in edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def one_based_edges(self) -> list[list[int]]:
        return [sorted(v + 1 for v in e) for e in self.edges]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    def edge_masks(self) -> list[int]:
        out = []
        for e in self.edges:
            mask = 0
            for v in e:
                mask |= 1 << v
            out.append(mask)
        return out

    def sub(self, edge_ids: Sequence[int]) -> "MultiHypergraph":
        """Same vertex set, only the chosen edges (in the given order)."""
        return MultiHypergraph(self.n, (self.edges[i] for i in edge_ids))

    def __repr__(self) -> str:
        return f"MultiHypergraph(n={self.n}, edges={self.one_based_edges()})"


@dataclass(frozen=True)
class BergeWitness:
    """A Berge path or cycle: base vertices plus one distinct edge per step.

    For a path of length ``k`` there are ``k + 1`` base vertices and edge
    ``i`` joins base vertices ``i`` and ``i + 1``; for a cycle there are
    ``k`` base vertices and the indices wrap around.
    """

    kind: str
    base_vertices: tuple[int, ...]
    edge_assignment: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_assignment)

    def validate(self, H: MultiHypergraph) -> None:
        """Raise ``ValueError`` if this is not a Berge path/cycle of ``H``."""
        bv, ea = self.base_vertices, self.edge_assignment
        if self.kind == "path":
            if len(bv) != len(ea) + 1:
                raise ValueError("a Berge path of length k has k + 1 base vertices")
            pairs = [(bv[i], bv[i + 1]) for i in range(len(ea))]
        elif self.kind == "cycle":
            if len(bv) != len(ea) or len(ea) < 2:
                raise ValueError("a Berge cycle of length k >= 2 has k base vertices")
            pairs = [(bv[i], bv[(i + 1) % len(bv)]) for i in range(len(ea))]
        else:
            raise ValueError(f"unknown kind {self.kind!r}")
        if len(set(bv)) != len(bv):
            raise ValueError("base vertices repeat")
        if len(set(ea)) != len(ea):
            raise ValueError("edges repeat")
        for (a, b), i in zip(pairs, ea):
            if not 0 <= i < H.num_edges:
                raise ValueError(f"edge index {i} out of range")
            if a not in H.edges[i] or b not in H.edges[i]:
                raise ValueError(f"edge {i} does not contain both {a} and {b}")

    def drop_last_edge(self) -> "BergeWitness":
        """A cycle of length l >= 2 minus its closing edge: a path of length l - 1."""
        if self.kind != "cycle":
            raise ValueError("only cycles can be opened")
        return BergeWitness(
            "path", self.base_vertices[1:] + self.base_vertices[:1], self.edge_assignment[1:]
        )


# ---------------------------------------------------------------------------
# simple parameters


def lower_rank(H: MultiHypergraph) -> int:
    """Size of a smallest edge."""
    if not H.edges:
        raise ValueError("no edges")
    return min(len(e) for e in H.edges)


def max_multiplicity(H: MultiHypergraph) -> int:
    """Largest number of identical copies of one edge; 0 when edgeless."""
    if not H.edges:
        return 0
    return max(Counter(H.edges).values())


def incidence_graph(H: MultiHypergraph) -> BipartiteGraph:
    """Bipartite graph with X = vertices and Y = edge slots of ``H``.

    Labels are ``("v", i)`` for vertex ``i`` and ``("e", j)`` for edge slot ``j``.
    """
    n, m = H.n, H.num_edges
    adj = [0] * (n + m)
    for j, e in enumerate(H.edges):
        gy = n + j
        for v in e:
            adj[v] |= 1 << gy
            adj[gy] |= 1 << v
    labels = tuple(("v", i) for i in range(n)) + tuple(("e", j) for j in range(m))
    return BipartiteGraph(n, m, tuple(adj), labels)


# ---------------------------------------------------------------------------
# hyperblocks


@dataclass(frozen=True)
class Hyperblock:
    """One biconnected component of the incidence graph, read back as a hypergraph.

    ``vertices`` and ``edge_ids`` refer to the parent hypergraph.  The
    ``hypergraph`` field relabels the block's vertices to ``0..len-1``
    and restricts each edge to them.  ``degenerate`` marks a single
    vertex-edge incidence (a bridge of the incidence graph).
    """

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    hypergraph: MultiHypergraph
    shared: tuple[tuple[str, int], ...]
    degenerate: bool


@dataclass(frozen=True)
class HyperblockDecomposition:
    blocks: tuple[Hyperblock, ...]
    cut_vertices: tuple[tuple[str, int], ...]
    connected: bool
    num_components: int

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def hyperblocks(H: MultiHypergraph) -> HyperblockDecomposition:
    """Biconnected components of ``G(H)``, translated back into sub-hypergraphs.

    Works per connected component; ``connected`` is False when the
    incidence graph has more than one component (isolated vertices count).
    Cut vertices are reported as ``("X", vertex)`` or ``("Y", edge_id)``.
    """
    G = incidence_graph(H)
    dec = blocks(G)
    n = H.n

    def tag(v):
        return ("X", v) if v < n else ("Y", v - n)

    cut = set(dec.cut_vertices)
    out = []
    for mask, edge_list in zip(dec.blocks, dec.block_edges):
        nodes = list(iter_bits(mask))
        vs = tuple(v for v in nodes if v < n)
        es = tuple(v - n for v in nodes if v >= n)
        pos = {v: i for i, v in enumerate(vs)}
        restricted = [[pos[v] for v in H.edges[j] if v in pos] for j in es]
        out.append(
            Hyperblock(
                vertices=vs,
                edge_ids=es,
                hypergraph=MultiHypergraph(len(vs), restricted),
                shared=tuple(tag(v) for v in nodes if v in cut),
                degenerate=len(edge_list) == 1,
            )
        )
    ncomp = len(components(G))
    return HyperblockDecomposition(
        tuple(out), tuple(tag(v) for v in dec.cut_vertices), ncomp == 1, ncomp
    )


def _check_block_params(r: int, k: int) -> None:
    if r < k + 1:
        raise ValueError("definition requires r >= k+1")


def is_block(H: MultiHypergraph, r: int, k: int, *, require_2_connected: bool = True) -> bool:
    """Is ``H`` an (r+1, k-1)-block?

    Exactly ``r + 1`` vertices, ``k - 1`` edges, lower rank at least ``r``
    and, unless ``require_2_connected`` is False, a 2-connected
    incidence graph.
    """
    _check_block_params(r, k)
    if H.n != r + 1 or H.num_edges != k - 1:
        return False
    if lower_rank(H) < r:
        return False
    if not require_2_connected:
        return True
    from .bigraph import is_2_connected

    return is_2_connected(incidence_graph(H))


def is_block_tree(H: MultiHypergraph, r: int, k: int, *, strict: bool = True) -> bool:
    """Is ``H`` an (r+1, k-1)-block-tree?

    ``strict`` reads the definition through the incidence graph: ``H``
    is connected, every hyperblock is a 2-connected (r+1, k-1)-block and
    every cut vertex of ``G(H)`` is a hypergraph vertex.

    With ``strict=False`` the edges are grouped instead (see
    :func:`block_groups`): each group must have ``k - 1`` edges spanning
    exactly ``r + 1`` vertices, and the groups must be glued along single
    vertices into a tree.  This admits blocks such as ``{A, A, B}`` whose
    incidence graph has a cut vertex on the edge side; they meet the
    bound with equality too.
    """
    _check_block_params(r, k)
    if not H.edges or lower_rank(H) < r:
        return False
    if not strict:
        return _is_loose_block_tree(H, r, k)
    dec = hyperblocks(H)
    if not dec.connected:
        return False
    if any(side != "X" for side, _ in dec.cut_vertices):
        return False
    for hb in dec.blocks:
        if hb.degenerate:
            return False
        # cut vertices lie in X, so every hyperblock holds its edges whole
        if any(len(H.edges[j]) != len(hb.hypergraph.edges[i]) for i, j in enumerate(hb.edge_ids)):
            return False
        if not is_block(hb.hypergraph, r, k):
            return False
    return True


def block_groups(H: MultiHypergraph, min_overlap: int = 2) -> list[list[int]]:
    """Partition edge ids by the transitive closure of ``|e & f| >= min_overlap``."""
    m = H.num_edges
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    masks = H.edge_masks()
    for i in range(m):
        for j in range(i + 1, m):
            if (masks[i] & masks[j]).bit_count() >= min_overlap:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _is_loose_block_tree(H: MultiHypergraph, r: int, k: int) -> bool:
    masks = H.edge_masks()
    groups = block_groups(H)
    unions = []
    for g in groups:
        if len(g) != k - 1:
            return False
        u = 0
        for i in g:
            u |= masks[i]
        if u.bit_count() != r + 1:
            return False
        unions.append(u)
    # group/vertex incidence must be a spanning tree
    covered = 0
    for u in unions:
        covered |= u
    if covered != (1 << H.n) - 1:
        return False
    incidences = sum(u.bit_count() for u in unions)
    if incidences != len(unions) + H.n - 1:
        return False
    # connectivity of the group/vertex incidence graph
    reach = unions[0]
    seen = {0}
    changed = True
    while changed:
        changed = False
        for i, u in enumerate(unions):
            if i not in seen and u & reach:
                seen.add(i)
                reach |= u
                changed = True
    return len(seen) == len(unions)
