"""Bipartite graphs with fixed part labels.

Nodes carry one global index: X-nodes are ``0..m-1`` and Y-nodes are
``m..m+n-1``.  Adjacency rows are Python ints used as bitmasks over the
global indices, which keeps the exhaustive searches in
:mod:`berge_lab.circumference` cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BipartiteGraph",
    "BlockDecomposition",
    "blocks",
    "is_2_connected",
    "is_connected",
    "components",
    "find_uu_path",
    "iter_bits",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BipartiteGraph:
    """A simple bipartite graph ``G = (X, Y; E)``.

    ``labels`` optionally maps each global node to an identifier in a
    source object (the node it came from in a larger graph, a hypergraph
    vertex, an edge slot, ...).  It does not take part in equality.
    """

    m: int
    n: int
    adj: tuple[int, ...]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("part sizes must be nonnegative")
        if len(self.adj) != self.m + self.n:
            raise ValueError("adjacency length does not match m + n")
        xmask = (1 << self.m) - 1
        ymask = ((1 << self.n) - 1) << self.m
        for v, row in enumerate(self.adj):
            if row & ~(ymask if v < self.m else xmask):
                raise ValueError(f"node {v} has an edge inside its own part")
            for w in iter_bits(row):
                if not (self.adj[w] >> v) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {w})")
        if self.labels is not None and len(self.labels) != self.m + self.n:
            raise ValueError("labels length does not match m + n")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        m: int,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple | None = None,
    ) -> "BipartiteGraph":
        """Build from part-local pairs ``(x, y)`` with ``0 <= x < m``, ``0 <= y < n``.

        Repeated pairs collapse; the graph is simple.
        """
        adj = [0] * (m + n)
        for x, y in edges:
            if not (0 <= x < m and 0 <= y < n):
                raise ValueError(f"edge ({x}, {y}) out of range for parts {m}, {n}")
            gy = m + y
            adj[x] |= 1 << gy
            adj[gy] |= 1 << x
        return cls(m, n, tuple(adj), labels)

    @classmethod
    def complete(cls, m: int, n: int) -> "BipartiteGraph":
        return cls.from_edges(m, n, ((x, y) for x in range(m) for y in range(n)))

    @classmethod
    def path(cls, num_nodes: int) -> "BipartiteGraph":
        """The path on ``num_nodes`` nodes; odd positions (1st, 3rd, ...) go to X."""
        m = (num_nodes + 1) // 2
        n = num_nodes // 2
        edges = []
        for i in range(num_nodes - 1):
            a, b = i, i + 1
            x, y = (a // 2, b // 2) if a % 2 == 0 else (b // 2, a // 2)
            edges.append((x, y))
        return cls.from_edges(m, n, edges)

    @classmethod
    def cycle(cls, length: int) -> "BipartiteGraph":
        """The even cycle ``x0 y0 x1 y1 ...`` on ``length`` nodes."""
        if length < 4 or length % 2:
            raise ValueError("bipartite cycles have even length >= 4")
        h = length // 2
        edges = [(i, i) for i in range(h)] + [((i + 1) % h, i) for i in range(h)]
        return cls.from_edges(h, h, edges)

    # -- basic queries ------------------------------------------------------

    @property
    def num_nodes(self) -> int:
        return self.m + self.n

    @property
    def x_nodes(self) -> range:
        return range(self.m)

    @property
    def y_nodes(self) -> range:
        return range(self.m, self.m + self.n)

    @property
    def x_mask(self) -> int:
        return (1 << self.m) - 1

    @property
    def y_mask(self) -> int:
        return ((1 << self.n) - 1) << self.m

    @property
    def all_mask(self) -> int:
        return (1 << (self.m + self.n)) - 1

    def side(self, v: int) -> str:
        if not 0 <= v < self.num_nodes:
            raise ValueError(f"node {v} out of range")
        return "X" if v < self.m else "Y"

    def local(self, v: int) -> int:
        """Part-local index of global node ``v``."""
        return v if v < self.m else v - self.m

    def y(self, j: int) -> int:
        """Global index of the ``j``-th Y-node."""
        return self.m + j

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    @property
    def num_edges(self) -> int:
        return sum(self.adj[x].bit_count() for x in range(self.m))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as global ``(x, y)`` pairs in lexicographic order."""
        return [(x, y) for x in range(self.m) for y in iter_bits(self.adj[x])]

    def local_edges(self) -> list[tuple[int, int]]:
        return [(x, y - self.m) for x, y in self.edges()]

    def label(self, v: int):
        return v if self.labels is None else self.labels[v]

    # -- derived graphs -------------------------------------------------------

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        """Return a copy with the given global ``(x, y)`` pairs added."""
        adj = list(self.adj)
        for u, v in pairs:
            if (u < self.m) == (v < self.m):
                raise ValueError(f"pair ({u}, {v}) lies inside one part")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return BipartiteGraph(self.m, self.n, tuple(adj), self.labels)

    def remove_nodes(self, nodes: Iterable[int]) -> "BipartiteGraph":
        """Induced subgraph on the complement of ``nodes``."""
        drop = 0
        for v in nodes:
            drop |= 1 << v
        return self.induced(self.all_mask & ~drop)

    def induced(self, keep: int | Iterable[int]) -> "BipartiteGraph":
        """Induced subgraph on ``keep`` (bitmask or iterable), relabelled.

        Labels of the result point at the labels of this graph, so chains
        of subgraphs keep referring to the original nodes.
        """
        if not isinstance(keep, int):
            mask = 0
            for v in keep:
                mask |= 1 << v
            keep = mask
        xs = [v for v in iter_bits(keep & self.x_mask)]
        ys = [v for v in iter_bits(keep & self.y_mask)]
        order = xs + ys
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            row = 0
            for w in iter_bits(self.adj[v] & keep):
                row |= 1 << pos[w]
            adj.append(row)
        labels = tuple(self.label(v) for v in order)
        return BipartiteGraph(len(xs), len(ys), tuple(adj), labels)

    def transpose(self) -> "BipartiteGraph":
        """Swap the roles of X and Y."""
        order = list(self.y_nodes) + list(self.x_nodes)
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            row = 0
            for w in iter_bits(self.adj[v]):
                row |= 1 << pos[w]
            adj.append(row)
        labels = None if self.labels is None else tuple(self.labels[v] for v in order)
        return BipartiteGraph(self.n, self.m, tuple(adj), labels)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.num_nodes))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"BipartiteGraph(m={self.m}, n={self.n}, edges={self.local_edges()})"


# ---------------------------------------------------------------------------
# connectivity


def components(G: BipartiteGraph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by least node."""
    rest = G.all_mask if within is None else within
    out = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(G: BipartiteGraph) -> bool:
    return G.num_nodes > 0 and len(components(G)) == 1


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components of a graph.

    ``blocks`` holds node bitmasks; ``block_edges`` the matching edge lists
    (global ``(x, y)`` pairs).  Isolated nodes belong to no block.
    """

    blocks: tuple[int, ...]
    block_edges: tuple[tuple[tuple[int, int], ...], ...]
    cut_vertices: tuple[int, ...]
    graph: BipartiteGraph

    def part_sizes(self, i: int) -> tuple[int, int]:
        b = self.blocks[i]
        return (b & self.graph.x_mask).bit_count(), (b & self.graph.y_mask).bit_count()

    def cut_sides(self) -> list[tuple[int, str]]:
        return [(v, self.graph.side(v)) for v in self.cut_vertices]

    def subgraph(self, i: int) -> BipartiteGraph:
        """The block as a graph (its own edges only, nodes relabelled)."""
        return self.graph.induced(self.blocks[i])

    def __len__(self) -> int:
        return len(self.blocks)


def blocks(G: BipartiteGraph) -> BlockDecomposition:
    """Iterative Hopcroft-Tarjan biconnected components."""
    N = G.num_nodes
    disc = [-1] * N
    low = [0] * N
    time = 0
    found_blocks: list[int] = []
    found_edges: list[tuple[tuple[int, int], ...]] = []
    cut = set()

    for root in range(N):
        if disc[root] != -1 or G.adj[root] == 0:
            continue
        disc[root] = low[root] = time
        time += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(iter_bits(G.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = time
                    time += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(iter_bits(G.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                mask = 0
                comp_edges = []
                while True:
                    a, b = edge_stack.pop()
                    mask |= (1 << a) | (1 << b)
                    comp_edges.append((a, b) if a < b else (b, a))
                    if (a, b) == (parent, v):
                        break
                found_blocks.append(mask)
                found_edges.append(tuple(sorted(comp_edges)))
        if root_children > 1:
            cut.add(root)

    order = sorted(range(len(found_blocks)), key=lambda i: _mask_key(found_blocks[i]))
    return BlockDecomposition(
        tuple(found_blocks[i] for i in order),
        tuple(found_edges[i] for i in order),
        tuple(sorted(cut)),
        G,
    )


def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def is_2_connected(G: BipartiteGraph) -> bool:
    """Connected, at least 3 nodes, no cut vertex."""
    if G.num_nodes < 3 or not is_connected(G):
        return False
    return len(blocks(G).blocks) == 1


# ---------------------------------------------------------------------------
# U,U-paths


def find_uu_path(
    G: BipartiteGraph, U: Iterable[int], x: int, y: int
) -> list[int] | None:
    """A path with both ends in ``U``, no internal node in ``U``, through edge ``xy``.

    Two node-disjoint paths are routed from ``{x, y}`` to ``U`` with a
    unit-capacity flow; joining them across ``xy`` gives the path.
    Returns ``None`` when no such path exists, which in a 2-connected
    graph does not happen.
    """
    U = set(U)
    if not G.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    if len(U) < 2:
        raise ValueError("U needs at least two nodes")
    if x in U and y in U:
        raise ValueError("both ends of the edge lie in U")

    if y in U:
        x, y = y, x
    if x in U:
        # walk from y to U - {x} in G - x, stopping at the first U-node
        tail = _first_hit_path(G, y, U - {x}, banned={x})
        if tail is None:
            return None
        return [x] + tail

    legs = _two_disjoint_legs(G, x, y, U)
    if legs is None:
        return None
    leg_x, leg_y = legs
    return list(reversed(leg_x)) + leg_y


def _first_hit_path(G: BipartiteGraph, start: int, targets: set[int], banned: set[int]):
    if start in targets:
        return [start]
    prev = {start: None}
    queue = [start]
    for v in queue:
        for w in iter_bits(G.adj[v]):
            if w in prev or w in banned:
                continue
            prev[w] = v
            if w in targets:
                path = [w]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def _two_disjoint_legs(G: BipartiteGraph, x: int, y: int, U: set[int]):
    """Node-disjoint paths x->U and y->U (max-flow with node splitting).

    Node ``v`` becomes ``2v`` (in) and ``2v+1`` (out); ``S`` and ``T`` are
    extra terminals.  Nodes of ``U`` only drain into ``T``.
    """
    N = G.num_nodes
    S, T = 2 * N, 2 * N + 1
    cap: dict[tuple[int, int], int] = {}
    orig: set[tuple[int, int]] = set()
    nbrs: dict[int, list[int]] = {i: [] for i in range(2 * N + 2)}

    def arc(a, b):
        orig.add((a, b))
        cap[(a, b)] = 1
        cap.setdefault((b, a), 0)
        nbrs[a].append(b)
        nbrs[b].append(a)

    for v in range(N):
        arc(2 * v, 2 * v + 1)
        if v in U:
            arc(2 * v + 1, T)
            continue
        for w in iter_bits(G.adj[v]):
            arc(2 * v + 1, 2 * w)
    arc(S, 2 * x)
    arc(S, 2 * y)

    for _ in range(2):
        prev = {S: None}
        queue = [S]
        for a in queue:
            if a == T:
                break
            for b in nbrs[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if T not in prev:
            return None
        b = T
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a

    def carries(a, b):
        return (a, b) in orig and cap[(a, b)] == 0

    legs = []
    for start in (x, y):
        path = [start]
        v = start
        while v not in U:
            nxt = next((b // 2 for b in nbrs[2 * v + 1] if b < 2 * N and b % 2 == 0 and carries(2 * v + 1, b)), None)
            if nxt is None:
                return None
            path.append(nxt)
            v = nxt
        legs.append(path)
    return legs[0], legs[1]
