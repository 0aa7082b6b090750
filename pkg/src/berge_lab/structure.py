"""Path decorations, crossing formations, long cycles from paths, cores, path covers.

Path positions are 1-based throughout this module: for a path
``P = (v_1, ..., v_p)`` given as a sequence of global node ids, index
``i`` refers to ``P[i - 1]``.  Crossing pairs, the crossing-index chain
and every report use these positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .bigraph import BipartiteGraph, components, is_2_connected, iter_bits
from .circumference import CycleWitness, has_cycle_at_least

__all__ = [
    "PathDecoration",
    "decorate",
    "validate_path",
    "crossing_pairs",
    "crossing_chain",
    "is_crossing_formation",
    "SCFReport",
    "check_saturated_crossing_formation",
    "separation_check",
    "dispath_check",
    "long_cycle_from_path",
    "lemma_cycle_bound",
    "disintegrate",
    "mixed_disintegrate",
    "disintegrate_trace",
    "PathCover",
    "path_cover",
    "verify_path_cover",
    "check_lemma_c1",
    "HypothesisError",
]


class HypothesisError(ValueError):
    """A precondition of a structural check does not hold."""


def _mask(nodes: Iterable[int]) -> int:
    out = 0
    for v in nodes:
        out |= 1 << v
    return out


def validate_path(G: BipartiteGraph, P: Sequence[int]) -> None:
    if len(P) == 0:
        raise ValueError("empty path")
    if len(set(P)) != len(P):
        raise ValueError("path repeats a node")
    for v in P:
        if not 0 <= v < G.num_nodes:
            raise ValueError(f"node {v} out of range")
    for a, b in zip(P, P[1:]):
        if not G.has_edge(a, b):
            raise ValueError(f"consecutive path nodes {a}, {b} are not adjacent")


# ---------------------------------------------------------------------------
# decorations


@dataclass(frozen=True)
class PathDecoration:
    """A path together with the neighbourhoods of its two ends on the path.

    ``n_first`` / ``n_last`` are the 1-based positions of ``N_P(v_1)`` and
    ``N_P(v_p)``.
    """

    path: tuple[int, ...]
    n_first: tuple[int, ...]
    n_last: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    @property
    def p(self) -> int:
        return len(self.path)

    def node(self, i: int) -> int:
        return self.path[i - 1]

    def position(self, v: int) -> int:
        return self.path.index(v) + 1

    def shift_plus(self, S: Iterable[int]) -> set[int]:
        """``S^+``: successors on the path of the nodes of ``S`` (dropping ``v_p``)."""
        pos = {v: i for i, v in enumerate(self.path)}
        return {self.path[pos[v] + 1] for v in S if v in pos and pos[v] + 1 < len(self.path)}

    def shift_minus(self, S: Iterable[int]) -> set[int]:
        """``S^-``: predecessors on the path (dropping ``v_1``)."""
        pos = {v: i for i, v in enumerate(self.path)}
        return {self.path[pos[v] - 1] for v in S if v in pos and pos[v] > 0}

    def segment(self, i: int, j: int) -> tuple[int, ...]:
        """``P[v_i, v_j]`` in the order from ``v_i`` to ``v_j``."""
        if i <= j:
            return self.path[i - 1 : j]
        return tuple(reversed(self.path[j - 1 : i]))


def decorate(G: BipartiteGraph, P: Sequence[int]) -> PathDecoration:
    validate_path(G, P)
    P = tuple(P)
    x, y = P[0], P[-1]
    nf = tuple(i + 1 for i, v in enumerate(P) if G.has_edge(x, v))
    nl = tuple(i + 1 for i, v in enumerate(P) if G.has_edge(y, v))
    return PathDecoration(P, nf, nl, tuple(_pairs(G, P)))


def _pairs(G: BipartiteGraph, P: Sequence[int]) -> list[tuple[int, int]]:
    # linear scan: a crossing pair starts at an N(y)-position and the next
    # N(x) u N(y)-position after it must be an N(x)-position
    x, y = P[0], P[-1]
    marked = [i for i, v in enumerate(P, 1) if G.has_edge(x, v) or G.has_edge(y, v)]
    out = []
    for a, b in zip(marked, marked[1:]):
        if G.has_edge(y, P[a - 1]) and G.has_edge(x, P[b - 1]):
            out.append((a, b))
    return out


def crossing_pairs(G: BipartiteGraph, P: Sequence[int]) -> list[tuple[int, int]]:
    """All crossing pairs ``(i, j)``, ``i < j``, in index order.

    ``v_i`` is a neighbour of the last node, ``v_j`` of the first, and no
    position strictly between them neighbours either end.
    """
    if len(P) < 2:
        raise ValueError("path needs at least two nodes")
    validate_path(G, P)
    return _pairs(G, P)


def crossing_chain(pairs: Sequence[tuple[int, int]]) -> list[int] | None:
    """Indices ``i_0 < ... < i_q`` when the pairs are the links of one chain."""
    if not pairs:
        return None
    chain = [pairs[0][0], pairs[0][1]]
    for a, b in pairs[1:]:
        if a != chain[-1]:
            return None
        chain.append(b)
    return chain


def is_crossing_formation(G: BipartiteGraph, P: Sequence[int]) -> bool:
    """Crossing pairs are exactly the consecutive links of one chain (at least one pair)."""
    return crossing_chain(crossing_pairs(G, P)) is not None


# ---------------------------------------------------------------------------
# saturated crossing formation


@dataclass
class SCFReport:
    parts: dict[int, bool]
    witnesses: dict[int, str] = field(default_factory=dict)
    chain: list[int] | None = None

    @property
    def ok(self) -> bool:
        return all(self.parts.values())

    @property
    def first_violation(self) -> tuple[int, str] | None:
        for k in sorted(self.parts):
            if not self.parts[k]:
                return k, self.witnesses.get(k, "")
        return None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "parts": {str(k): v for k, v in sorted(self.parts.items())},
            "witnesses": {str(k): v for k, v in sorted(self.witnesses.items())},
            "chain": self.chain,
        }


def _complete(G: BipartiteGraph, nodes: int) -> tuple[bool, str]:
    xs = nodes & G.x_mask
    ys = nodes & G.y_mask
    for x in iter_bits(xs):
        miss = ys & ~G.adj[x]
        if miss:
            return False, f"nodes {x} and {(miss & -miss).bit_length() - 1} are not adjacent"
    return True, ""


def check_saturated_crossing_formation(G: BipartiteGraph, P: Sequence[int]) -> SCFReport:
    """Evaluate the five conditions separately.

    1. crossing formation with chain ``i_0 < ... < i_q``;
    2. ``G[{v_1..v_{i_0}} u I]`` and ``G[{v_{i_q}..v_p} u I]`` complete bipartite;
    3. with several crossing pairs, each pair has exactly 3 nodes between;
    4. some ``v_1'`` off ``P`` adjacent to ``v_2`` with ``N(v_1') = N(v_1)``,
       and some ``v_p'`` off ``P`` adjacent to ``v_{p-1}`` with
       ``N_P(v_p') = N_P(v_p)``;
    5. for even ``h <= i_0 - 2`` and ``u`` in ``N(v_h)``: ``N(u)`` inside
       ``N_P(v_1)``; symmetrically for even ``h >= i_q + 2`` against
       ``N_P(v_p)``; and odd positions ``<= i_0 - 1`` or ``>= i_q + 1``
       have all neighbours on ``P``.

    Here ``I = {v_{i_0}, ..., v_{i_q}}``.  Parts 2, 3 and 5 need the chain;
    when part 1 fails they are evaluated on the crossing pairs that do
    exist (first and last pair positions), or reported false if there are none.
    """
    d = decorate(G, P)
    path = d.path
    p = d.p
    pmask = _mask(path)
    parts: dict[int, bool] = {}
    wit: dict[int, str] = {}

    pairs = list(d.pairs)
    chain = crossing_chain(pairs)
    parts[1] = chain is not None
    if chain is None:
        wit[1] = "no crossing pairs" if not pairs else f"pairs {pairs} do not form one chain"
    idx = chain if chain is not None else sorted({i for pr in pairs for i in pr})
    report = SCFReport(parts, wit, chain)

    if not idx:
        for k in (2, 3, 5):
            parts[k] = False
            wit[k] = "no crossing pairs"
    else:
        i0, iq = idx[0], idx[-1]
        Imask = _mask(d.node(i) for i in idx)
        parts[2] = True
        for seg in (range(1, i0 + 1), range(iq, p + 1)):
            ok, why = _complete(G, _mask(d.node(i) for i in seg) | Imask)
            if not ok:
                parts[2], wit[2] = False, why
                break
        parts[3] = True
        if len(pairs) > 1:
            for a, b in pairs:
                if b - a - 1 != 3:
                    parts[3] = False
                    wit[3] = f"pair ({a}, {b}) has {b - a - 1} nodes between"
                    break
        parts[5] = True
        nf = _mask(d.node(i) for i in d.n_first)
        nl = _mask(d.node(i) for i in d.n_last)
        for h in range(1, p + 1):
            if h % 2 == 0 and (h <= i0 - 2 or h >= iq + 2):
                target = nf if h <= i0 - 2 else nl
                for u in iter_bits(G.adj[d.node(h)]):
                    if G.adj[u] & ~target:
                        parts[5] = False
                        wit[5] = f"neighbour {u} of v_{h} has a neighbour outside the end's path-neighbourhood"
                        break
            elif h % 2 == 1 and (h <= i0 - 1 or h >= iq + 1):
                if G.adj[d.node(h)] & ~pmask:
                    parts[5] = False
                    wit[5] = f"v_{h} has a neighbour off the path"
            if not parts[5]:
                break

    parts[4] = True
    if p < 3:
        parts[4] = False
        wit[4] = "path too short for v_2 and v_{p-1}"
    else:
        v1, v2, vp, vq = path[0], path[1], path[-1], path[-2]
        first = [u for u in iter_bits(G.adj[v2] & ~pmask) if G.adj[u] == G.adj[v1]]
        last = [u for u in iter_bits(G.adj[vq] & ~pmask) if G.adj[u] & pmask == G.adj[vp] & pmask]
        if not first:
            parts[4] = False
            wit[4] = "v_2 has no off-path neighbour twin of v_1"
        elif not last:
            parts[4] = False
            wit[4] = "v_{p-1} has no off-path neighbour matching v_p on the path"
    return report


def _lri(d: PathDecoration, chain: list[int]):
    i0, iq = chain[0], chain[-1]
    I = _mask(d.node(i) for i in chain)
    L = _mask(d.node(i) for i in range(1, i0 + 1)) & ~I
    R = _mask(d.node(i) for i in range(iq, d.p + 1)) & ~I
    H = _mask(d.node(i) for i in range(i0, iq + 1)) & ~I
    return I, L, R, H


def separation_check(G: BipartiteGraph, P: Sequence[int]) -> bool:
    """Do ``L - I``, ``R - I`` and ``H - I`` lie in three distinct components of ``G - I``?

    ``L = P[v_1, v_{i_0}]``, ``R = P[v_{i_q}, v_p]``, ``H`` the middle
    stretch.  An empty ``H - I`` (adjacent chain indices) imposes nothing.
    """
    rep = check_saturated_crossing_formation(G, P)
    if not rep.ok:
        raise HypothesisError(f"path is not in saturated crossing formation: {rep.first_violation}")
    d = decorate(G, P)
    I, L, R, H = _lri(d, rep.chain)
    comps = components(G, G.all_mask & ~I)

    def owners(S):
        return {i for i, c in enumerate(comps) if c & S}

    oL, oR, oH = owners(L), owners(R), owners(H)
    return not (oL & oR) and not (oL & oH) and not (oR & oH)


def dispath_check(G: BipartiteGraph, P: Sequence[int], k: int) -> bool:
    """Bound the internally disjoint paths between crossing-index nodes.

    With one crossing pair every such path has fewer than ``k + 1``
    nodes; with several, fewer than 6.  Checked by exhaustive search.
    """
    rep = check_saturated_crossing_formation(G, P)
    if not rep.ok:
        raise HypothesisError(f"path is not in saturated crossing formation: {rep.first_violation}")
    d = decorate(G, P)
    chain = rep.chain
    limit = k + 1 if len(chain) == 2 else 6
    off = G.all_mask & ~_mask(d.path)
    for s, t in combinations(chain, 2):
        a, b = d.node(s), d.node(t)
        if _long_internal_path(G, a, b, off, limit):
            return False
    return True


def _long_internal_path(G, a, b, inner, nodes):
    """Is there an a-b path of >= ``nodes`` nodes with all internal nodes in ``inner``?"""
    if nodes <= 2 and G.has_edge(a, b):
        return True

    def dfs(v, visited, length):
        if G.has_edge(v, b) and length + 1 >= nodes:
            return True
        cand = G.adj[v] & inner & ~visited
        while cand:
            low = cand & -cand
            cand ^= low
            if dfs(low.bit_length() - 1, visited | low, length + 1):
                return True
        return False

    return dfs(a, 1 << a, 1)


# ---------------------------------------------------------------------------
# long cycle from a path


def lemma_cycle_bound(G: BipartiteGraph, P: Sequence[int]) -> int:
    """The length the constructed cycle is guaranteed to reach for path ``P``."""
    d = decorate(G, P)
    dx, dy = len(d.n_first), len(d.n_last)
    if not d.pairs:
        return 2 * (dx + dy - 1)
    if G.side(d.path[0]) != G.side(d.path[-1]):
        return min(d.p, 2 * (dx + dy - 1))
    return min(d.p - 1, 2 * (dx + dy - 2))


def long_cycle_from_path(G: BipartiteGraph, P: Sequence[int]) -> CycleWitness:
    """A cycle through ``N_P(x) u N_P(y)`` as long as the case bound requires.

    With crossing pairs the cycle is ``P[x, v_i] + v_i y + P[y, v_j] + v_j x``
    for a pair of smallest gap.  Without them it follows the ear
    construction: ears ``P_1, P_2, ...`` internally disjoint from ``P``
    hop over ``t_0 = max N_P(x)`` further and further until one lands past
    ``u = min N_P(y)``; odd ears go on one strand, even ears on the other.
    The next ear is the one reaching furthest; ties go to the bridge
    found first (components of ``G - V(P)`` by least node, then chords).
    """
    if not is_2_connected(G):
        raise HypothesisError("graph must be 2-connected")
    d = decorate(G, P)
    if d.p < 2:
        raise ValueError("path needs at least two nodes")
    if d.p == 2:
        return _cycle_through_edge(G, d.path[0], d.path[1])
    if d.pairs:
        i, j = min(d.pairs, key=lambda pr: (pr[1] - pr[0], pr))
        nodes = d.segment(1, i) + d.segment(d.p, j)
        return CycleWitness(tuple(nodes))
    return _ear_cycle(G, d)


def _cycle_through_edge(G: BipartiteGraph, x: int, y: int) -> CycleWitness:
    # shortest x-y path avoiding the edge xy, closed by xy
    prev = {x: None}
    queue = [x]
    for v in queue:
        for w in iter_bits(G.adj[v]):
            if w in prev or (v == x and w == y):
                continue
            prev[w] = v
            queue.append(w)
    if y not in prev:
        raise HypothesisError("edge lies on no cycle")
    path = [y]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return CycleWitness(tuple(reversed(path)))


def _bridges(G: BipartiteGraph, d: PathDecoration):
    """Bridges of ``P``: off-path components with their attachments, then chords."""
    pos = {v: i + 1 for i, v in enumerate(d.path)}
    pmask = _mask(d.path)
    out = []
    for comp in components(G, G.all_mask & ~pmask):
        att = 0
        for v in iter_bits(comp):
            att |= G.adj[v] & pmask
        out.append(("comp", comp, sorted(pos[v] for v in iter_bits(att))))
    for i, v in enumerate(d.path, 1):
        for w in iter_bits(G.adj[v] & pmask):
            j = pos[w]
            if j > i + 1:
                out.append(("chord", 0, [i, j]))
    return out


def _ear(G: BipartiteGraph, d: PathDecoration, bridge, s: int, t: int) -> tuple[int, ...]:
    """Nodes strictly inside the ear from ``v_s`` to ``v_t``."""
    kind, comp, _ = bridge
    if kind == "chord":
        return ()
    a, b = d.node(s), d.node(t)
    starts = [v for v in iter_bits(G.adj[a] & comp)]
    prev = {v: None for v in starts}
    queue = list(starts)
    for v in queue:
        if G.has_edge(v, b):
            path = [v]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return tuple(reversed(path))
        for w in iter_bits(G.adj[v] & comp):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    raise AssertionError("bridge attachments are connected through the bridge")


def _ear_cycle(G: BipartiteGraph, d: PathDecoration) -> CycleWitness:
    p = d.p
    t_prev = max(d.n_first)
    u = min(d.n_last)
    bridges = _bridges(G, d)
    ears = []  # (s_r, t_r, inner nodes)
    while True:
        best = None
        for b in bridges:
            att = b[2]
            if att[0] >= t_prev or att[-1] <= t_prev:
                continue
            if best is None or att[-1] > best[2][-1]:
                best = b
        if best is None:
            raise HypothesisError("no ear found; graph is not 2-connected")
        s = max(a for a in best[2] if a < t_prev)
        t = best[2][-1]
        ears.append((s, t, _ear(G, d, best, s, t)))
        t_prev = t
        if t > u:
            break
    ell = len(ears)
    s1 = ears[0][0]
    t_last = ears[-1][1]
    a = min(i for i in d.n_first if i > s1)
    b = max(i for i in d.n_last if i < t_last)

    t_of = {0: max(d.n_first)}
    for r, (_, t, _) in enumerate(ears, 1):
        t_of[r] = t

    def strand(first_start, ear_ids):
        """Segments joined by the given ears; the strand ends after its last ear."""
        nodes: list[int] = []
        start = first_start
        for r in ear_ids:
            s, t, inner = ears[r - 1]
            nodes += d.segment(start, s)
            nodes += inner
            start = t
        return nodes, start

    odd = list(range(1, ell + 1, 2))
    even = list(range(2, ell + 1, 2))
    A, a_end = strand(1, odd)
    B, b_end = strand(a, even)
    if ell % 2:
        A += d.segment(a_end, p)
        B += d.segment(b_end, b)
    else:
        B += d.segment(b_end, p)
        A += d.segment(a_end, b)
    # one strand ends at y = v_p, the other at v_b, a neighbour of y;
    # the strand starting at v_a closes back to x
    return CycleWitness(tuple(A + list(reversed(B))))


# ---------------------------------------------------------------------------
# disintegration


def disintegrate_trace(
    G: BipartiteGraph,
    alpha_x: int,
    alpha_y: int,
    x_star: Iterable[int] | None = None,
    y_star: Iterable[int] | None = None,
    order: Sequence[int] | None = None,
) -> tuple[int, list[int]]:
    """Surviving node mask and the deletion sequence.

    Nodes outside ``x_star`` / ``y_star`` are removed first.  Then, until
    no node qualifies, the first qualifying node in ``order`` (default:
    ascending index) is deleted, with X-nodes qualifying at degree
    ``<= alpha_x`` and Y-nodes at degree ``<= alpha_y``.
    """
    if alpha_x < 0 or alpha_y < 0:
        raise ValueError("thresholds must be nonnegative")
    keep = G.all_mask
    if x_star is not None:
        keep &= _mask(x_star) | G.y_mask
    if y_star is not None:
        keep &= _mask(y_star) | G.x_mask
    removed = [v for v in range(G.num_nodes) if not (keep >> v) & 1]
    order = list(range(G.num_nodes)) if order is None else list(order)
    deg = {v: (G.adj[v] & keep).bit_count() for v in iter_bits(keep)}

    def qualifies(v):
        return deg[v] <= (alpha_x if v < G.m else alpha_y)

    # worklist: nodes of degree <= threshold, processed in ``order`` rank
    rank = {v: i for i, v in enumerate(order)}
    import heapq

    heap = [(rank[v], v) for v in deg if qualifies(v)]
    heapq.heapify(heap)
    while heap:
        _, v = heapq.heappop(heap)
        if not (keep >> v) & 1:
            continue
        keep &= ~(1 << v)
        removed.append(v)
        for w in iter_bits(G.adj[v] & keep):
            was = qualifies(w)
            deg[w] -= 1
            if not was and qualifies(w):
                heapq.heappush(heap, (rank[w], w))
    return keep, removed


def mixed_disintegrate(
    G: BipartiteGraph,
    alpha_x: int,
    alpha_y: int,
    x_star: Iterable[int] | None = None,
    y_star: Iterable[int] | None = None,
) -> BipartiteGraph:
    """Side-specific peeling; the result is labelled back to ``G``'s nodes."""
    keep, _ = disintegrate_trace(G, alpha_x, alpha_y, x_star, y_star)
    return G.induced(keep)


def disintegrate(
    G: BipartiteGraph,
    alpha: int,
    x_star: Iterable[int] | None = None,
    y_star: Iterable[int] | None = None,
) -> BipartiteGraph:
    """``alpha(X*, Y*)``-disintegration.  With full ``X*``, ``Y*`` this is the ``(alpha+1)``-core."""
    return mixed_disintegrate(G, alpha, alpha, x_star, y_star)


# ---------------------------------------------------------------------------
# path covers


@dataclass(frozen=True)
class PathCover:
    """Either a complete-bipartite certificate or disjoint A-to-A paths covering B."""

    complete: bool
    paths: tuple[tuple[int, ...], ...] = ()


def _check_cover_hypotheses(G: BipartiteGraph, A: int, B: int) -> int:
    g = B.bit_count()
    if g < 2:
        raise HypothesisError("|B| must be at least 2")
    for v in iter_bits(A | B):
        if not G.adj[v] & (A | B):
            raise HypothesisError(f"node {v} is isolated")
    for b in iter_bits(B):
        if (G.adj[b] & A).bit_count() < g:
            raise HypothesisError(f"node {b} has degree below |B| = {g}")
    return g


def path_cover(G: BipartiteGraph, A: Iterable[int] | None = None, B: Iterable[int] | None = None) -> PathCover:
    """Cover ``B`` by disjoint paths with both ends in ``A``, or certify ``K_{g,g}``.

    ``A`` and ``B`` default to X and Y.  Every ``b`` in ``B`` needs degree
    at least ``g = |B| >= 2`` and no node may be isolated.  The recursion
    peels the lexicographically least edge ``ab``, covers
    ``H[B - b, N(B - b) - a]`` and reattaches ``b``.
    """
    Am = G.x_mask if A is None else _mask(A)
    Bm = G.y_mask if B is None else _mask(B)
    if Am & Bm:
        raise HypothesisError("A and B overlap")
    for a in iter_bits(Am):
        if G.adj[a] & Am:
            raise HypothesisError("A is not independent")
    _check_cover_hypotheses(G, Am, Bm)
    return _cover(G, Am, Bm)


def _is_complete_square(G, A, B):
    if A.bit_count() != B.bit_count():
        return False
    return all(G.adj[a] & B == B for a in iter_bits(A))


def _cover(G: BipartiteGraph, A: int, B: int) -> PathCover:
    g = B.bit_count()
    if _is_complete_square(G, A, B):
        return PathCover(True)
    if g == 2:
        return PathCover(False, _cover_two(G, A, B))
    a, b = min(
        ((a, b) for b in iter_bits(B) for a in iter_bits(G.adj[b] & A)),
    )
    B2 = B & ~(1 << b)
    A2 = 0
    for v in iter_bits(B2):
        A2 |= G.adj[v] & A
    A2 &= ~(1 << a)
    sub = _cover(G, A2, B2)
    if sub.complete:
        # every b' in B2 also sees a
        free = G.adj[b] & A & ~(A2 | (1 << a))
        if not free:
            return PathCover(True)
        a_new = (free & -free).bit_length() - 1
        bs = list(iter_bits(B2))
        as_ = list(iter_bits(A2))
        path = [a_new, b, a]
        for bb, aa in zip(bs, as_):
            path += [bb, aa]
        return PathCover(False, (tuple(path),))
    used = 0
    for q in sub.paths:
        used |= _mask(q)
    free = G.adj[b] & A & ~used & ~(1 << a)
    if free:
        a_new = (free & -free).bit_length() - 1
        return PathCover(False, sub.paths + ((a, b, a_new),))
    paths = [list(q) for q in sub.paths]
    for idx, q in enumerate(paths):
        for end in (q[-1], q[0]):
            if G.has_edge(b, end) and end != a:
                if end == q[0]:
                    q.reverse()
                paths[idx] = q + [b, a]
                return PathCover(False, tuple(tuple(x) for x in paths))
    raise AssertionError("reattachment failed; hypotheses should prevent this")


def _cover_two(G: BipartiteGraph, A: int, B: int) -> tuple[tuple[int, ...], ...]:
    b1, b2 = iter_bits(B)
    n1 = list(iter_bits(G.adj[b1] & A))
    n2 = list(iter_bits(G.adj[b2] & A))
    common = [a for a in n1 if a in n2]
    for c in common:
        for a1 in n1:
            for a2 in n2:
                if len({a1, a2, c}) == 3:
                    return ((a1, b1, c, b2, a2),)
    for a1, c1 in combinations(n1, 2):
        for a2, c2 in combinations(n2, 2):
            if len({a1, c1, a2, c2}) == 4:
                return ((a1, b1, c1), (a2, b2, c2))
    raise AssertionError("a g=2 instance that is not K_{2,2} has a P5 or two P3s")


def verify_path_cover(G: BipartiteGraph, A: Iterable[int], B: Iterable[int], cover: PathCover) -> bool:
    Am, Bm = _mask(A), _mask(B)
    if cover.complete:
        return _is_complete_square(G, Am, Bm)
    seen = 0
    for q in cover.paths:
        try:
            validate_path(G, q)
        except ValueError:
            return False
        qm = _mask(q)
        if qm & seen or not (Am >> q[0]) & 1 or not (Am >> q[-1]) & 1 or len(q) < 3:
            return False
        if qm & ~(Am | Bm):
            return False
        seen |= qm
    return Bm & ~seen == 0


# ---------------------------------------------------------------------------
# neighbourhood restriction next to a large complete bipartite piece


def check_lemma_c1(G: BipartiteGraph, A: Iterable[int], B: Iterable[int], k: int) -> bool:
    """Evaluate ``|N(Y - B)| = 2`` or ``|N(Y - B) & A| <= 1``.

    Hypotheses (checked, :class:`HypothesisError` on failure): ``k >= 4``,
    ``m, n >= k``, ``G`` 2-connected with ``c(G) < 2k``, ``A`` a set of
    ``k - 1`` X-nodes and ``B`` a set of ``k - 2`` Y-nodes spanning a
    complete bipartite subgraph.
    """
    Am, Bm = _mask(A), _mask(B)
    if k < 4:
        raise HypothesisError("k must be at least 4")
    if G.m < k or G.n < k:
        raise HypothesisError("both parts need at least k nodes")
    if Am & ~G.x_mask or Bm & ~G.y_mask:
        raise HypothesisError("A must lie in X and B in Y")
    if Am.bit_count() != k - 1 or Bm.bit_count() != k - 2:
        raise HypothesisError("need |A| = k-1 and |B| = k-2")
    if any(G.adj[a] & Bm != Bm for a in iter_bits(Am)):
        raise HypothesisError("A and B do not span a complete bipartite subgraph")
    if not is_2_connected(G):
        raise HypothesisError("graph is not 2-connected")
    if has_cycle_at_least(G, 2 * k) is not None:
        raise HypothesisError("c(G) >= 2k")
    N = 0
    for y in iter_bits(G.y_mask & ~Bm):
        N |= G.adj[y]
    return N.bit_count() == 2 or (N & Am).bit_count() <= 1
