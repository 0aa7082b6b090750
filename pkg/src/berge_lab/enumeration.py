"""Exhaustive instance generation and theorem-checking campaigns.

Hypergraph instances are indexed by a mixed-radix number: the ``r``-subsets
of ``{0..n-1}`` in lexicographic order are the *slots*, and digit ``s``
(base ``max_mult + 1``) is the multiplicity of slot ``s``, slot 0 being
the most significant digit.  A shard owns the instances whose leading
digits (the *prefix*) are congruent to the shard id, so shards are
disjoint, cover everything, and each one is a union of contiguous index
ranges.  Bipartite frames use the same scheme with one binary digit per
``(x, y)`` pair.
"""

from __future__ import annotations

import itertools
import math
import os
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .bigraph import BipartiteGraph
from .bounds import FRAME_THEOREMS, THEOREMS, Frame, VerdictReport, check_theorem
from .circumference import (
    berge_circumference,
    cycle_at_least_adj,
    direct_berge_cycle,
)
from .hypercore import MultiHypergraph

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "OracleMismatch",
    "CampaignSpec",
    "CensusResult",
    "budget_cap",
    "edge_slots",
    "count_instances",
    "enumerate_hypergraphs",
    "enumerate_frames",
    "canonical_form",
    "run_campaign",
    "run_shard",
    "run_sample",
    "max_good_edges",
]

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "BERGE_LAB_BUDGET"


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate: int, cap: int):
        self.estimate = estimate
        self.cap = cap
        super().__init__(f"campaign would scan {estimate} instances, above the cap of {cap}")


class OracleMismatch(RuntimeError):
    """The Berge circumference and the direct backtracking oracle disagree."""


def budget_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def edge_slots(n: int, r: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), r))


# ---------------------------------------------------------------------------
# canonical forms (exact, by permuting within degree classes)


def _refined_cells(n: int, edges: Sequence[Sequence[int]]) -> list[list[int]]:
    """Vertex cells from degree and neighbour-degree multisets."""
    deg = [0] * n
    for e in edges:
        for v in e:
            deg[v] += 1
    colour = deg
    for _ in range(2):
        sig = []
        for v in range(n):
            around = sorted(colour[w] for e in edges if v in e for w in e if w != v)
            sig.append((colour[v], tuple(around)))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [ranks[s] for s in sig]
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(n: int, edges: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least sorted edge list over all relabellings.

    Only relabellings that map each refined cell onto the block of
    positions it occupies are tried; refinement is isomorphism
    invariant, so this is still the exact minimum over the full group.
    Cost is the product of the cell factorials.
    """
    cells = _refined_cells(n, edges)
    best = None
    targets = []
    start = 0
    for c in cells:
        targets.append(list(range(start, start + len(c))))
        start += len(c)
    for perms in itertools.product(*(itertools.permutations(t) for t in targets)):
        p = [0] * n
        for c, img in zip(cells, perms):
            for v, w in zip(c, img):
                p[v] = w
        form = tuple(sorted(tuple(sorted(p[v] for v in e)) for e in edges))
        if best is None or form < best:
            best = form
    return best if best is not None else ()


# ---------------------------------------------------------------------------
# generators


def count_instances(instance_class: str, n: int, r: int | None = None, max_mult: int = 1, m: int | None = None) -> int:
    if instance_class in ("rgraph", "multi"):
        base = 2 if instance_class == "rgraph" else max_mult + 1
        return base ** math.comb(n, r)
    if instance_class == "frame":
        return 2 ** (m * n)
    raise ValueError(f"unknown instance class {instance_class!r}")


def _prefix_ranges(total_digits: int, base: int, shard: int, shards: int):
    """Contiguous index ranges belonging to ``shard``."""
    if shards < 1 or not 0 <= shard < shards:
        raise ValueError("shard must lie in 0..shards-1")
    p = 0
    while base**p < shards and p < total_digits:
        p += 1
    block = base ** (total_digits - p)
    for prefix in range(base**p):
        if prefix % shards == shard:
            yield prefix * block, (prefix + 1) * block


def _digits(index: int, base: int, width: int) -> list[int]:
    out = [0] * width
    for pos in range(width - 1, -1, -1):
        index, out[pos] = divmod(index, base)
    return out


def _hypergraph_indices(n, r, max_mult, shard, shards):
    S = math.comb(n, r)
    for lo, hi in _prefix_ranges(S, max_mult + 1, shard, shards):
        yield from range(lo, hi)


def _hypergraph_at(index: int, n: int, slots, base: int) -> MultiHypergraph:
    digits = _digits(index, base, len(slots))
    edges = []
    for s, c in zip(slots, digits):
        edges.extend([s] * c)
    return MultiHypergraph(n, edges)


def enumerate_hypergraphs(
    n: int,
    r: int,
    max_mult: int = 1,
    predicate: Callable[[MultiHypergraph], bool] | None = None,
    *,
    prune: bool = False,
    shard: int = 0,
    shards: int = 1,
    budget: int | None = None,
    with_index: bool = False,
) -> Iterator:
    """All labelled r-uniform multi-hypergraphs on ``n`` vertices, multiplicity <= ``max_mult``.

    ``prune`` keeps only instances equal to their canonical form (one
    representative per isomorphism class).  ``with_index`` yields
    ``(index, H)`` pairs.
    """
    if n < r or r < 1:
        raise ValueError("need n >= r >= 1")
    if max_mult < 1:
        raise ValueError("max_mult must be at least 1")
    total = count_instances("multi", n, r, max_mult)
    cap = budget_cap(budget)
    if total > cap:
        raise BudgetExceeded(total, cap)
    slots = edge_slots(n, r)
    base = max_mult + 1
    for index in _hypergraph_indices(n, r, max_mult, shard, shards):
        H = _hypergraph_at(index, n, slots, base)
        if prune and tuple(sorted(tuple(sorted(e)) for e in H.edges)) != canonical_form(n, H.edges):
            continue
        if predicate is not None and not predicate(H):
            continue
        yield (index, H) if with_index else H


def _frame_at(index: int, m: int, n: int) -> BipartiteGraph:
    digits = _digits(index, 2, m * n)
    edges = [(p // n, p % n) for p, d in enumerate(digits) if d]
    return BipartiteGraph.from_edges(m, n, edges)


def enumerate_frames(
    m: int,
    n: int,
    predicate: Callable[[BipartiteGraph], bool] | None = None,
    *,
    prune: bool = False,
    shard: int = 0,
    shards: int = 1,
    budget: int | None = None,
    with_index: bool = False,
) -> Iterator:
    """All labelled bipartite graphs with parts of sizes ``m`` and ``n``.

    ``prune`` keeps one graph per orbit of the X-side relabellings
    (rows in non-increasing order as binary numbers, first Y-node most
    significant); verdicts with ``X* = X`` are invariant under these.
    """
    total = count_instances("frame", n, m=m)
    cap = budget_cap(budget)
    if total > cap:
        raise BudgetExceeded(total, cap)
    for lo, hi in _prefix_ranges(m * n, 2, shard, shards):
        for index in range(lo, hi):
            if prune:
                rows = [(index >> ((m - 1 - x) * n)) & ((1 << n) - 1) for x in range(m)]
                if any(rows[i] < rows[i + 1] for i in range(m - 1)):
                    continue
            G = _frame_at(index, m, n)
            if predicate is not None and not predicate(G):
                continue
            yield (index, G) if with_index else G


# ---------------------------------------------------------------------------
# campaigns


@dataclass(frozen=True)
class CampaignSpec:
    """What to scan and which statements to check.

    ``instance_class`` is ``"rgraph"`` (simple r-uniform), ``"multi"``
    (r-uniform, multiplicity <= ``max_mult``) or ``"frame"`` (bipartite
    graphs with parts ``m`` and ``n``, ``X* = X``, degree target ``r``).
    """

    instance_class: str
    n: int
    r: int
    k: int | None
    theorems: tuple[str, ...]
    max_mult: int = 1
    m: int | None = None
    prune: bool = False
    shards: int = 1
    workers: int = 1
    cross_check_every: int = 500
    budget: int | None = None
    max_records: int = 1000

    def __post_init__(self) -> None:
        if self.instance_class not in ("rgraph", "multi", "frame"):
            raise ValueError(f"unknown instance class {self.instance_class!r}")
        object.__setattr__(self, "theorems", tuple(self.theorems))
        if not self.theorems:
            raise ValueError("no theorems given")
        for t in self.theorems:
            if t not in THEOREMS:
                raise ValueError(f"unknown theorem {t!r}")
            if self.instance_class == "frame" and t not in FRAME_THEOREMS:
                raise ValueError(f"{t} is not a bipartite-frame statement")
        if self.instance_class == "frame" and self.m is None:
            raise ValueError("frame campaigns need m")
        if self.instance_class == "rgraph" and self.max_mult != 1:
            object.__setattr__(self, "max_mult", 1)
        if self.shards < 1 or self.workers < 1:
            raise ValueError("shards and workers must be positive")

    def estimate(self) -> int:
        return count_instances(self.instance_class, self.n, self.r, self.max_mult, self.m)


@dataclass
class CensusResult:
    scanned: int = 0
    applicable: int = 0
    violations: list[dict] = field(default_factory=list)
    tight: list[dict] = field(default_factory=list)
    histogram: Counter = field(default_factory=Counter)
    max_measured: dict = field(default_factory=dict)
    oracle_checks: int = 0
    seconds: float = 0.0
    complete: bool = True
    shards_done: list[int] = field(default_factory=list)
    tight_count: int = 0

    def merge(self, other: "CensusResult", max_records: int = 1000) -> "CensusResult":
        out = CensusResult(
            scanned=self.scanned + other.scanned,
            applicable=self.applicable + other.applicable,
            violations=(self.violations + other.violations),
            tight=(self.tight + other.tight)[:max_records],
            histogram=self.histogram + other.histogram,
            oracle_checks=self.oracle_checks + other.oracle_checks,
            seconds=self.seconds + other.seconds,
            complete=self.complete and other.complete,
            shards_done=sorted(self.shards_done + other.shards_done),
            tight_count=self.tight_count + other.tight_count,
        )
        out.max_measured = dict(self.max_measured)
        for key, val in other.max_measured.items():
            out.max_measured[key] = max(out.max_measured.get(key, val), val)
        return out

    def to_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "applicable": self.applicable,
            "violations": self.violations,
            "tight": self.tight,
            "tight_count": self.tight_count,
            "histogram": dict(sorted(self.histogram.items())),
            "max_measured": dict(sorted(self.max_measured.items())),
            "oracle_checks": self.oracle_checks,
            "seconds": round(self.seconds, 3),
            "complete": self.complete,
        }

    def summary_key(self) -> tuple:
        """Everything except timing, for determinism comparisons."""
        d = self.to_dict()
        d.pop("seconds")
        return tuple(sorted((k, repr(v)) for k, v in d.items()))


def _describe(obj) -> dict:
    if isinstance(obj, MultiHypergraph):
        return {"n": obj.n, "edges": obj.one_based_edges()}
    G = obj.G if isinstance(obj, Frame) else obj
    return {"m": G.m, "n": G.n, "edges": [[x + 1, y + 1] for x, y in G.local_edges()]}


def _record(result: CensusResult, spec: CampaignSpec, index: int, obj, rep: VerdictReport) -> None:
    if not rep.applicable:
        return
    result.applicable += 1
    key = rep.theorem
    result.max_measured[key] = max(result.max_measured.get(key, rep.measured), rep.measured)
    if rep.violation:
        result.violations.append(
            {
                "theorem": rep.theorem,
                "index": index,
                "instance": _describe(obj),
                "measured": rep.measured,
                "bound": str(rep.bound),
                "details": rep.to_dict()["details"],
            }
        )
    if rep.tight:
        result.tight_count += 1
        result.histogram[f"{rep.theorem}:{rep.extremal_class}"] += 1
        if len(result.tight) < spec.max_records:
            result.tight.append(
                {"theorem": rep.theorem, "index": index, "instance": _describe(obj), "class": rep.extremal_class}
            )


def _oracle_check(H: MultiHypergraph) -> None:
    a = berge_circumference(H)
    w = direct_berge_cycle(H)
    b = 0 if w is None else w.length
    if a != b:
        raise OracleMismatch(f"berge circumference {a} vs direct oracle {b} on {H!r}")


def run_shard(spec: CampaignSpec, shard: int) -> CensusResult:
    """Scan one shard of the instance space."""
    t0 = time.perf_counter()
    res = CensusResult(shards_done=[shard])
    every = spec.cross_check_every
    if spec.instance_class == "frame":
        stream = enumerate_frames(
            spec.m, spec.n, prune=spec.prune, shard=shard, shards=spec.shards,
            budget=spec.budget, with_index=True,
        )
        for index, G in stream:
            res.scanned += 1
            F = Frame.full(G, spec.r)
            for t in spec.theorems:
                _record(res, spec, index, F, check_theorem(F, t, spec.k))
    else:
        stream = enumerate_hypergraphs(
            spec.n, spec.r, spec.max_mult, prune=spec.prune, shard=shard,
            shards=spec.shards, budget=spec.budget, with_index=True,
        )
        for index, H in stream:
            res.scanned += 1
            if every and index % every == 0:
                _oracle_check(H)
                res.oracle_checks += 1
            for t in spec.theorems:
                _record(res, spec, index, H, check_theorem(H, t, spec.k, spec.r))
    res.seconds = time.perf_counter() - t0
    return res


def _run_shard_star(args):
    return run_shard(*args)


def run_campaign(spec: CampaignSpec, shard_ids: Sequence[int] | None = None) -> CensusResult:
    """Run all (or the listed) shards and merge the results.

    With ``workers > 1`` shards go to a process pool.  A shard that
    raises anything other than an oracle mismatch is dropped and the
    merged result is flagged incomplete.
    """
    est = spec.estimate()
    cap = budget_cap(spec.budget)
    if est > cap:
        raise BudgetExceeded(est, cap)
    ids = list(range(spec.shards)) if shard_ids is None else list(shard_ids)
    t0 = time.perf_counter()
    partials: list[CensusResult] = []
    if spec.workers > 1 and len(ids) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            futures = [pool.submit(run_shard, spec, s) for s in ids]
            for fut in futures:
                try:
                    partials.append(fut.result())
                except OracleMismatch:
                    raise
                except Exception:
                    partials.append(CensusResult(complete=False))
    else:
        for s in ids:
            try:
                partials.append(run_shard(spec, s))
            except OracleMismatch:
                raise
            except Exception:
                partials.append(CensusResult(complete=False))
    out = CensusResult(shards_done=[])
    for p in partials:
        out = out.merge(p, spec.max_records)
    out.complete = out.complete and len(out.shards_done) == spec.shards
    out.violations.sort(key=lambda v: (v["theorem"], v["index"]))
    out.tight.sort(key=lambda v: (v["theorem"], v["index"]))
    out.seconds = time.perf_counter() - t0
    return out


def run_sample(spec: CampaignSpec, count: int, seed: int = 0) -> CensusResult:
    """Check ``count`` instances drawn uniformly (with replacement) from the campaign's instance space.

    The same seed always draws the same indices.  The instance-count
    budget does not apply, since nothing close to the whole space is visited.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = random.Random(seed)
    total = spec.estimate()
    t0 = time.perf_counter()
    res = CensusResult(shards_done=list(range(spec.shards)))
    slots = edge_slots(spec.n, spec.r) if spec.instance_class != "frame" else None
    for _ in range(count):
        index = rng.randrange(total)
        res.scanned += 1
        if spec.instance_class == "frame":
            F = Frame.full(_frame_at(index, spec.m, spec.n), spec.r)
            for t in spec.theorems:
                _record(res, spec, index, F, check_theorem(F, t, spec.k))
            continue
        H = _hypergraph_at(index, spec.n, slots, spec.max_mult + 1)
        if spec.cross_check_every and res.scanned % spec.cross_check_every == 0:
            _oracle_check(H)
            res.oracle_checks += 1
        for t in spec.theorems:
            _record(res, spec, index, H, check_theorem(H, t, spec.k, spec.r))
    res.seconds = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------------------
# extremal search for the conjecture scan


@dataclass
class GoodSetSearch:
    """Largest r-uniform simple edge set with no Berge cycle of length >= ``L``."""

    n: int
    r: int
    L: int
    best: int
    witness: tuple[tuple[int, ...], ...]
    nodes: int
    complete: bool
    method: str
    seconds: float


def _incidence_adj(n: int, edges) -> tuple[list[int], int, int]:
    m = len(edges)
    adj = [0] * (n + m)
    for j, e in enumerate(edges):
        gy = n + j
        for v in e:
            adj[v] |= 1 << gy
            adj[gy] |= 1 << v
    return adj, (1 << (n + m)) - 1, (1 << n) - 1


def _good(n, edges, L) -> bool:
    if len(edges) < L:
        return True
    adj, allm, xm = _incidence_adj(n, edges)
    return cycle_at_least_adj(adj, allm, xm, 2 * L) is None


def max_good_edges(
    n: int,
    r: int,
    L: int | None = None,
    *,
    time_limit: float | None = None,
    seed: int = 0,
    restarts: int = 200,
) -> GoodSetSearch:
    """Maximum number of edges of an r-uniform simple hypergraph on ``n`` vertices
    with no Berge cycle of length ``>= L`` (default ``L = r``).

    Exact depth-first search over edge sets in slot order with the first
    edge fixed to ``{0..r-1}`` (every nonempty instance is isomorphic to
    one containing it).  Having no long Berge cycle is inherited by
    subsets, so every branch stays inside the family.  If
    ``time_limit`` runs out, the best value found so far is returned with
    ``complete=False`` and a seeded randomized greedy search tops it up.
    """
    L = r if L is None else L
    slots = edge_slots(n, r)
    t0 = time.perf_counter()
    state = {"best": 0, "wit": (), "nodes": 0, "timeout": False}
    if slots:
        state["best"], state["wit"] = 1, (slots[0],)

    def dfs(chosen: list, start: int):
        state["nodes"] += 1
        if time_limit is not None and state["nodes"] % 256 == 0 and time.perf_counter() - t0 > time_limit:
            state["timeout"] = True
            return
        if len(chosen) > state["best"]:
            state["best"], state["wit"] = len(chosen), tuple(chosen)
        if len(chosen) + (len(slots) - start) <= state["best"]:
            return
        for s in range(start, len(slots)):
            if state["timeout"]:
                return
            if len(chosen) + (len(slots) - s) <= state["best"]:
                return
            chosen.append(slots[s])
            if _good(n, chosen, L):
                dfs(chosen, s + 1)
            chosen.pop()

    if slots:
        dfs([slots[0]], 1)
    complete = not state["timeout"]
    method = "exact"
    if not complete:
        method = "exact-partial+greedy"
        rng = random.Random(seed)
        for _ in range(restarts):
            order = slots[:]
            rng.shuffle(order)
            chosen: list = []
            for e in order:
                chosen.append(e)
                if not _good(n, chosen, L):
                    chosen.pop()
            if len(chosen) > state["best"]:
                state["best"], state["wit"] = len(chosen), tuple(chosen)
    return GoodSetSearch(
        n, r, L, state["best"], state["wit"], state["nodes"], complete, method,
        time.perf_counter() - t0,
    )
