"""Frames, deficiency, special blocks, exact bound formulas and theorem verdicts.

All bound values are :class:`fractions.Fraction`; comparisons are exact.
Theorem ids:

============  ==========================================================
``eg-full``   multi-hypergraph, lower rank >= r, multiplicity <= k-2, no
              Berge cycle of length >= k: ``e <= (k-1)(n-1)/r``
``eg``        same for simple r-uniform hypergraphs
``gyori2``    no Berge path of length k: ``e <= (k-1)n/(r+1)``
``egblock``   2-connected version: ``e <= max{k-1, k(n-1)/(2r-k+2)}``
``egblock-path``  connected r-graph, no Berge path of length k:
              ``e <= max{k-1, kn/(2r-k+4)}``
``egbgr``     bipartite, ``d(x) >= r`` on X, no ``K_{k-1,r}`` block,
              ``c < 2k``: ``m <= (k-1)(n-1)/r``
``egbgr2``    2-connected, ``m >= k``: ``m <= k(n-1)/(2r-k+2)``
``main``      2-connected frame: ``m* <= k(n-1+D)/(2r-k+2)``
``t1``        2k-saturated frame: ``m* <= (k-1)(n-1+D+Q)/r``
``t2``        the same bound without saturation
``conjecture`` r-uniform, no Berge cycle of length >= r:
              ``e <= max{(r-1)(n-1)/r, n-r+1}`` (checked, never asserted)
``gkl``       r-graph, no Berge path of length k: ``e <= (k-1)n/(r+1)``
``erdos-gallai``  graph, no cycle of length >= k: ``e <= (k-1)(n-1)/2``
============  ==========================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .bigraph import BipartiteGraph, blocks, is_2_connected, is_connected, iter_bits
from .circumference import has_berge_cycle_at_least, has_cycle_at_least, is_saturated, longest_berge_path
from .hypercore import (
    MultiHypergraph,
    incidence_graph,
    is_block_tree,
    lower_rank,
    max_multiplicity,
)

__all__ = [
    "Frame",
    "Inapplicable",
    "VerdictReport",
    "THEOREMS",
    "HYPERGRAPH_THEOREMS",
    "FRAME_THEOREMS",
    "incidence_frame",
    "deficiency",
    "deficiency_total",
    "special_blocks",
    "special_block_count",
    "t1_structure",
    "bound_value",
    "check_theorem",
]

HYPERGRAPH_THEOREMS = (
    "eg-full",
    "eg",
    "gyori2",
    "egblock",
    "egblock-path",
    "conjecture",
    "gkl",
    "erdos-gallai",
)
FRAME_THEOREMS = ("egbgr", "egbgr2", "main", "t1", "t2")
THEOREMS = HYPERGRAPH_THEOREMS + FRAME_THEOREMS


@dataclass(frozen=True)
class Frame:
    """A bipartite graph with a distinguished set ``x_star`` of X-nodes and a degree target."""

    G: BipartiteGraph
    x_star: frozenset[int]
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x_star", frozenset(self.x_star))
        bad = [v for v in self.x_star if not 0 <= v < self.G.m]
        if bad:
            raise ValueError(f"x_star contains non-X nodes {sorted(bad)}")
        if self.r < 1:
            raise ValueError("r must be positive")

    @classmethod
    def full(cls, G: BipartiteGraph, r: int) -> "Frame":
        return cls(G, frozenset(G.x_nodes), r)

    @property
    def m_star(self) -> int:
        return len(self.x_star)

    @property
    def x_star_mask(self) -> int:
        mask = 0
        for v in self.x_star:
            mask |= 1 << v
        return mask


def incidence_frame(H: MultiHypergraph, r: int) -> Frame:
    """Incidence graph oriented for the bipartite theorems: X = edges, Y = vertices, X* = X."""
    return Frame.full(incidence_graph(H).transpose(), r)


@dataclass(frozen=True)
class Inapplicable:
    """Marker returned by :func:`bound_value` when parameters fall outside a statement."""

    reason: str

    def __bool__(self) -> bool:
        return False


# ---------------------------------------------------------------------------
# deficiency and special blocks


def deficiency(F: Frame, x: int) -> int:
    if not 0 <= x < F.G.m:
        raise ValueError(f"node {x} is not in X")
    return max(0, F.r - F.G.degree(x))


def deficiency_total(F: Frame) -> int:
    return sum(max(0, F.r - F.G.degree(x)) for x in F.x_star)


def special_blocks(F: Frame, k: int) -> list[int]:
    """Indices (into ``blocks(F.G)``) of the special blocks.

    A block is special when it is a complete ``K_{k-1,r}`` with its
    ``(k-1)``-part in ``X*`` and each of those X-nodes has no neighbour
    outside the block.
    """
    G = F.G
    dec = blocks(G)
    xs = F.x_star_mask
    out = []
    for i, b in enumerate(dec.blocks):
        bx, by = b & G.x_mask, b & G.y_mask
        if bx.bit_count() != k - 1 or by.bit_count() != F.r:
            continue
        if len(dec.block_edges[i]) != (k - 1) * F.r:
            continue
        if bx & ~xs:
            continue
        if all(G.adj[x] == by for x in iter_bits(bx)):
            out.append(i)
    return out


def special_block_count(F: Frame, k: int) -> int:
    return len(special_blocks(F, k))


def t1_structure(F: Frame, k: int) -> dict[str, bool]:
    """The four equality conditions for the deficiency/special-block bound.

    ``connected``; ``blocks`` (every block a complete ``K_{k-1,r}`` or
    ``K_{k-1,r+1}`` with the ``(k-1)``-part in X, every cut vertex in Y);
    ``x_star_full``; ``no_deficiency``.
    """
    G = F.G
    dec = blocks(G)
    ok_blocks = all(v >= G.m for v in dec.cut_vertices)
    for i, b in enumerate(dec.blocks):
        nx_, ny_ = dec.part_sizes(i)
        if nx_ != k - 1 or ny_ not in (F.r, F.r + 1) or len(dec.block_edges[i]) != nx_ * ny_:
            ok_blocks = False
            break
    return {
        "connected": is_connected(G),
        "blocks": ok_blocks and len(dec.blocks) > 0,
        "x_star_full": F.m_star == G.m,
        "no_deficiency": deficiency_total(F) == 0,
    }


# ---------------------------------------------------------------------------
# bound formulas


def bound_value(
    theorem: str,
    *,
    k: int | None = None,
    r: int | None = None,
    n: int | None = None,
    D: int = 0,
    Q: int = 0,
) -> Fraction | Inapplicable:
    """The exact right-hand side of ``theorem`` for the given parameters.

    Parameter ranges of the statement are enforced; outside them an
    :class:`Inapplicable` marker comes back instead of a number.
    """
    if n is None:
        raise ValueError("n is required")
    if theorem == "conjecture":
        if r is None:
            raise ValueError("r is required")
        if r < 2:
            return Inapplicable("conjecture needs r >= 2")
        return max(Fraction((r - 1) * (n - 1), r), Fraction(n - r + 1))
    if k is None:
        raise ValueError("k is required")
    if theorem == "erdos-gallai":
        if not (n >= k >= 3):
            return Inapplicable("needs n >= k >= 3")
        return Fraction((k - 1) * (n - 1), 2)
    if r is None:
        raise ValueError("r is required")
    if theorem in ("gyori2",):
        if not (r >= k + 1 >= 3):
            return Inapplicable("needs r >= k+1 >= 3")
        return Fraction((k - 1) * n, r + 1)
    if theorem in ("gkl",):
        if not (r >= k >= 3):
            return Inapplicable("needs r >= k >= 3")
        return Fraction((k - 1) * n, r + 1)
    if theorem == "egblock-path":
        if not (r >= k >= 3):
            return Inapplicable("needs r >= k >= 3")
        return max(Fraction(k - 1), Fraction(k * n, 2 * r - k + 4))
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    if k < 4 or r < k + 1:
        return Inapplicable("needs k >= 4 and r >= k+1")
    if theorem in ("eg-full", "eg", "egbgr"):
        return Fraction((k - 1) * (n - 1), r)
    if theorem == "egblock":
        return max(Fraction(k - 1), Fraction(k * (n - 1), 2 * r - k + 2))
    if theorem == "egbgr2":
        return Fraction(k * (n - 1), 2 * r - k + 2)
    if theorem == "main":
        return Fraction(k * (n - 1 + D), 2 * r - k + 2)
    # t1, t2
    return Fraction((k - 1) * (n - 1 + D + Q), r)


# ---------------------------------------------------------------------------
# verdicts


@dataclass
class VerdictReport:
    """Outcome of one theorem on one instance.

    ``hypotheses`` maps each named hypothesis to True/False, or None when
    it was not evaluated because an earlier one already failed.  ``holds``
    is None exactly when the theorem is inapplicable.
    """

    theorem: str
    hypotheses: dict[str, bool | None]
    applicable: bool
    bound: Fraction | None
    measured: int | None
    holds: bool | None
    tight: bool = False
    extremal_class: str = "none"
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "inapplicable"
        return "holds" if self.holds else "fails"

    @property
    def violation(self) -> bool:
        """Bound exceeded, or the stated equality characterisation contradicted."""
        if not self.applicable:
            return False
        return not self.holds or self.details.get("equality_clause") is False

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "verdict": self.verdict,
            "hypotheses": dict(self.hypotheses),
            "applicable": self.applicable,
            "bound": None
            if self.bound is None
            else {"num": self.bound.numerator, "den": self.bound.denominator, "text": str(self.bound)},
            "measured": self.measured,
            "holds": self.holds,
            "tight": self.tight,
            "extremal_class": self.extremal_class,
            "details": _jsonable(self.details),
        }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


class _Gate:
    """Evaluate hypotheses in order, skipping the rest after the first failure."""

    def __init__(self, names: Iterable[str]):
        self.results: dict[str, bool | None] = {name: None for name in names}
        self.failed = False

    def check(self, name: str, fn) -> None:
        if self.failed:
            return
        ok = bool(fn())
        self.results[name] = ok
        if not ok:
            self.failed = True


def _report(theorem, gate, bound, measured, classify=None) -> VerdictReport:
    if gate.failed or isinstance(bound, Inapplicable):
        details = {"reason": bound.reason} if isinstance(bound, Inapplicable) else {}
        return VerdictReport(theorem, gate.results, False, None, measured, None, details=details)
    holds = measured <= bound
    tight = measured == bound
    rep = VerdictReport(theorem, gate.results, True, bound, measured, holds, tight)
    if classify is not None:
        classify(rep)
    elif tight:
        rep.extremal_class = "other"
    return rep


def check_theorem(
    instance: MultiHypergraph | BipartiteGraph | Frame,
    theorem: str,
    k: int | None = None,
    r: int | None = None,
    x_star: Iterable[int] | None = None,
) -> VerdictReport:
    """Check one statement on one instance, recomputing every hypothesis.

    Hypergraph statements take a :class:`MultiHypergraph`.  Frame
    statements take a :class:`Frame`, a :class:`BipartiteGraph` (with
    ``x_star`` defaulting to all of X) or a hypergraph, which is turned
    into its edge-side incidence frame.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    if theorem in HYPERGRAPH_THEOREMS:
        if not isinstance(instance, MultiHypergraph):
            raise TypeError(f"{theorem} applies to hypergraphs")
        return _check_hypergraph(instance, theorem, k, r)
    if r is None and not isinstance(instance, Frame):
        raise ValueError("r is required")
    if isinstance(instance, MultiHypergraph):
        F = incidence_frame(instance, r)
    elif isinstance(instance, BipartiteGraph):
        F = Frame(instance, frozenset(instance.x_nodes if x_star is None else x_star), r)
    else:
        F = instance if r is None or r == instance.r else Frame(instance.G, instance.x_star, r)
    if k is None:
        raise ValueError("k is required")
    return _check_frame(F, theorem, k)


def _needs(theorem, k, r):
    if theorem != "conjecture" and k is None:
        raise ValueError("k is required")
    if theorem != "erdos-gallai" and r is None:
        raise ValueError("r is required")


def _check_hypergraph(H: MultiHypergraph, theorem: str, k, r) -> VerdictReport:
    _needs(theorem, k, r)
    n, e = H.n, H.num_edges
    if theorem == "conjecture":
        bound = bound_value(theorem, r=r, n=n)
        gate = _Gate(["parameters", "uniform", "simple", "no_long_cycle"])
        gate.check("parameters", lambda: not isinstance(bound, Inapplicable))
        gate.check("uniform", lambda: all(len(x) == r for x in H.edges))
        gate.check("simple", lambda: max_multiplicity(H) <= 1)
        gate.check("no_long_cycle", lambda: e < r or has_berge_cycle_at_least(H, r) is None)
        return _report(theorem, gate, bound, e)
    if theorem == "erdos-gallai":
        bound = bound_value(theorem, k=k, n=n)
        gate = _Gate(["parameters", "uniform", "simple", "no_long_cycle"])
        gate.check("parameters", lambda: not isinstance(bound, Inapplicable))
        gate.check("uniform", lambda: all(len(x) == 2 for x in H.edges))
        gate.check("simple", lambda: max_multiplicity(H) <= 1)
        gate.check("no_long_cycle", lambda: e < k or has_berge_cycle_at_least(H, k) is None)
        return _report(theorem, gate, bound, e)

    bound = bound_value(theorem, k=k, r=r, n=n)
    path_version = theorem in ("gyori2", "egblock-path", "gkl")
    names = ["parameters"]
    if theorem in ("eg", "egblock-path", "gkl"):
        names += ["uniform", "simple"]
    else:
        names += ["lower_rank", "multiplicity"]
    if theorem == "egblock":
        names.append("2_connected")
    if theorem == "egblock-path":
        names.append("connected")
    names.append("no_long_path" if path_version else "no_long_cycle")
    gate = _Gate(names)
    gate.check("parameters", lambda: not isinstance(bound, Inapplicable))
    if "uniform" in names:
        gate.check("uniform", lambda: all(len(x) == r for x in H.edges))
        gate.check("simple", lambda: max_multiplicity(H) <= 1)
    else:
        gate.check("lower_rank", lambda: e == 0 or lower_rank(H) >= r)
        gate.check("multiplicity", lambda: max_multiplicity(H) <= k - 2)
    if theorem == "egblock":
        gate.check("2_connected", lambda: is_2_connected(incidence_graph(H)))
    if theorem == "egblock-path":
        gate.check("connected", lambda: is_connected(incidence_graph(H)))
    if path_version:
        gate.check("no_long_path", lambda: e < k or longest_berge_path(H) < k)
    else:
        gate.check("no_long_cycle", lambda: e < k or has_berge_cycle_at_least(H, k) is None)

    classify = None
    if theorem in ("eg-full", "eg"):

        def classify(rep: VerdictReport) -> None:
            loose = e > 0 and is_block_tree(H, r, k, strict=False)
            strict = loose and is_block_tree(H, r, k, strict=True)
            rep.details["block_tree"] = loose
            rep.details["block_tree_strict"] = strict
            rep.details["equality_clause"] = rep.tight == loose
            if rep.tight:
                rep.extremal_class = "block_tree" if loose else "other"

    return _report(theorem, gate, bound, e, classify)


def _check_frame(F: Frame, theorem: str, k: int) -> VerdictReport:
    G, r = F.G, F.r
    m, n = G.m, G.n
    D = deficiency_total(F)
    names = ["parameters"]
    if theorem in ("egbgr", "egbgr2"):
        names.append("min_degree")
    if theorem == "egbgr":
        names.append("no_special_shape_block")
    if theorem == "egbgr2":
        names += ["m_at_least_k", "2_connected"]
    if theorem == "main":
        names += ["sizes", "2_connected"]
    names.append("no_long_cycle")
    if theorem == "t1":
        names.append("saturated")
    gate = _Gate(names)

    Q = special_block_count(F, k) if theorem in ("t1", "t2") else 0
    bound = bound_value(theorem, k=k, r=r, n=n, D=D, Q=Q)
    measured = m if theorem in ("egbgr", "egbgr2") else F.m_star
    gate.check("parameters", lambda: not isinstance(bound, Inapplicable))
    if "min_degree" in names:
        gate.check("min_degree", lambda: all(G.degree(x) >= r for x in G.x_nodes))
    if theorem == "egbgr":
        gate.check("no_special_shape_block", lambda: not _has_k_block(G, k, r))
    if theorem == "egbgr2":
        gate.check("m_at_least_k", lambda: m >= k)
        gate.check("2_connected", lambda: is_2_connected(G))
    if theorem == "main":
        gate.check("sizes", lambda: n >= k and m >= F.m_star >= k - 1 and m >= k and F.m_star >= 1)
        gate.check("2_connected", lambda: is_2_connected(G))
    gate.check("no_long_cycle", lambda: has_cycle_at_least(G, 2 * k) is None)
    if theorem == "t1":
        gate.check("saturated", lambda: is_saturated(G, k))

    def classify(rep: VerdictReport) -> None:
        rep.details.update({"D": D, "Q": Q, "m": m, "m_star": F.m_star, "n": n})
        if theorem == "egbgr":
            shape = _egbgr_equality_shape(G, k, r)
            rep.details["equality_shape"] = shape
            if rep.tight:
                rep.details["equality_clause"] = shape
                rep.extremal_class = "block_tree" if shape else "other"
        elif theorem in ("t1", "t2"):
            st = t1_structure(F, k)
            rep.details["structure"] = st
            family = all(st.values())
            if theorem == "t1":
                rep.details["equality_clause"] = rep.tight == family
            if rep.tight:
                rep.extremal_class = "t1_family" if family else "other"
        elif rep.tight:
            rep.extremal_class = "other"

    return _report(theorem, gate, bound, measured, classify)


def _has_k_block(G: BipartiteGraph, k: int, r: int) -> bool:
    """A block that is a complete ``K_{k-1,r}`` with its ``(k-1)``-part in X."""
    dec = blocks(G)
    for i in range(len(dec.blocks)):
        nx_, ny_ = dec.part_sizes(i)
        if nx_ == k - 1 and ny_ == r and len(dec.block_edges[i]) == nx_ * ny_:
            return True
    return False


def _egbgr_equality_shape(G: BipartiteGraph, k: int, r: int) -> bool:
    """Every block fits in ``K_{k-1,r+1}`` (X-side) and every cut vertex lies in Y."""
    dec = blocks(G)
    if any(v < G.m for v in dec.cut_vertices):
        return False
    return all(
        dec.part_sizes(i)[0] <= k - 1 and dec.part_sizes(i)[1] <= r + 1 for i in range(len(dec.blocks))
    )
