"""Command-line front end: ``berge-lab <subcommand> ...``.

Results go to standard output as ``key=value`` lines, or as one JSON
document with ``--json`` (``--json PATH`` writes it to a file instead).
Diagnostics go to standard error.  Exit status: 0 success or verdict
holds, 1 a theorem verdict fails, 2 usage or input error.

Nodes of ``.bg`` graphs are named ``x1..xm`` and ``y1..yn`` on the
command line; hypergraph vertices are ``1..n``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from .bigraph import BipartiteGraph
from .bounds import FRAME_THEOREMS, THEOREMS, Frame, check_theorem
from .circumference import (
    NotInRegime,
    berge_cycle,
    berge_path,
    circumference,
    is_saturated,
    longest_path,
    saturate,
)
from .constructions import make_block, make_block_tree, make_ht, make_star, make_t1_family
from .enumeration import BudgetExceeded, CampaignSpec, run_campaign, run_sample
from .formats import FormatError, dump_bg, read_instance, write_instance
from .hypercore import MultiHypergraph, incidence_graph
from .structure import (
    HypothesisError,
    check_saturated_crossing_formation,
    decorate,
    disintegrate_trace,
    separation_check,
)

EXIT_OK = 0
EXIT_VERDICT_FAILS = 1
EXIT_USAGE = 2

DEFAULT_SEED = 0


class UsageError(Exception):
    """Bad flag combination, detected before any work starts."""


@dataclass
class RunConfig:
    """Parsed and cross-validated command line."""

    subcommand: str
    args: argparse.Namespace
    json_target: str | None = None  # None: key=value; "-": JSON on stdout; else a path
    verbose: int = 0
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# output helpers


def _fmt(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        # nested pairs print as i:j
        return ",".join(":".join(map(_fmt, v)) if isinstance(v, (list, tuple)) else _fmt(v) for v in value)
    return str(value)


def _emit(cfg: RunConfig, record: dict, text_keys: Sequence[str] | None = None, out=None) -> None:
    out = sys.stdout if out is None else out
    if cfg.json_target is not None:
        doc = json.dumps(record, indent=2, sort_keys=True)
        if cfg.json_target == "-":
            print(doc, file=out)
        else:
            Path(cfg.json_target).write_text(doc + "\n", encoding="utf-8")
            _text(record, text_keys, out)
        return
    _text(record, text_keys, out)


def _text(record: dict, keys, out) -> None:
    for key in keys if keys is not None else record:
        if key in record and not isinstance(record[key], dict):
            print(f"{key}={_fmt(record[key])}", file=out)


def _node_name(G: BipartiteGraph, v: int) -> str:
    return f"x{v + 1}" if v < G.m else f"y{v - G.m + 1}"


def _parse_node(G: BipartiteGraph, token: str) -> int:
    token = token.strip()
    if len(token) < 2 or token[0] not in "xy" or not token[1:].isdigit():
        raise UsageError(f"node {token!r} is not of the form x<i> or y<j>")
    i = int(token[1:])
    size = G.m if token[0] == "x" else G.n
    if not 1 <= i <= size:
        raise UsageError(f"node {token} outside 1..{size}")
    return i - 1 if token[0] == "x" else G.m + i - 1


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers") from None


def _load(path: str, kind: str | None = None):
    obj = read_instance(path)
    if kind == "bg" and not isinstance(obj, BipartiteGraph):
        raise UsageError(f"{path}: this subcommand needs a .bg file")
    return obj


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(cfg: RunConfig) -> int:
    a = cfg.args
    obj = _load(a.file)
    rec: dict = {"file": a.file, "k": a.k}
    if isinstance(obj, MultiHypergraph):
        H = obj
        G = incidence_graph(H)
        cyc = berge_cycle(H)
        path = berge_path(H)
        rec.update(
            kind="hypergraph",
            n=H.n,
            e=H.num_edges,
            berge_circumference=0 if cyc is None else cyc.length,
            longest_berge_path=0 if path is None else path.length,
            incidence_circumference=circumference(G)[0],
        )
        rec["berge_cycle"] = None if cyc is None else {
            "vertices": [v + 1 for v in cyc.base_vertices],
            "edges": [j + 1 for j in cyc.edge_assignment],
        }
        if a.r is not None:
            rec["r"] = a.r
    else:
        G = obj
        c, wit = circumference(G)
        plen, pnodes = longest_path(G)
        rec.update(
            kind="bipartite",
            m=G.m,
            n=G.n,
            edges=G.num_edges,
            circumference=c,
            longest_path=plen,
        )
        rec["cycle"] = None if wit is None else [_node_name(G, v) for v in wit.nodes]
        rec["path"] = [_node_name(G, v) for v in pnodes]
    try:
        rec["saturated"] = is_saturated(G, a.k)
        rec["long_cycle"] = False
    except NotInRegime:
        rec["saturated"] = None
        rec["long_cycle"] = True
    keys = [
        "kind", "m", "n", "e", "edges", "circumference", "berge_circumference",
        "longest_path", "longest_berge_path", "incidence_circumference", "saturated", "long_cycle",
    ]
    _emit(cfg, rec, keys)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    a = cfg.args
    obj = _load(a.file)
    if a.theorem in FRAME_THEOREMS:
        if isinstance(obj, BipartiteGraph):
            xs = None if a.xstar is None else [x - 1 for x in _ints(a.xstar, "--xstar")]
            if xs is not None and any(not 0 <= x < obj.m for x in xs):
                raise UsageError(f"--xstar entries must lie in 1..{obj.m}")
            instance = Frame(obj, frozenset(obj.x_nodes if xs is None else xs), a.r)
        else:
            if a.xstar is not None:
                raise UsageError("--xstar applies to .bg inputs only")
            instance = obj
        rep = check_theorem(instance, a.theorem, a.k, a.r)
    else:
        if not isinstance(obj, MultiHypergraph):
            raise UsageError(f"{a.theorem} needs a .hg file")
        rep = check_theorem(obj, a.theorem, a.k, a.r)
    d = rep.to_dict()
    rec = {
        "theorem": rep.theorem,
        "verdict": rep.verdict,
        "applicable": rep.applicable,
        "holds": rep.holds,
        "tight": rep.tight,
        "class": rep.extremal_class,
        "measured": rep.measured,
        "bound": None if rep.bound is None else str(rep.bound),
        "hypotheses": d["hypotheses"],
        "details": d["details"],
    }
    if rep.theorem == "conjecture":
        rec["note"] = "conjecture: consistency check only"
    # the headline triple first, as one line
    if cfg.json_target is None:
        print(f"holds={_fmt(rep.holds)} tight={_fmt(rep.tight)} class={rep.extremal_class}")
        _text(rec, ["theorem", "verdict", "measured", "bound"], sys.stdout)
        for name, val in d["hypotheses"].items():
            print(f"hypothesis.{name}={_fmt(val)}")
    else:
        _emit(cfg, rec, [])
    return EXIT_VERDICT_FAILS if rep.violation else EXIT_OK


def cmd_construct(cfg: RunConfig) -> int:
    a = cfg.args
    fam = a.family

    def need(*names):
        missing = [f"--{n.replace('_', '-')}" for n in names if getattr(a, n) is None]
        if missing:
            raise UsageError(f"construct {fam} requires {', '.join(missing)}")

    if fam == "block":
        need("r", "k")
        obj = make_block(a.r, a.k, full_edges=a.full_edges)
    elif fam == "block-tree":
        need("r", "k", "blocks")
        shape = a.shape
        if shape not in ("path", "star"):
            shape = _ints(shape, "--shape")
        obj = make_block_tree(a.r, a.k, a.blocks, shape)
    elif fam == "star":
        need("n", "r")
        obj = make_star(a.n, a.r)
    elif fam == "ht":
        need("k", "r", "t")
        obj = make_ht(a.k, a.r, a.t)
    else:  # t1-family
        need("r", "k", "s", "t")
        obj = make_t1_family(a.r, a.k, a.s, a.t).G
    write_instance(a.out, obj)
    rec = {"family": fam, "out": a.out}
    if isinstance(obj, MultiHypergraph):
        rec.update(kind="hypergraph", n=obj.n, e=obj.num_edges)
    else:
        rec.update(kind="bipartite", m=obj.m, n=obj.n, edges=obj.num_edges)
    _emit(cfg, rec)
    return EXIT_OK


def cmd_structure(cfg: RunConfig) -> int:
    a = cfg.args
    G = _load(a.file, "bg")
    rec: dict = {"file": a.file}
    if a.path is not None:
        P = [_parse_node(G, t) for t in a.path.split(",") if t.strip()]
        if len(P) < 2:
            raise UsageError("--path needs at least two nodes")
        try:
            d = decorate(G, P)
        except ValueError as exc:
            raise UsageError(f"--path: {exc}") from None
        rec["path"] = [_node_name(G, v) for v in P]
        rec["n_first"] = list(d.n_first)
        rec["n_last"] = list(d.n_last)
        rec["pairs"] = [list(p) for p in d.pairs]
        if a.scf:
            rep = check_saturated_crossing_formation(G, P)
            rec["scf"] = rep.to_dict()
            rec["scf_ok"] = rep.ok
            for part, ok in sorted(rep.parts.items()):
                rec[f"part{part}"] = ok
            if rep.ok:
                rec["separation"] = separation_check(G, P)
    elif a.scf:
        raise UsageError("--scf requires --path")
    if a.disintegrate is not None:
        th = _ints(a.disintegrate, "--disintegrate")
        if len(th) not in (1, 2) or min(th) < 0:
            raise UsageError("--disintegrate takes ALPHA or ALPHA_X,ALPHA_Y (nonnegative)")
        ax, ay = (th[0], th[0]) if len(th) == 1 else th
        xs = None if a.xstar is None else [x - 1 for x in _ints(a.xstar, "--xstar")]
        ys = None if a.ystar is None else [G.m + y - 1 for y in _ints(a.ystar, "--ystar")]
        keep, removed = disintegrate_trace(G, ax, ay, xs, ys)
        core = G.induced(keep)
        rec["core_nodes"] = [_node_name(G, v) for v in range(G.num_nodes) if (keep >> v) & 1]
        rec["core_m"] = core.m
        rec["core_n"] = core.n
        rec["core_edges"] = core.num_edges
        rec["removed"] = [_node_name(G, v) for v in removed]
        if a.out:
            write_instance(a.out, core)
        elif cfg.json_target is None:
            cfg.extra["core_bg"] = dump_bg(core)
    if a.path is None and a.disintegrate is None:
        raise UsageError("structure needs --path and/or --disintegrate")
    keys = ["path", "n_first", "n_last", "pairs", "scf_ok"]
    keys += [k for k in rec if k.startswith("part")]
    keys += ["separation", "core_nodes", "core_m", "core_n", "core_edges", "removed"]
    _emit(cfg, rec, keys)
    if "core_bg" in cfg.extra:
        print("# core", file=sys.stdout)
        sys.stdout.write(cfg.extra["core_bg"])
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    a = cfg.args
    klass = a.instance_class
    if klass == "frame" and a.m is None:
        raise UsageError("--class frame requires --m (size of the X part)")
    theorems = tuple(t for t in a.theorem.split(",") if t)
    spec = CampaignSpec(
        klass, a.n, a.r, a.k, theorems,
        max_mult=a.max_mult, m=a.m, prune=a.prune, shards=a.shards,
        workers=a.workers, cross_check_every=a.cross_check_every,
    )
    if a.sample is not None:
        res = run_sample(spec, a.sample, a.seed)
    else:
        res = run_campaign(spec)
    rec = res.to_dict()
    rec["violation_count"] = len(res.violations)
    rec["estimate"] = spec.estimate()
    if "conjecture" in theorems:
        rec["note"] = "conjecture: consistent up to these parameters" if not res.violations else (
            "conjecture: counterexample candidates found"
        )
    keys = ["estimate", "scanned", "applicable", "violation_count", "tight_count", "oracle_checks",
            "complete", "seconds", "note"]
    _emit(cfg, rec, keys)
    if cfg.json_target is None:
        for name, count in sorted(res.histogram.items()):
            print(f"tight.{name}={count}")
    for v in res.violations[:5]:
        print(f"violation: {v['theorem']} measured={v['measured']} bound={v['bound']} "
              f"instance={v['instance']}", file=sys.stderr)
    return EXIT_VERDICT_FAILS if res.violations else EXIT_OK


def cmd_saturate(cfg: RunConfig) -> int:
    a = cfg.args
    G = _load(a.file, "bg")
    S = saturate(G, a.k)
    added = [(_node_name(G, x), _node_name(G, y)) for x, y in S.edges() if not G.has_edge(x, y)]
    if a.out:
        write_instance(a.out, S)
    rec = {
        "file": a.file,
        "k": a.k,
        "edges_before": G.num_edges,
        "edges_after": S.num_edges,
        "added": [f"{x}-{y}" for x, y in added],
        "circumference": circumference(S)[0],
    }
    _emit(cfg, rec)
    if not a.out and cfg.json_target is None:
        sys.stdout.write(dump_bg(S))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="berge-lab", description="Berge cycles, bipartite frames and extremal bounds.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp):
        sp.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH",
                        help="emit JSON (to stdout, or to PATH)")
        sp.add_argument("-v", "--verbose", action="count", default=0)

    sp = sub.add_parser("analyze", help="circumference, Berge circumference, longest paths, saturation")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int)
    common(sp)

    sp = sub.add_parser("verify", help="check one theorem on one instance")
    sp.add_argument("file")
    sp.add_argument("--theorem", required=True, choices=THEOREMS)
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--xstar", help="comma-separated 1-based X indices (default: all of X)")
    common(sp)

    sp = sub.add_parser("construct", help="write an extremal-family instance")
    sp.add_argument("family", choices=["block", "block-tree", "star", "ht", "t1-family"])
    sp.add_argument("--r", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("--blocks", type=int)
    sp.add_argument("--shape", default="path", help="path, star, or comma-separated parent list")
    sp.add_argument("--full-edges", type=int, default=0)
    sp.add_argument("--out", required=True)
    common(sp)

    sp = sub.add_parser("structure", help="path decorations, crossing formations, disintegration")
    sp.add_argument("file")
    sp.add_argument("--path", help="comma-separated nodes, e.g. y1,x1,y2")
    sp.add_argument("--scf", action="store_true", help="run the saturated-crossing-formation check")
    sp.add_argument("--disintegrate", metavar="A[,AY]", help="ALPHA, or ALPHA_X,ALPHA_Y")
    sp.add_argument("--xstar")
    sp.add_argument("--ystar")
    sp.add_argument("--out", help="write the core as .bg")
    common(sp)

    sp = sub.add_parser("enumerate", help="exhaustive (or sampled) verification campaign")
    sp.add_argument("--class", dest="instance_class", required=True, choices=["rgraph", "multi", "frame"])
    sp.add_argument("--n", type=int, required=True, help="vertices (hypergraphs) or Y-part size (frames)")
    sp.add_argument("--m", type=int, help="X-part size (frames)")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--theorem", required=True, help="theorem id, or several separated by commas")
    sp.add_argument("--max-mult", type=int, default=1)
    sp.add_argument("--shards", type=int, default=1)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--prune", action="store_true")
    sp.add_argument("--cross-check-every", type=int, default=500)
    sp.add_argument("--sample", type=int, help="check this many random instances instead of all")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(sp)

    sp = sub.add_parser("saturate", help="2k-saturation closure of a .bg graph")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--out")
    common(sp)
    return p


HANDLERS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "construct": cmd_construct,
    "structure": cmd_structure,
    "enumerate": cmd_enumerate,
    "saturate": cmd_saturate,
}


def parse_config(argv: Sequence[str] | None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.subcommand, args, args.json, args.verbose)
    if args.subcommand == "verify":
        if args.theorem != "conjecture" and args.k is None:
            raise UsageError(f"--theorem {args.theorem} requires --k")
        if args.theorem != "erdos-gallai" and args.r is None:
            raise UsageError(f"--theorem {args.theorem} requires --r")
    if args.subcommand == "enumerate":
        for t in args.theorem.split(","):
            if t not in THEOREMS:
                raise UsageError(f"unknown theorem {t!r}")
            if t != "conjecture" and args.k is None:
                raise UsageError(f"--theorem {t} requires --k")
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse: --help exits 0, usage errors 2
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"berge-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return HANDLERS[cfg.subcommand](cfg)
    except (UsageError, FormatError, HypothesisError, NotInRegime, BudgetExceeded, ValueError) as exc:
        print(f"berge-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
