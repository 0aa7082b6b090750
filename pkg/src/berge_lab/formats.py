"""Text formats.

``.hg``: first line ``n m``, then ``m`` lines each listing the 1-based
vertices of one edge; repeated lines are repeated edges.

``.bg``: first line ``m n e``, then ``e`` lines ``x y`` with
``1 <= x <= m`` and ``1 <= y <= n``.

Blank lines and ``#`` comments are ignored in both.
"""

from __future__ import annotations

from pathlib import Path

from .bigraph import BipartiteGraph
from .hypercore import MultiHypergraph

__all__ = [
    "FormatError",
    "parse_hg",
    "parse_bg",
    "dump_hg",
    "dump_bg",
    "read_instance",
    "write_instance",
]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _ints(tokens, lineno, source):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", lineno, source) from None


def parse_hg(text: str, source: str | None = None) -> MultiHypergraph:
    recs = list(_records(text))
    if not recs:
        raise FormatError("empty file: missing header 'n m'", None, source)
    lineno, head = recs[0]
    vals = _ints(head, lineno, source)
    if len(vals) != 2 or min(vals) < 0:
        raise FormatError("header must be 'n m' with nonnegative integers", lineno, source)
    n, m = vals
    body = recs[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise FormatError(f"header announces {m} edges, found {len(body)}", at, source)
    edges = []
    for lineno, toks in body:
        vs = _ints(toks, lineno, source)
        if len(set(vs)) != len(vs):
            raise FormatError("edge repeats a vertex", lineno, source)
        for v in vs:
            if not 1 <= v <= n:
                raise FormatError(f"vertex {v} outside 1..{n}", lineno, source)
        edges.append([v - 1 for v in vs])
    return MultiHypergraph(n, edges)


def parse_bg(text: str, source: str | None = None) -> BipartiteGraph:
    recs = list(_records(text))
    if not recs:
        raise FormatError("empty file: missing header 'm n e'", None, source)
    lineno, head = recs[0]
    vals = _ints(head, lineno, source)
    if len(vals) != 3 or min(vals) < 0:
        raise FormatError("header must be 'm n e' with nonnegative integers", lineno, source)
    m, n, e = vals
    body = recs[1:]
    if len(body) != e:
        at = body[e][0] if len(body) > e else (body[-1][0] if body else lineno)
        raise FormatError(f"header announces {e} edges, found {len(body)}", at, source)
    edges = []
    for lineno, toks in body:
        vs = _ints(toks, lineno, source)
        if len(vs) != 2:
            raise FormatError("edge line must be 'x y'", lineno, source)
        x, y = vs
        if not (1 <= x <= m and 1 <= y <= n):
            raise FormatError(f"edge ({x}, {y}) outside 1..{m} x 1..{n}", lineno, source)
        edges.append((x - 1, y - 1))
    return BipartiteGraph.from_edges(m, n, edges)


def dump_hg(H: MultiHypergraph) -> str:
    lines = [f"{H.n} {H.num_edges}"]
    lines += [" ".join(map(str, e)) for e in H.one_based_edges()]
    return "\n".join(lines) + "\n"


def dump_bg(G: BipartiteGraph) -> str:
    edges = G.local_edges()
    lines = [f"{G.m} {G.n} {len(edges)}"]
    lines += [f"{x + 1} {y + 1}" for x, y in edges]
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> MultiHypergraph | BipartiteGraph:
    """Read ``.hg`` or ``.bg`` by extension."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read: {exc.strerror}", None, str(path)) from None
    if path.suffix == ".hg":
        return parse_hg(text, str(path))
    if path.suffix == ".bg":
        return parse_bg(text, str(path))
    raise FormatError("unknown extension (expected .hg or .bg)", None, str(path))


def write_instance(path: str | Path, obj) -> None:
    path = Path(path)
    if isinstance(obj, MultiHypergraph):
        if path.suffix != ".hg":
            raise FormatError("hypergraphs are written as .hg", None, str(path))
        path.write_text(dump_hg(obj), encoding="utf-8")
    elif isinstance(obj, BipartiteGraph):
        if path.suffix != ".bg":
            raise FormatError("bipartite graphs are written as .bg", None, str(path))
        path.write_text(dump_bg(obj), encoding="utf-8")
    else:
        raise TypeError(f"cannot write {type(obj).__name__}")
