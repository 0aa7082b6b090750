from __future__ import annotations

import pytest

from berge_lab.bigraph import BipartiteGraph
from berge_lab.constructions import make_ht, make_t1_family
from berge_lab.formats import FormatError, dump_bg, dump_hg, parse_bg, parse_hg, read_instance, write_instance


def test_hg_round_trip(tmp_path):
    H = make_ht(5, 6, 2)
    path = tmp_path / "h.hg"
    write_instance(path, H)
    back = read_instance(path)
    assert back.n == H.n and back.one_based_edges() == H.one_based_edges()
    assert dump_hg(back) == path.read_text()


def test_bg_round_trip(tmp_path):
    G = make_t1_family(5, 4, 1, 1).G
    path = tmp_path / "g.bg"
    write_instance(path, G)
    assert read_instance(path) == G
    assert dump_bg(read_instance(path)) == path.read_text()


def test_comments_and_blank_lines():
    H = parse_hg("# header\n3 2\n\n1 2  # first\n2 3\n")
    assert H.one_based_edges() == [[1, 2], [2, 3]]
    G = parse_bg("2 2 1\n# c\n2 1\n")
    assert G == BipartiteGraph.from_edges(2, 2, [(1, 0)])


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("3 2\n1 2\n1 4\n", 3, "outside"),
        ("3 2\n1 2\n", 2, "announces"),
        ("3 1\n1 1\n", 2, "repeats"),
        ("3\n", 1, "header"),
        ("3 1\n1 x\n", 2, "integers"),
    ],
)
def test_hg_errors(text, line, fragment):
    with pytest.raises(FormatError) as exc:
        parse_hg(text, "t.hg")
    assert exc.value.line == line and fragment in str(exc.value)
    assert str(exc.value).startswith(f"t.hg:{line}:")


@pytest.mark.parametrize(
    "text, line",
    [("2 2 1\n3 1\n", 2), ("2 2 2\n1 1\n", 2), ("2 2 1\n1 1 1\n", 2)],
)
def test_bg_errors(text, line):
    with pytest.raises(FormatError) as exc:
        parse_bg(text)
    assert exc.value.line == line


def test_unknown_extension(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("1 0\n")
    with pytest.raises(FormatError):
        read_instance(p)
    with pytest.raises(FormatError):
        read_instance(tmp_path / "missing.hg")
