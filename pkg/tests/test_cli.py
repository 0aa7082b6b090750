from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest

from berge_lab.cli import main
from berge_lab.schemas import SCHEMAS

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS[str(argv[0])])
    return code, doc


CONSTRUCTS = [
    ("block_5_4.hg", ["block", "--r", 5, "--k", 4]),
    ("blocktree_5_4_3.hg", ["block-tree", "--r", 5, "--k", 4, "--blocks", 3]),
    ("blocktree_star_5_4_3.hg", ["block-tree", "--r", 5, "--k", 4, "--blocks", 3, "--shape", "star"]),
    ("star_7_4.hg", ["star", "--n", 7, "--r", 4]),
    ("ht_5_6_2.hg", ["ht", "--k", 5, "--r", 6, "--t", 2]),
    ("t1_5_4_1_1.bg", ["t1-family", "--r", 5, "--k", 4, "--s", 1, "--t", 1]),
]


@pytest.mark.parametrize("name, args", CONSTRUCTS)
def test_construct_matches_golden(tmp_path, capsys, name, args):
    out = tmp_path / name
    code, _, _ = run(capsys, "construct", *args, "--out", out)
    assert code == 0
    assert out.read_text() == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name", [c[0] for c in CONSTRUCTS if (GOLDEN / (c[0].rsplit(".", 1)[0] + ".analyze.txt")).exists()])
def test_round_trip_analyze_is_stable(tmp_path, capsys, name):
    args = dict(CONSTRUCTS)[name]
    out = tmp_path / name
    run(capsys, "construct", *args, "--out", out)
    code, text, _ = run(capsys, "analyze", out, "--k", 4)
    assert code == 0
    assert text == (GOLDEN / (name.rsplit(".", 1)[0] + ".analyze.txt")).read_text()


def test_verify_block_tree(capsys):
    code, out, _ = run(capsys, "verify", GOLDEN / "blocktree_5_4_3.hg", "--theorem", "eg-full", "--k", 4, "--r", 5)
    assert code == 0
    assert out.splitlines()[0] == "holds=true tight=true class=block_tree"
    assert out == (GOLDEN / "blocktree_5_4_3.verify.txt").read_text()


def test_star_analyze(tmp_path, capsys):
    s = tmp_path / "s.hg"
    assert run(capsys, "construct", "star", "--n", 7, "--r", 4, "--out", s)[0] == 0
    code, out, _ = run(capsys, "analyze", s, "--k", 4)
    assert code == 0 and "berge_circumference=3" in out.splitlines()


def test_missing_k_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", GOLDEN / "block_5_4.hg", "--theorem", "eg-full")
    assert code == 2 and out == "" and "--k" in err


def test_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.hg"
    bad.write_text("3 2\n1 2\n1 9\n")
    code, out, err = run(capsys, "analyze", bad, "--k", 4)
    assert code == 2 and out == ""
    assert f"{bad}:3:" in err
    bad_bg = tmp_path / "bad.bg"
    bad_bg.write_text("2 2 1\nx y\n")
    code, _, err = run(capsys, "analyze", bad_bg, "--k", 4)
    assert code == 2 and ":2:" in err


def test_unknown_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_inapplicable_verdict_exit_0(tmp_path, capsys):
    # K_{3,3} with k=4 and r=2 violates the hypotheses: inapplicable is not a failure
    g = tmp_path / "k33.bg"
    g.write_text("3 3 9\n" + "".join(f"{x} {y}\n" for x in range(1, 4) for y in range(1, 4)))
    code, doc = run_json(capsys, "verify", g, "--theorem", "t2", "--k", 4, "--r", 2)
    assert code == 0 and doc["verdict"] == "inapplicable"


def test_exit_1_on_violation(tmp_path, capsys, monkeypatch):
    from fractions import Fraction

    from berge_lab import bounds

    real = bounds.bound_value
    monkeypatch.setattr(
        bounds, "bound_value", lambda t, **kw: Fraction(0) if t == "eg-full" else real(t, **kw)
    )
    code, out, _ = run(capsys, "verify", GOLDEN / "block_5_4.hg", "--theorem", "eg-full", "--k", 4, "--r", 5)
    assert code == 1 and out.startswith("holds=false")
    code, _, err = run(capsys, "enumerate", "--class", "rgraph", "--n", 6, "--r", 5, "--k", 4,
                       "--theorem", "eg-full", "--cross-check-every", 0)
    assert code == 1 and "violation" in err


class TestJsonSchemas:
    def test_analyze(self, capsys):
        code, doc = run_json(capsys, "analyze", GOLDEN / "ht_5_6_2.hg", "--k", 5)
        assert doc["berge_circumference"] == 4
        code, doc = run_json(capsys, "analyze", GOLDEN / "t1_5_4_1_1.bg", "--k", 4)
        assert doc["circumference"] == 6

    def test_verify(self, capsys):
        code, doc = run_json(capsys, "verify", GOLDEN / "t1_5_4_1_1.bg", "--theorem", "t1", "--k", 4, "--r", 5)
        assert code == 0 and doc["tight"] and doc["class"] == "t1_family"
        code, doc = run_json(capsys, "verify", GOLDEN / "star_7_4.hg", "--theorem", "conjecture", "--r", 4)
        assert doc["holds"] and "note" in doc

    def test_construct(self, tmp_path, capsys):
        code, doc = run_json(capsys, "construct", "ht", "--k", 5, "--r", 6, "--t", 3, "--out", tmp_path / "h.hg")
        assert doc["e"] == 6

    def test_structure(self, tmp_path, capsys):
        g = tmp_path / "c6.bg"
        g.write_text("3 3 6\n1 1\n1 2\n2 2\n2 3\n3 3\n3 1\n")
        code, doc = run_json(capsys, "structure", g, "--path", "y1,x1,y2,x2,y3,x3", "--scf", "--disintegrate", "1")
        assert code == 0 and doc["pairs"] == [[1, 2], [5, 6]]
        assert doc["core_edges"] == 6
        code, doc = run_json(capsys, "structure", g, "--disintegrate", "2,1", "--out", tmp_path / "core.bg")
        assert doc["core_m"] == 0

    def test_enumerate(self, tmp_path, capsys):
        code, doc = run_json(capsys, "enumerate", "--class", "multi", "--n", 6, "--r", 5, "--k", 4,
                             "--theorem", "eg-full", "--max-mult", 2, "--shards", 3)
        assert code == 0 and doc["scanned"] == 729 and doc["violations"] == []
        assert all(t["class"] == "block_tree" for t in doc["tight"])
        target = tmp_path / "out.json"
        code, out, _ = run(capsys, "enumerate", "--class", "frame", "--m", 2, "--n", 3, "--r", 5, "--k", 4,
                           "--theorem", "t2", "--json", target)
        jsonschema.validate(json.loads(target.read_text()), SCHEMAS["enumerate"])
        assert "scanned=64" in out

    def test_saturate(self, tmp_path, capsys):
        g = tmp_path / "c6.bg"
        g.write_text("3 3 6\n1 1\n1 2\n2 2\n2 3\n3 3\n3 1\n")
        out = tmp_path / "sat.bg"
        code, doc = run_json(capsys, "saturate", g, "--k", 4, "--out", out)
        assert doc["edges_after"] == 9 and out.read_text().startswith("3 3 9")


def test_seeded_sample_is_reproducible(capsys):
    args = ["enumerate", "--class", "rgraph", "--n", 8, "--r", 4, "--theorem", "conjecture", "--sample", 50, "--seed", 7]
    a = run_json(capsys, *args)[1]
    b = run_json(capsys, *args)[1]
    a.pop("seconds"), b.pop("seconds")
    assert a == b


def test_saturate_regime_error(capsys, tmp_path):
    g = tmp_path / "k33.bg"
    g.write_text("3 3 9\n" + "".join(f"{x} {y}\n" for x in range(1, 4) for y in range(1, 4)))
    code, _, err = run(capsys, "saturate", g, "--k", 3)
    assert code == 2 and "regime" in err


def test_structure_needs_bg(capsys):
    code, out, err = run(capsys, "structure", GOLDEN / "block_5_4.hg", "--disintegrate", "1")
    assert code == 2 and out == "" and err


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "berge_lab", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and "berge-lab" in res.stdout
