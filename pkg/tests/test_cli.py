import io
import json

import pytest

from cutsets.cli import run
from cutsets.constructions import theorem3_cutset
from cutsets.lattice_core import parse_family, write_family, Family


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def t3(tmp_path):
    path = tmp_path / "t3.txt"
    write_family(path, theorem3_cutset(0, 1, 3))
    return str(path)


def test_construct_theorem3():
    code, text = call("construct", "theorem3", "--n", "3", "--x", "0", "--y", "1")
    assert code == 0
    assert parse_family(text) == theorem3_cutset(0, 1, 3)
    assert "\n0\n1\n0 2\n1 2\n" in text


def test_check_cutset(t3):
    code, text = call("check", "cutset", "--family", t3)
    assert code == 0
    assert text.strip() == "is_cutset=true nontrivial=true minimal=true"


def test_check_negative(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("n=2\n0\n")
    code, text = call("check", "cutset", "--family", str(path))
    assert code == 1
    assert "is_cutset=false" in text and "avoiding_chain=1,0" in text
    code, _ = call("check", "minimal", "--family", str(path))
    assert code == 1


def test_check_minimal_reports_members_without_sole_chain(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("n=3\n0\n1\n0 2\n1 2\n0 1\n")
    code, text = call("check", "minimal", "--family", str(path))
    assert code == 1
    assert "minimal=false" in text and "no_sole_chain={0};{1};{0,1}" in text
    code, _ = call("check", "cutset", "--family", str(path))
    assert code == 0


def test_survey():
    code, text = call("survey", "--n", "2")
    assert code == 0
    assert "cutsets=13" in text.split() and "nontrivial_cutsets=1" in text.split()


def test_survey_machine():
    code, text = call("survey", "--n", "3", "--format", "machine")
    doc = json.loads(text)
    assert code == 0 and doc["cutsets"] == 210 and doc["dsw_failure_families"] == []


@pytest.mark.parametrize("kind, args", [
    ("theorem3", ["--n", "4", "--x", "1", "--y", "3"]),
    ("lemma1", ["--n", "4", "--set", "0,2"]),
    ("lemma3b", ["--p", "2", "--q", "3", "--s", "1"]),
    ("tree-chain", ["--k", "3", "--depth", "2"]),
])
def test_construct_round_trip(kind, args, tmp_path):
    code, text = call("construct", kind, *args)
    assert code == 0
    fam = parse_family(text)
    path = tmp_path / "c.txt"
    path.write_text(text)
    # check parses it back identically
    code, _ = call("check", "cutset", "--family", str(path))
    assert code in (0, 1)
    code, mtext = call("construct", kind, *args, "--format", "machine")
    doc = json.loads(mtext)
    assert Family.from_sets(doc["n"], doc["sets"]) == fam


def test_construct_lemma1_empty_set():
    code, text = call("construct", "lemma1", "--n", "2", "--set", "-")
    assert code == 0
    assert parse_family(text).members == (0, 1, 3)


def test_tree_chain_reports_collapse():
    code, text = call("construct", "tree-chain", "--k", "2", "--depth", "2")
    assert "collapsed=2" in text and "distinct=2" in text and "0:e 1:0 2:1" in text


def test_extract_chain(t3, tmp_path):
    src = tmp_path / "src.txt"
    src.write_text("n=3\n-\n2\n0 2\n")
    code, text = call("extract", "chain", "--cutset", t3, "--source", str(src))
    assert code == 0
    assert parse_family(text).members == (0b001, 0b101)
    assert "direction=union alpha=1 group_size=2" in text


def test_extract_antichain(tmp_path):
    c = tmp_path / "c.txt"
    write_family(c, theorem3_cutset(0, 1, 4))
    s = tmp_path / "s.txt"
    _, text = call("construct", "lemma3b", "--p", "2", "--q", "2", "--s", "1")
    s.write_text(text)
    code, out = call("extract", "antichain", "--cutset", str(c), "--source", str(s),
                     "--format", "machine")
    doc = json.loads(out)
    assert code == 0 and doc["dropped"] == 0
    assert doc["sets"] == [[0, 2], [1, 2], [0, 3], [1, 3]]


def test_extract_chain_rejects_non_chain_source(t3, tmp_path):
    src = tmp_path / "src.txt"
    src.write_text("n=3\n0\n1\n")
    code, _ = call("extract", "chain", "--cutset", t3, "--source", str(src))
    assert code == 2


def test_extract_requires_cutset(tmp_path):
    c = tmp_path / "c.txt"
    c.write_text("n=2\n0\n")
    code, _ = call("extract", "chain", "--cutset", str(c), "--source", str(c))
    assert code == 2


def test_analyze(t3):
    code, text = call("analyze", "--family", t3)
    assert code == 0
    fields = dict(tok.split("=", 1) for tok in text.split())
    assert fields["longest_chain"] == "2"
    assert fields["largest_antichain"] == "2"
    assert fields["maximal_antichain"] == "{0};{1,2}"
    code, mtext = call("analyze", "--family", t3, "--format", "machine")
    assert json.loads(mtext)["longest_chain_sets"] == [[0], [0, 2]]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["construct", "theorem3", "--n", "3", "--x", "0", "--y", "0"],
    ["construct", "theorem3", "--n", "3", "--x", "0"],
    ["survey", "--n", "5"],
    ["check", "cutset", "--fam", "x"],
    ["check", "cutset", "--family", "/nonexistent/file"],
    ["construct", "lemma3b", "--p", "8", "--q", "8", "--s", "1"],
    ["verify-paper", "--max-n", "7"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, text = call(*argv)
    assert code == 2
    assert text == ""
    assert capsys.readouterr().err


def test_bad_family_file(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("n=3\n9\n")
    code, _ = call("check", "cutset", "--family", str(path))
    assert code == 2


def test_verify_paper_small():
    code, text = call("verify-paper", "--max-n", "3")
    lines = text.strip().splitlines()
    assert code == 0 and len(lines) == 9
    assert all(line.startswith("[PASS]") for line in lines)
