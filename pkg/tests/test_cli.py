import io
import json
import subprocess
import sys

import pytest

from clutter_complexity.cli import main
from clutter_complexity.graph import complete, cycle, encode_graph6

K6 = encode_graph6(complete(6))


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_matching_complexity_of_k6(cli):
    code, out, _ = cli(["complexity", "--matching", "--graph6", K6])
    assert code == 0 and json.loads(out)["c"] == "2/3"


def test_family_pipes_into_complexity(cli):
    code, g6, _ = cli(["family", "all-rationals", "-m", "2", "-n", "3"])
    assert code == 0 and g6.strip()
    code, out, _ = cli(["complexity", "--independent"], g6)
    assert json.loads(out)["c"] == "2/3"


def test_generators_emit_graph6_for_checkers(cli):
    for argv in (["family", "main-bound", "3"], ["family", "witness", "--target", "1/2"]):
        code, g6, _ = cli(argv)
        assert code == 0
        code, out, _ = cli(["report"], g6)
        assert code == 0 and json.loads(out)["c_independent"]


def test_reduce_pipeline(cli):
    inst = "3 3\n0 1\n1 2\n2\n"
    code, g6, _ = cli(["reduce", "problem1"], inst)
    assert code == 0
    code, out, _ = cli(["complexity", "--format", "tsv"], g6)
    assert code == 0 and out.count("\t") == 4
    code, out, _ = cli(["reduce", "verify"], inst)
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and [l["holds"] for l in lines] == [True, True] and lines[1]["c"] == "2/3"


def test_builtin_scan(cli):
    code, out, _ = cli(["scan", "--builtin", "--max-n", "7"])
    rep = json.loads(out)
    assert code == 0 and rep["counterexamples"] == [] and rep["tallies"]["exception:C_7"] == 360


def test_scan_bound_mode(cli):
    code, out, _ = cli(["scan", "--bound", "main"], "C]\nC~\n")
    rep = json.loads(out)
    assert code == 0 and rep["tallies"] == {"main:holds": 1, "main:inapplicable": 1}


def test_check_commands(cli, tmp_path):
    code, out, _ = cli(["check", "bound", "main", "--graph6", "C]"])
    assert code == 0 and json.loads(out)["applicable"] is False
    code, out, _ = cli(["check", "lemma", "perfect_matching_charact", "--graph6", "EFz_", "--format", "human"])
    assert code == 0 and "pass" in out
    f = tmp_path / "l.txt"
    code, _, _ = cli(["family", "addendum", "3"])
    f.write_text("2\n0\n1\n")
    code, out, _ = cli(["check", "bound", "addendum", "--clutter-file", str(f)])
    assert code == 0


def test_tree_commands(cli):
    code, out, _ = cli(["label-tree"], "4\n0 1\n1 2\n2 3\n")
    rows = json.loads(out)["vertices"]
    assert code == 0 and rows[0]["labels"] == ["beta", "delta"]
    code, out, _ = cli(["construct-tree-mis", "--leaf", "0"], "5\n0 1\n1 2\n2 3\n3 4\n")
    assert code == 0 and json.loads(out)["U"] == [0, 3]
    code, _, err = cli(["construct-tree-mis", "--leaf", "1"], "4\n0 1\n0 2\n0 3\n")
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("argv,stdin", [
    (["bogus"], ""),
    (["complexity", "--graph6", "A~x"], ""),
    (["complexity", "--matching", "--graph6", "A?"], ""),
    (["complexity"], ""),
    (["complexity", "--input", "/nonexistent/file"], ""),
    (["reduce", "verify"], "3 1\n0 1\n"),
    (["label-tree", "--graph6", "Bw"], ""),
    (["complexity", "--vertex-cap", "3", "--graph6", "C~"], ""),
    (["scan", "--builtin", "--max-n", "9"], ""),
    (["family", "witness", "--target", "abc"], ""),
])
def test_bad_input_exits_2(cli, argv, stdin):
    code, out, err = cli(argv, stdin)
    assert code == 2 and err.count("\n") == 1 and err.startswith("error:")


def test_counterexample_exit_code(cli, monkeypatch):
    from clutter_complexity import verification

    code, _, _ = cli(["scan"], encode_graph6(cycle(7)) + "\n")
    assert code == 0
    # with the exception list disabled C_7 must surface as a counterexample
    monkeypatch.setattr(verification, "conjecture_class", lambda g: None)
    code, out, _ = cli(["scan"], encode_graph6(cycle(7)) + "\n")
    assert code == 1 and json.loads(out)["counterexamples"] == [encode_graph6(cycle(7))]


def test_time_limit(cli):
    code, _, err = cli(["scan", "--builtin", "--max-n", "7", "--time-limit", "0.01"])
    assert code == 2 and "time limit" in err


def test_output_is_byte_identical():
    argv = [sys.executable, "-m", "clutter_complexity", "family", "witness", "--target", "1/3",
            "--format", "json", "--seed", "4"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b and "Gp_K?C" in a
