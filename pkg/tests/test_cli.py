import json
import subprocess
import sys

import pytest

import seqcm.cli as cli
from seqcm.cli import RunConfig, UsageError, fixture_names, main
from seqcm.fields import GF2
from seqcm.theorems import TheoremReport

WORKED = "ring x,y,z; ideal x*z, y*z;"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def doc(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


class TestCommands:
    def test_decompose(self, capsys):
        d = doc(capsys, "decompose", "-e", WORKED)
        assert d["schema"] == 1
        assert d["primary"] == [{"prime": ["z"], "component": ["z"]},
                                {"prime": ["x", "y"], "component": ["x", "y"]}]

    def test_decompose_rejects_sums(self, capsys):
        code, _, err = run(capsys, "decompose", "-e", "ring x,y; module [x] (+) [y];")
        assert code == 1 and "single ideal" in err

    def test_invariants_simplex(self, capsys):
        d = doc(capsys, "invariants", "-e", "vertices 4; facets 1 2 3 4;")
        assert (d["cm"], d["dim"], d["depth"], d["field"]) == (True, 4, 4, "Q")

    def test_invariants_field(self, capsys):
        assert doc(capsys, "invariants", "--fixture", "rp2")["cm"] is True
        d = doc(capsys, "invariants", "--fixture", "rp2", "--field", "f2")
        assert (d["cm"], d["depth"], d["field"]) == (False, 2, "F2")

    def test_filtration_worked_example(self, capsys):
        d = doc(capsys, "filtration", "--fixture", "worked_example")
        assert d["dims"] == [1, 2]
        assert d["chain"] == [["x*z", "y*z"], ["z"], ["1"]]
        assert d["seqcm"] is True
        assert [q["dim"] for q in d["quotients"]] == [1, 2]
        assert len(d["certificate"]["levels"]) == 2

    def test_filtration_modes_share_chain(self, capsys):
        a = doc(capsys, "filtration", "--fixture", "two_triangles")
        b = doc(capsys, "filtration", "--fixture", "two_triangles", "--mode", "direct")
        assert a["chain"] == b["chain"] and a["seqcm"] == b["seqcm"]
        assert b["certificate"]["mode"] == "direct"

    def test_key_order(self, capsys):
        d = doc(capsys, "filtration", "--fixture", "worked_example")
        assert list(d)[:4] == ["schema", "dims", "chain", "seqcm"]

    def test_seqcm_certificate_flag(self, capsys):
        plain = doc(capsys, "seqcm", "--fixture", "disjoint_edges")
        assert plain == {"schema": 1, "seqcm": False, "field": "Q"}
        full = doc(capsys, "seqcm", "--fixture", "disjoint_edges", "--certificate")
        assert full["certificate"]["levels"][0]["cm"] is False

    def test_file_input_and_json_output(self, capsys, tmp_path):
        src = tmp_path / "in.txt"
        src.write_text("# comment\n" + WORKED)
        out = tmp_path / "out.json"
        code, printed, _ = run(capsys, "seqcm", str(src), "--json", str(out))
        assert code == 0
        assert out.read_text().strip() == printed.strip()

    def test_verify_pass(self, capsys):
        d = doc(capsys, "verify", "thm33", "--trials", "4", "--seed", "2")
        assert d["verdict"] == "pass" and d["failures"] == [] and d["trials"] == 4

    def test_verify_counterexample_exit_code(self, capsys, monkeypatch):
        bad = TheoremReport("lemma31", 1, 0, failures=[{"trial": 0}])
        monkeypatch.setitem(cli.VERIFIERS, "lemma31", lambda **kw: bad)
        code, out, _ = run(capsys, "verify", "lemma31")
        assert code == 2 and json.loads(out)["verdict"] == "fail"

    def test_fixture_listing(self, capsys):
        code, out, _ = run(capsys, "fixtures")
        assert code == 0 and "rp2" in out.split()


class TestUsageErrors:
    @pytest.mark.parametrize("argv", [
        ["seqcm"],
        ["seqcm", "-e", WORKED, "--fixture", "rp2"],
        ["invariants", "--fixture", "nope"],
        ["invariants", "-e", WORKED, "--field", "f4"],
        ["verify", "lemma99"],
        ["verify", "lemma31", "--trials", "0"],
        ["frobnicate"],
        ["seqcm", "/nonexistent/path.txt"],
        ["invariants", "-e", "ring x; ideal 1;"],
    ])
    def test_exit_one(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 1 and err

    def test_parse_error_has_position(self, capsys):
        code, _, err = run(capsys, "invariants", "-e", "ring x,y; ideal x+y;")
        assert code == 1 and "line 1, column 17" in err


def test_run_config_requires_one_source():
    with pytest.raises(UsageError):
        RunConfig("invariants")
    with pytest.raises(UsageError):
        RunConfig("invariants", text=WORKED, fixture="rp2")
    cfg = RunConfig("invariants", fixture="rp2", field=GF2)
    assert "facets" in cfg.read_input()


def test_fixture_corpus_complete():
    names = set(fixture_names())
    assert {"worked_example", "disjoint_edges", "two_triangles", "rp2"} <= names
    assert {f"simplex_boundary_{n}" for n in range(3, 7)} <= names


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "seqcm", "invariants", "-e", WORKED],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dim"] == 2


def test_reports_byte_identical(capsys):
    first = run(capsys, "filtration", "--fixture", "rp2", "--field", "f2")[1]
    second = run(capsys, "filtration", "--fixture", "rp2", "--field", "f2")[1]
    assert first == second
