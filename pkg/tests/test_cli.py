import json
import subprocess
import sys

import pytest

from hfl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_verify_all_suites_n3(capsys):
    code, out = run(capsys, "verify", "--n", "3", "--suite", "all")
    assert code == 0
    doc = json.loads(out.out)
    assert doc["schema"] == "hfl/1" and doc["pass"] is True
    assert all(r["pass"] for r in doc["reports"])


def test_verify_fusion_n8_counts_pairs(capsys):
    code, out = run(capsys, "verify", "--n", "8", "--suite", "fusion")
    assert code == 0
    doc = json.loads(out.out)
    oracle = doc["reports"][0]["checks"][0]
    assert oracle["cases"] == 44 * 44 and oracle["pass"]


@pytest.mark.parametrize("argv", [
    ["verify", "--n", "1"],
    ["verify", "--n", "zero"],
    ["verify", "--n", "3", "--suite", "nope"],
    ["verify", "--n", "3", "--format", "csv"],
    ["idempotents", "--n", "2", "--format", "csv"],
    ["bogus"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_table_csv_n2(capsys):
    code, out = run(capsys, "table", "--n", "2", "--format", "csv")
    lines = out.out.splitlines()
    assert code == 0 and lines[0] == "a,b,c,N"
    assert len({line.split(",")[0] for line in lines[1:]}) == 5


def test_table_json_has_shift_identities(capsys):
    code, out = run(capsys, "table", "--n", "3", "--format", "json")
    doc = json.loads(out.out)
    assert len(doc["simples"]) == 9
    idx = doc["simples"].index
    assert doc["table"][idx("S_{0,1}")][idx("S_4")] == {"S_{1,2}": 1}


def test_table_is_deterministic(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(["table", "--n", "4", "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_unwritable_output(capsys, tmp_path):
    code, out = run(capsys, "table", "--n", "2", "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 2 and "cannot write" in out.err


def test_idempotents_listing(capsys):
    code, out = run(capsys, "idempotents", "--n", "3")
    doc = json.loads(out.out)["results"][0]
    assert code == 0 and doc["count"] == 9 and doc["total_dimension"] == 18


@pytest.mark.parametrize("n", [2, 6, 7])
def test_presentation_prints_worked_example(capsys, n):
    code, out = run(capsys, "presentation", "--n", str(n))
    doc = json.loads(out.out)
    assert code == 0 and doc["pass"]
    assert doc["results"][0]["worked_example"]


def test_presentation_n7_text(capsys):
    code, out = run(capsys, "presentation", "--n", "7", "--format", "text")
    assert code == 0
    assert "generators: y^14 - 1, zy^7 - z, z^4 - z^3y^4 - 4z^2y + 3zy^5 + y^9 + y^2" in out.out


def test_failure_exit_code(monkeypatch, capsys):
    from hfl import cli
    from hfl.report import VerificationReport

    def broken(n):
        report = VerificationReport("broken")
        report.add("always fails", False, "witness", 1)
        return report

    monkeypatch.setitem(cli.SUITES, "hopf", (broken,))
    code, out = run(capsys, "verify", "--n", "2", "--suite", "hopf", "--format", "text")
    assert code == 1 and "FAIL" in out.out


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "hfl", "verify", "--n", "1"], capture_output=True, text=True)
    assert done.returncode == 2
    done = subprocess.run([sys.executable, "-m", "hfl", "table", "--n", "2", "--format", "text"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and "S_1 (x) S_1 = S_0" in done.stdout
