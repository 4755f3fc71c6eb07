import csv
import io
import json

import pytest

from coset_atlas import cli, report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table2_csv_matches_fixture(capsys):
    code, out, _ = run(capsys, "table2", "--q", "7", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    fx = report.load_fixture("T2", 7)
    assert [r[0] for r in rows[1:]] == [f["class"] for f in fx.rows]
    for r, f in zip(rows[1:], fx.rows):
        assert r[1:-1] == f["B"] and r[-1] == f["N"]


def test_coset_zero(capsys):
    code, out, _ = run(capsys, "coset", "--q", "5", "--syndrome", "0,0,0,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["q"] == 5 and payload["class"] == "C" and payload["W"] == 0
    assert payload["B"] == ["1", "0", "0", "0", "0", "24", "0"]


def test_coset_vector(capsys):
    code, out, _ = run(capsys, "coset", "--q", "7", "--vector", "0,0,0,0,0,0,0,3")
    payload = json.loads(out)
    assert code == 0 and payload["class"] == "V1" and payload["W"] == 1
    assert all(isinstance(b, str) for b in payload["B"])


def test_verify_brute_q8(capsys):
    code, out, _ = run(capsys, "verify", "--q", "8", "--level", "brute")
    assert code == 0
    assert "4096 syndromes" in out


def test_verify_all_q5_json(capsys):
    code, out, _ = run(capsys, "verify", "--q", "5", "--level", "all", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert [c["check"] for c in doc["checks"]] == list(cli.verify.LEVELS)


def test_verify_brute_out_of_scope(capsys):
    code, out, _ = run(capsys, "verify", "--q", "11", "--level", "brute")
    assert code == 1
    diag = json.loads(out.splitlines()[1])
    assert diag["passed"] is False and diag["check"] == "brute"


def test_orbits_and_incidence(capsys):
    code, out, _ = run(capsys, "orbits", "--q", "9", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 5 and all(r[-1] == "true" for r in rows)
    code, out, _ = run(capsys, "incidence", "--q", "8")
    assert code == 0 and "| M3 | -1 | 10 | 10 | true |" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "t1.json"
    assert cli.main(["table1", "--q", "11", "--format", "json", "--out", str(path)]) == 0
    assert report.from_json(path.read_text()) == report.render_table1(11)


def test_jobs_do_not_change_output(capsys):
    _, one, _ = run(capsys, "verify", "--q", "7", "--level", "table1", "--jobs", "1")
    _, two, _ = run(capsys, "verify", "--q", "7", "--level", "table1", "--jobs", "2")
    assert one == two


@pytest.mark.parametrize("argv", [
    ["table1", "--q", "4"],
    ["table1", "--q", "6"],
    ["table1"],
    ["nonsense", "--q", "5"],
    ["coset", "--q", "5", "--syndrome", "1,2,3"],
    ["coset", "--q", "5", "--syndrome", "0,0,9,0"],
    ["coset", "--q", "5", "--syndrome", "a,b,c,d"],
    ["coset", "--q", "5", "--vector", "1,2"],
    ["table2", "--q", "5", "--field", "2^3:1,1,0,1"],
    ["table2", "--q", "8", "--field", "2^3:1,0,0,1"],
    ["verify", "--q", "5", "--jobs", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_field_override_and_env(tmp_path, capsys, monkeypatch):
    code, out, _ = run(capsys, "coset", "--q", "8", "--field", "2^3:1,0,1,1", "--syndrome", "1,2,3,4")
    assert code == 0 and json.loads(out)["W"] in (2, 3)
    table = tmp_path / "fields.txt"
    table.write_text("# alternative cubic modulus\n2^3:1,0,1,1\n")
    monkeypatch.setenv(cli.FIELD_TABLE_ENV, str(table))
    cfg = cli.RunConfig(q=8, command="table1")
    assert cfg.resolve_field().modulus == (1, 0, 1, 1)
    code, out, _ = run(capsys, "verify", "--q", "8", "--level", "table1")
    assert code == 0
    monkeypatch.setenv(cli.FIELD_TABLE_ENV, str(tmp_path / "missing.txt"))
    assert run(capsys, "table1", "--q", "8")[0] == 2
