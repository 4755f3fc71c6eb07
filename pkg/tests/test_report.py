import pytest

from coset_atlas import report
from coset_atlas.errors import FixtureMissing

FIXTURE_QS = (5, 7, 8, 9, 11)


def test_fixture_sets():
    assert report.fixture_qs("T1") == list(FIXTURE_QS)
    assert report.fixture_qs("T2") == list(FIXTURE_QS)


def test_table1_rows():
    assert [r[0] for r in report.render_table1(7).rows] == ["1", "2", "3", "4", "5", "6"]
    assert [r[0] for r in report.render_table1(9).rows] == ["1", "2", "11", "12", "13"]
    t8 = report.render_table1(8)
    row = next(r for r in t8.rows if r[1] == "V3b")
    assert row[t8.columns.index("count")] == "1176"


def test_table2_shapes_and_values():
    t5 = report.render_table2(5)
    assert len(t5.rows) == 6 and t5.columns[1:7] == [f"B{w}" for w in range(1, 7)]
    t11 = report.render_table2(11)
    v1 = next(r for r in t11.rows if r[0] == "V1")
    assert v1[t11.columns.index("B12")] == "68301320"


@pytest.mark.parametrize("q", FIXTURE_QS)
def test_fixture_diffs_pass(q):
    for table in (report.render_table1(q), report.render_table2(q)):
        diff = report.diff_against_fixture(table)
        assert diff.passed, diff.as_dict()


def test_diff_reports_cells():
    t = report.render_table2(7)
    t.rows[2][3] = "999"
    diff = report.diff_against_fixture(t)
    assert not diff.passed
    (m,) = diff.mismatches
    assert (m.row, m.column, m.got) == (t.rows[2][0], "B3", "999")


def test_missing_fixture():
    t = report.render_table2(13)
    assert len(t.rows) == 6
    with pytest.raises(FixtureMissing):
        report.diff_against_fixture(t)


@pytest.mark.parametrize("q", (5, 7, 8, 9, 11, 13))
def test_json_round_trip(q):
    for table in (report.render_table1(q), report.render_table2(q)):
        assert report.from_json(report.to_json(table)) == table


def test_csv_and_markdown():
    t = report.render_table2(5)
    csv_text = report.to_csv(t)
    assert csv_text.startswith("coset,B1,B2,B3,B4,B5,B6,N\r\n")
    assert csv_text.count("\r\n") == 7
    md = report.to_markdown(report.render_table1(7))
    assert "| 3 | V2a | 2 | 3 | 672 |" in md
    quoted = report.Table("x", 5, ["a", "b"], [["1,2", 'say "hi"']])
    assert report.to_csv(quoted).splitlines()[1] == '"1,2","say ""hi"""'
