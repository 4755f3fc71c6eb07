"""Render the weight-3 table and the distribution table; diff them against fixtures."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources

from .code import CodeParameters, all_class_distributions, classification_counts, table1_rows
from .errors import FixtureMissing


@dataclass
class Table:
    table_id: str
    q: int
    columns: list[str]
    rows: list[list[str]]
    title: str = ""

    def as_dict(self) -> dict:
        return {"table": self.table_id, "q": self.q, "title": self.title,
                "columns": list(self.columns), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, d: dict) -> "Table":
        return cls(d["table"], int(d["q"]), list(d["columns"]), [list(r) for r in d["rows"]], d.get("title", ""))


@dataclass(frozen=True)
class TableFixture:
    table_id: str
    q: int
    rows: tuple[dict, ...]


@dataclass
class Mismatch:
    row: str
    column: str
    expected: str
    got: str

    def as_dict(self):
        return {"row": self.row, "column": self.column, "expected": self.expected, "got": self.got}


@dataclass
class DiffResult:
    table_id: str
    q: int
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self):
        return {"table": self.table_id, "q": self.q, "passed": self.passed,
                "mismatches": [m.as_dict() for m in self.mismatches]}


_FIXTURE_FILES = {"T1": "table1.json", "T2": "table2.json"}


def _read_fixture(table_id: str) -> dict:
    return json.loads(resources.files(__package__).joinpath("data").joinpath(_FIXTURE_FILES[table_id]).read_text())


def fixture_qs(table_id: str) -> list[int]:
    data = _read_fixture(table_id)
    return sorted(int(q) for q in data["rows"])


def load_fixture(table_id: str, q: int) -> TableFixture:
    data = _read_fixture(table_id)
    rows = data["rows"].get(str(q))
    if rows is None:
        raise FixtureMissing(f"no {table_id} fixture for q = {q}")
    return TableFixture(table_id, q, tuple(rows))


def render_table1(q: int) -> Table:
    counts = classification_counts(CodeParameters(q))
    rows = []
    for r in table1_rows(q):
        rows.append([str(r.number), r.cls.value, str(r.cls.leader_weight), str(r.b3(q)), str(counts[r.cls]),
                     r.orbit_text])
    return Table("T1", q, ["row", "class", "W", "B3", "count", "orbits"], rows,
                 f"Weight-3 vectors per coset, q = {q}")


def render_table2(q: int) -> Table:
    dists = all_class_distributions(q)
    counts = classification_counts(CodeParameters(q))
    columns = ["coset"] + [f"B{w}" for w in range(1, q + 2)] + ["N"]
    rows = [[cls.value] + [str(b) for b in dist.counts[1:]] + [str(counts[cls])] for cls, dist in dists.items()]
    return Table("T2", q, columns, rows, f"Coset weight distributions, q = {q}")


def _fixture_cells(fx: TableFixture) -> dict[str, dict[str, str]]:
    out = {}
    for r in fx.rows:
        if fx.table_id == "T2":
            cells = {f"B{w}": b for w, b in enumerate(r["B"], start=1)}
            cells["N"] = r["N"]
        else:
            cells = {"row": str(r["row"]), "W": str(r["W"]), "B3": r["B3"], "count": r["count"]}
        out[r["class"]] = cells
    return out


def diff_against_fixture(table: Table) -> DiffResult:
    fx = load_fixture(table.table_id, table.q)
    expected = _fixture_cells(fx)
    key = table.columns.index("coset" if table.table_id == "T2" else "class")
    got = {row[key]: dict(zip(table.columns, row)) for row in table.rows}
    result = DiffResult(table.table_id, table.q)
    for name in sorted(set(expected) | set(got)):
        if name not in got or name not in expected:
            result.mismatches.append(Mismatch(name, "*", "present" if name in expected else "absent",
                                              "present" if name in got else "absent"))
            continue
        for col, val in expected[name].items():
            if got[name].get(col) != val:
                result.mismatches.append(Mismatch(name, col, val, str(got[name].get(col))))
    return result


def to_markdown(table: Table) -> str:
    lines = []
    if table.title:
        lines += [f"### {table.title}", ""]
    lines.append("| " + " | ".join(table.columns) + " |")
    lines.append("|" + "|".join("---" for _ in table.columns) + "|")
    for row in table.rows:
        lines.append("| " + " | ".join(c.replace("|", "\\|") for c in row) + " |")
    return "\n".join(lines) + "\n"


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(table.columns)
    writer.writerows(table.rows)
    return buf.getvalue()


def to_json(table: Table) -> str:
    return json.dumps(table.as_dict(), indent=2) + "\n"


def from_json(text: str) -> Table:
    return Table.from_dict(json.loads(text))


def render(table: Table, fmt: str) -> str:
    return {"md": to_markdown, "csv": to_csv, "json": to_json}[fmt](table)
