"""Command-line driver: ``coset-atlas <subcommand> --q Q [options]``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cubic, gf, report, verify
from .code import build_code
from .errors import CosetAtlasError

FIELD_TABLE_ENV = "COSET_ATLAS_FIELD_TABLE"
SUBCOMMANDS = ("orbits", "incidence", "table1", "table2", "coset", "verify")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    q: int
    command: str
    field_spec: str | None = None
    level: str = "all"
    fmt: str = "md"
    jobs: int = 1
    out: str | None = None
    syndrome: tuple[int, ...] | None = None
    vector: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        pm = gf.prime_power(self.q)
        if pm is None:
            raise UsageError(f"q = {self.q} is not a prime power")
        if self.q < 5:
            raise UsageError("q must be at least 5")
        if self.q > gf.MAX_ORDER:
            raise UsageError(f"q = {self.q} exceeds the supported order {gf.MAX_ORDER}")

    def resolve_field(self, env=None) -> gf.FieldSpec:
        env = os.environ if env is None else env
        try:
            if self.field_spec:
                F = gf.parse_field_spec(self.field_spec)
                if F.order != self.q:
                    raise UsageError(f"--field has order {F.order}, but --q is {self.q}")
                return F
            overrides = None
            if env.get(FIELD_TABLE_ENV):
                overrides = gf.parse_field_table(Path(env[FIELD_TABLE_ENV]).read_text())
            return gf.field_of_order(self.q, overrides)
        except (CosetAtlasError, ValueError, OSError) as exc:
            if isinstance(exc, UsageError):
                raise
            raise UsageError(str(exc)) from exc


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coset-atlas",
                                     description="Twisted-cubic code cosets: geometry, tables and verification.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, required=True, help="field order (prime power, 5 <= q <= 128)")
    common.add_argument("--field", dest="field_spec", help="modulus override, e.g. 2^3:1,1,0,1")
    common.add_argument("--format", dest="fmt", choices=("md", "csv", "json"), default="md")
    common.add_argument("--out", help="write output here instead of standard output")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("orbits", parents=[common], help="point-orbit census vs closed forms")
    sub.add_parser("incidence", parents=[common], help="3-point-plane counts per orbit")
    sub.add_parser("table1", parents=[common], help="weight-3 counts per coset class")
    sub.add_parser("table2", parents=[common], help="coset weight distributions")
    cs = sub.add_parser("coset", parents=[common], help="classify one syndrome or vector (JSON)")
    grp = cs.add_mutually_exclusive_group(required=True)
    grp.add_argument("--syndrome", type=_int_list, help="4 element indices a,b,c,d")
    grp.add_argument("--vector", type=_int_list, help="q+1 element indices")
    vf = sub.add_parser("verify", parents=[common], help="run verification suites")
    vf.add_argument("--level", choices=verify.LEVELS + ("all",), default="all")
    return parser


def orbit_table(geo: cubic.CubicGeometry) -> report.Table:
    census = cubic.orbit_census(geo)
    closed = cubic.orbit_sizes_closed_form(geo.q)
    rows = [[f"M{lab.orbit}", lab.text, str(n), str(closed[lab.orbit]), str(n == closed[lab.orbit]).lower()]
            for lab, n in census.items()]
    return report.Table("orbits", geo.q, ["orbit", "label", "computed", "closed_form", "match"], rows,
                        f"Point orbits, q = {geo.q} (xi = {geo.xi})")


def incidence_table(geo: cubic.CubicGeometry) -> report.Table:
    rows = []
    for j, vals in cubic.incidence_census(geo).items():
        want = cubic.r_closed_form(j, geo.xi, geo.q)
        rows.append([f"M{j}", str(geo.xi), " ".join(str(v) for v in vals), str(want), str(vals == [want]).lower()])
    return report.Table("incidence", geo.q, ["orbit", "xi", "computed", "closed_form", "match"], rows,
                        f"3-point planes through each point, q = {geo.q}")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, newline="")
    else:
        sys.stdout.write(text)


def coset_payload(cfg: RunConfig, F: gf.FieldSpec) -> dict:
    code = build_code(F)
    if cfg.vector is not None:
        if len(cfg.vector) != code.params.n:
            raise UsageError(f"--vector needs {code.params.n} entries, got {len(cfg.vector)}")
        values = cfg.vector
    else:
        if len(cfg.syndrome) != 4:
            raise UsageError(f"--syndrome needs 4 entries, got {len(cfg.syndrome)}")
        values = cfg.syndrome
    if any(not 0 <= v < F.order for v in values):
        raise UsageError(f"element indices must lie in 0..{F.order - 1}")
    s = code.syndrome(values) if cfg.vector is not None else values
    cls, dist = code.coset_distribution(s)
    return {"q": F.order, "class": cls.value, "W": dist.weight, "syndrome": list(s),
            "B": [str(b) for b in dist]}


def execute(cfg: RunConfig) -> int:
    F = cfg.resolve_field()
    if cfg.command == "coset":
        _emit(json.dumps(coset_payload(cfg, F)) + "\n", cfg.out)
        return 0
    if cfg.command == "verify":
        results = verify.run(F, cfg.level, jobs=cfg.jobs)
        ok = all(r.passed for r in results)
        if cfg.fmt == "json":
            text = json.dumps({"q": cfg.q, "level": cfg.level, "passed": ok,
                               "checks": [r.as_dict() for r in results]}, indent=2) + "\n"
        else:
            lines = []
            for r in results:
                lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name} q={r.q}: {r.summary}")
                if not r.passed:
                    lines.append(json.dumps(r.as_dict()))
            text = "\n".join(lines) + "\n"
        _emit(text, cfg.out)
        return 0 if ok else 1
    if cfg.command in ("orbits", "incidence"):
        geo = cubic.build_geometry(F)
        table = orbit_table(geo) if cfg.command == "orbits" else incidence_table(geo)
        _emit(report.render(table, cfg.fmt), cfg.out)
        return 0 if all(row[-1] == "true" for row in table.rows) else 1
    table = report.render_table1(cfg.q) if cfg.command == "table1" else report.render_table2(cfg.q)
    _emit(report.render(table, cfg.fmt), cfg.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(q=ns.q, command=ns.command, field_spec=ns.field_spec, level=getattr(ns, "level", "all"),
                        fmt=ns.fmt, jobs=ns.jobs, out=ns.out, syndrome=getattr(ns, "syndrome", None),
                        vector=getattr(ns, "vector", None))
        return execute(cfg)
    except UsageError as exc:
        parser.print_help(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
