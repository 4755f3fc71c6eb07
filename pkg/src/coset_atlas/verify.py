"""Verification suites behind ``coset-atlas verify``.

Each check returns a ``CheckResult``; a failing result carries a JSON-able
diagnostic describing the first disagreement found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import cubic, oracle, report
from .code import (
    CodeParameters, TwistedCubicCode, all_class_distributions, b3_closed_form, bonneau_complete,
    build_code, classification_counts, coset_classes, difference_law_check, symmetry_check,
)
from .errors import FixtureMissing, LawViolation, ScopeExceeded
from .gf import FieldSpec

LEVELS = ("identities", "orbits", "incidence", "table1", "table2", "brute", "laws")
BRUTE_MAX_Q = 9


@dataclass
class CheckResult:
    name: str
    q: int
    passed: bool
    summary: str = ""
    diagnostic: dict = field(default_factory=dict)

    def as_dict(self):
        return {"check": self.name, "q": self.q, "passed": self.passed, "summary": self.summary,
                "diagnostic": self.diagnostic}


def _fail(name, q, summary, **diag):
    return CheckResult(name, q, False, summary, diag)


def check_field_identities(F: FieldSpec) -> CheckResult:
    q = F.order
    A, M = F.add_table, F.mul_table
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    problems = []
    if not np.array_equal(A[A[a, b], c], A[a, A[b, c]]):
        problems.append("addition is not associative")
    if not np.array_equal(M[M[a, b], c], M[a, M[b, c]]):
        problems.append("multiplication is not associative")
    if not np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]]):
        problems.append("distributivity fails")
    nz = np.arange(1, q)
    if not np.all(M[nz, F.inv_table[nz]] == 1):
        problems.append("a * inv(a) != 1")
    if any(F.pow(x, q - 1) != 1 for x in range(1, q)):
        problems.append("a^(q-1) != 1")
    if problems:
        return _fail("identities", q, "; ".join(problems), field=str(F))
    return CheckResult("identities", q, True, f"field axioms hold exhaustively over {F}")


def check_orbits(geo: cubic.CubicGeometry) -> CheckResult:
    q = geo.q
    census = cubic.orbit_census(geo)
    closed = cubic.orbit_sizes_closed_form(q)
    bad = {lab.text: [n, closed[lab.orbit]] for lab, n in census.items() if n != closed[lab.orbit]}
    if bad or sum(census.values()) != q**3 + q * q + q + 1:
        return _fail("orbits", q, "orbit sizes differ from closed forms", mismatches=bad)
    if geo.xi == 0:
        axis = geo.pencil_axis
        if axis is None or any(geo.mu[geo.space.index(P)] != q + 1 for P in axis):
            return _fail("orbits", q, "osculating planes do not share an axis of (q+1)-points")
    return CheckResult("orbits", q, True, f"{len(census)} orbits match closed-form sizes")


def check_incidence(geo: cubic.CubicGeometry) -> CheckResult:
    q, xi = geo.q, geo.xi
    seen = cubic.incidence_census(geo)
    for j, vals in seen.items():
        want = cubic.r_closed_form(j, xi, q)
        if vals != [want]:
            return _fail("incidence", q, f"3-point-plane count on orbit {j} is {vals}, expected {want}",
                         orbit=j, got=vals, expected=want)
    for t1, t2 in itertools.combinations(range(q + 1), 2):
        counts = cubic.chord_plane_counts(cubic.RealChord(t1, t2), geo)
        if counts != (q - 1, 2):
            return _fail("incidence", q, f"chord ({t1},{t2}) lies in {counts} planes", chord=[t1, t2],
                         got=list(counts), expected=[q - 1, 2])
    return CheckResult("incidence", q, True,
                       f"r3j constant per orbit and equal to closed forms; {comb(q + 1, 2)} chords in (q-1, 2) planes")


def check_table1(code: TwistedCubicCode, jobs: int = 1) -> CheckResult:
    q = code.q
    classes = code.classify_all()
    tally = oracle.histogram_weight_w(code.field, code.H, 3, jobs=jobs)
    for s_code, cls in enumerate(classes):
        want = b3_closed_form(cls, q)
        if tally[s_code] != want:
            return _fail("table1", q, "weight-3 histogram disagrees with closed form",
                         syndrome=list(oracle.decode_syndrome(q, s_code)), cls=cls.value,
                         expected=want, got=int(tally[s_code]))
        if cls.leader_weight >= 2:
            s = oracle.decode_syndrome(q, s_code)
            if code.b3_geometric(s) != want:
                return _fail("table1", q, "3-point-plane count disagrees with closed form",
                             syndrome=list(s), cls=cls.value, expected=want, got=code.b3_geometric(s))
    counted = {c: 0 for c in coset_classes(q)}
    for cls in classes:
        counted[cls] += 1
    expected = classification_counts(CodeParameters(q))
    if counted != expected:
        return _fail("table1", q, "coset counts per class disagree",
                     expected={c.value: n for c, n in expected.items()},
                     got={c.value: n for c, n in counted.items()})
    summary = f"{q**4} syndromes: B3 histogram = closed form; class counts match"
    try:
        diff = report.diff_against_fixture(report.render_table1(q))
    except FixtureMissing:
        return CheckResult("table1", q, True, summary + " (no fixture)")
    if not diff.passed:
        return _fail("table1", q, "fixture mismatch", **diff.as_dict())
    return CheckResult("table1", q, True, summary + "; fixture matches")


def check_table2(code: TwistedCubicCode) -> CheckResult:
    q, params = code.q, code.params
    dists = all_class_distributions(q)
    counts = classification_counts(params)
    for cls, dist in dists.items():
        if dist.total != q ** (q - 3):
            return _fail("table2", q, f"{cls.value} sums to {dist.total}", cls=cls.value)
        if any(b < 0 for b in dist):
            return _fail("table2", q, f"{cls.value} has a negative count", cls=cls.value)
        if dist.weight != cls.leader_weight:
            return _fail("table2", q, f"{cls.value} has weight {dist.weight}", cls=cls.value)
        if bonneau_complete(params.n, 5, q, dist.counts[:4]) != dist:
            return _fail("table2", q, f"MDS completion disagrees for {cls.value}", cls=cls.value)
    for w in range(q + 2):
        total = sum(counts[c] * dists[c][w] for c in dists)
        if total != comb(q + 1, w) * (q - 1) ** w:
            return _fail("table2", q, f"global balance fails at w = {w}", w=w, got=str(total))
    dual = code.dual_weight_set()
    if dual.size != 4 or dual.minimum != q - 2:
        return _fail("table2", q, "dual code weights unexpected", weights=sorted(dual.weights))
    summary = "closed forms = MDS completion; masses and global balance hold; dual has 4 weights"
    try:
        diff = report.diff_against_fixture(report.render_table2(q))
    except FixtureMissing:
        return CheckResult("table2", q, True, summary + " (no fixture)")
    if not diff.passed:
        return _fail("table2", q, "fixture mismatch", **diff.as_dict())
    return CheckResult("table2", q, True, summary + "; fixture matches")


def check_brute(code: TwistedCubicCode, jobs: int = 1) -> CheckResult:
    q = code.q
    if q > BRUTE_MAX_Q:
        return _fail("brute", q, f"brute-force scope is q <= {BRUTE_MAX_Q}",
                     error=str(ScopeExceeded(f"q = {q}")))
    classes = code.classify_all()
    weights = oracle.leader_weights(code.field, code.H)
    for s_code, cls in enumerate(classes):
        if weights[s_code] != cls.leader_weight:
            return _fail("brute", q, "leader weight disagrees", syndrome=list(oracle.decode_syndrome(q, s_code)),
                         cls=cls.value, expected=cls.leader_weight, got=int(weights[s_code]))
    dists = all_class_distributions(q)
    for cls in coset_classes(q):
        s = oracle.decode_syndrome(q, classes.index(cls))
        rep = oracle.find_representative(code.field, code.H, s)
        got = oracle.brute_coset_distribution(code.field, code.H, rep, jobs=jobs)
        if got != dists[cls].counts:
            return _fail("brute", q, f"enumerated distribution differs for {cls.value}", cls=cls.value,
                         expected=[str(b) for b in dists[cls]], got=[str(b) for b in got])
    return CheckResult("brute", q, True,
                       f"{q**4} syndromes checked for leader weight; {len(dists)} classes enumerated "
                       f"over {q**(q - 3)} codewords each")


def check_laws(code: TwistedCubicCode) -> CheckResult:
    q = code.q
    try:
        diff = difference_law_check(code.params)
        sym = symmetry_check(code.params)
    except LawViolation as exc:
        return _fail("laws", q, str(exc), **exc.diagnostic)
    return CheckResult("laws", q, True, f"difference law ({diff.checked} cases) and symmetry "
                                        f"({sym.checked} cases) hold")


def run(F: FieldSpec, level: str = "all", jobs: int = 1) -> list[CheckResult]:
    levels = LEVELS if level == "all" else (level,)
    code = build_code(F)
    geo = code.geometry
    out = []
    for lv in levels:
        if lv == "identities":
            out.append(check_field_identities(F))
        elif lv == "orbits":
            out.append(check_orbits(geo))
        elif lv == "incidence":
            out.append(check_incidence(geo))
        elif lv == "table1":
            out.append(check_table1(code, jobs))
        elif lv == "table2":
            out.append(check_table2(code))
        elif lv == "brute":
            if level == "all" and code.q > BRUTE_MAX_Q:
                out.append(CheckResult("brute", code.q, True, f"skipped: q > {BRUTE_MAX_Q} is out of brute-force scope"))
            else:
                out.append(check_brute(code, jobs))
        elif lv == "laws":
            out.append(check_laws(code))
        else:
            raise ValueError(f"unknown verify level {lv!r}")
    return out
