"""The [q+1, q-3, 5]_q code whose parity-check columns are the cubic points.

Covers syndromes and their coset classes, the weight-3 counts per class,
closed-form coset weight distributions, the generic MDS completion from
the low-weight counts, and the difference/symmetry laws between classes
of equal coset weight.  All counts are exact Python integers.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from . import gf
from .cubic import CubicGeometry, PointOrbitLabel, build_geometry, residue
from .errors import ClassResidueMismatch, IllegalB3, LawViolation, LengthMismatch, SingularQuadruple
from .geom import normalize, normalize_many


@dataclass(frozen=True)
class CodeParameters:
    q: int

    @property
    def n(self) -> int:
        return self.q + 1

    @property
    def k(self) -> int:
        return self.q - 3

    d = 5
    R = 3

    @property
    def xi(self) -> int:
        return residue(self.q)

    @property
    def coset_size(self) -> int:
        return self.q**self.k


class CosetClass(enum.Enum):
    CODE = "C"
    W1 = "V1"
    W2 = "V2"
    W2A = "V2a"
    W2B = "V2b"
    W3A = "V3a"
    W3B = "V3b"
    W3C = "V3c"

    @property
    def leader_weight(self) -> int:
        return 0 if self is CosetClass.CODE else int(self.value[1])


def _sixth(a, b, c):
    return lambda q: _exact(a * q * q + b * q + c, 6)


def _exact(num: int, den: int) -> int:
    if num % den:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return num // den


@dataclass(frozen=True)
class Table1Row:
    number: int
    xi: int | None  # None: any residue
    cls: CosetClass
    b3: object
    count: object
    orbits: tuple[int, ...]
    orbit_text: str


_ROWS = (
    Table1Row(1, None, CosetClass.CODE, lambda q: 0, lambda q: 1, (), ""),
    Table1Row(2, None, CosetClass.W1, lambda q: 0, lambda q: (q + 1) * (q - 1), (1,), "M1 = {C-points}"),
    Table1Row(3, 1, CosetClass.W2A, _sixth(1, -5, 4), lambda q: _exact((q**3 - q) * (q - 1), 3), (5,),
              "M5 = {RC-points} \\ M3"),
    Table1Row(4, 1, CosetClass.W2B, _sixth(1, -5, 10), lambda q: _exact((q**3 - q) * (q - 1), 6), (3,),
              "M3 = {RC-points} \\ M5"),
    Table1Row(5, 1, CosetClass.W3A, _sixth(1, -3, 2), lambda q: (q * q + q) * (q - 1), (2,), "M2 = {T-points}"),
    Table1Row(6, 1, CosetClass.W3B, _sixth(1, -1, 0), lambda q: _exact((q**3 - q) * (q - 1), 2), (4,),
              "M4 = {IC-points}"),
    Table1Row(7, -1, CosetClass.W2, _sixth(1, -5, 6), lambda q: _exact((q**3 - q) * (q - 1), 2), (4,),
              "M4 = {RC-points}"),
    Table1Row(8, -1, CosetClass.W3A, _sixth(1, -3, 2), lambda q: (q * q + q) * (q - 1), (2,), "M2 = {T-points}"),
    Table1Row(9, -1, CosetClass.W3B, _sixth(1, -1, -2), lambda q: _exact((q**3 - q) * (q - 1), 3), (5,),
              "M5 = {IC-points} \\ M3"),
    Table1Row(10, -1, CosetClass.W3C, _sixth(1, -1, 4), lambda q: _exact((q**3 - q) * (q - 1), 6), (3,),
              "M3 = {IC-points} \\ M5"),
    Table1Row(11, 0, CosetClass.W2, _sixth(1, -5, 6), lambda q: _exact((q**3 - q) * (q - 1), 2), (4,),
              "M4 = {RC-points}"),
    Table1Row(12, 0, CosetClass.W3A, _sixth(1, -3, 0), lambda q: (q * q - 1) * (q - 1), (3,), "M3 = {TO-points}"),
    Table1Row(13, 0, CosetClass.W3B, _sixth(1, -1, 0), lambda q: _exact((q + 1) * (q * q - q + 2) * (q - 1), 2),
              (2, 5), "M2 u M5 = {(q+1)_Gamma-points} u {IC-points}"),
)


def table1_rows(q: int) -> list[Table1Row]:
    xi = residue(q)
    return [r for r in _ROWS if r.xi is None or r.xi == xi]


def coset_classes(q: int) -> list[CosetClass]:
    return [r.cls for r in table1_rows(q)]


def _row(cls: CosetClass, q: int) -> Table1Row:
    for r in table1_rows(q):
        if r.cls is cls:
            return r
    raise ClassResidueMismatch(f"class {cls.value} does not occur for q = {q} (residue {residue(q)})")


def class_of_orbit(j: int, q: int) -> CosetClass:
    for r in table1_rows(q):
        if j in r.orbits:
            return r.cls
    raise ValueError(f"no coset class for orbit {j}")


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def weight(self) -> int:
        """Smallest w with a nonzero count (the coset weight)."""
        return next(w for w, b in enumerate(self.counts) if b)


@dataclass(frozen=True)
class DualWeightSet:
    weights: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def minimum(self) -> int:
        return min(self.weights)


class TwistedCubicCode:
    """The code together with its parity-check matrix and cubic geometry."""

    def __init__(self, geo: CubicGeometry, check: bool = True):
        self.geometry = geo
        self.field = geo.field
        self.params = CodeParameters(geo.q)
        H = np.array([P.coords for P in geo.cubic.points], dtype=np.int64).T
        H.flags.writeable = False
        self.H = H
        if check:
            check_mds_columns(self.field, H)

    @property
    def q(self) -> int:
        return self.params.q

    def syndrome(self, x) -> tuple[int, ...]:
        x = np.asarray(x, dtype=np.int64)
        if x.shape != (self.params.n,):
            raise LengthMismatch(f"vector length {x.size}, code length {self.params.n}")
        return tuple(int(s) for s in self.field.matmul(self.H, x[:, None])[:, 0])

    def classify_syndrome(self, s) -> tuple[CosetClass, int]:
        s = tuple(int(v) for v in s)
        if len(s) != 4:
            raise LengthMismatch("a syndrome has 4 coordinates")
        if not any(s):
            return CosetClass.CODE, 0
        geo = self.geometry
        i = int(geo.space.index_many(np.array(normalize(self.field, s))))
        cls = class_of_orbit(int(geo.point_orbits[i]), self.q)
        return cls, cls.leader_weight

    def classify_all(self) -> list[CosetClass]:
        """Class of every syndrome, indexed by s0*q^3 + s1*q^2 + s2*q + s3."""
        q, geo = self.q, self.geometry
        grid = np.array(list(itertools.product(range(q), repeat=4)), dtype=np.int64)
        idx = geo.space.index_many(normalize_many(self.field, grid))
        by_orbit = {j: class_of_orbit(j, q) for j in range(1, 6)}
        out = [by_orbit[int(j)] for j in geo.point_orbits[idx]]
        out[0] = CosetClass.CODE
        return out

    def b3_geometric(self, s) -> int:
        """Weight-3 count of the coset from 3-point-plane incidences."""
        cls, W = self.classify_syndrome(s)
        if W < 2:
            return 0
        i = int(self.geometry.space.index_many(np.array(normalize(self.field, s))))
        r = int(self.geometry.three_plane_counts[i])
        return r - (self.q - 1) if W == 2 else r

    def coset_distribution(self, s) -> tuple[CosetClass, WeightDistribution]:
        cls, W = self.classify_syndrome(s)
        dist = class_distribution(cls, self.q)
        low = list(dist.counts[:4])
        if bonneau_complete(self.params.n, 5, self.q, low) != dist:
            raise LawViolation(f"closed form and MDS completion disagree for {cls.value} at q = {self.q}")
        return cls, dist

    def dual_weight_set(self) -> DualWeightSet:
        return dual_weight_set(self.params, self.H, self.field)


def check_mds_columns(F: gf.FieldSpec, H: np.ndarray, samples: int = 1000, seed: int = 0):
    """Every 4 columns independent; exhaustive for q <= 9, sampled above."""
    n = H.shape[1]
    if F.order <= 9:
        quads = itertools.combinations(range(n), 4)
    else:
        rng = np.random.default_rng(seed)
        quads = (tuple(rng.choice(n, 4, replace=False)) for _ in range(samples))
    for quad in quads:
        if gf.rank(F, H[:, list(quad)]) != 4:
            raise SingularQuadruple(f"columns {quad} are dependent")
    if gf.rank(F, H) != 4:
        raise SingularQuadruple("H does not have rank 4")


@lru_cache(maxsize=None)
def build_code(F: gf.FieldSpec) -> TwistedCubicCode:
    return TwistedCubicCode(build_geometry(F))


def b3_closed_form(cls: CosetClass, q: int) -> int:
    return _row(cls, q).b3(q)


def classification_counts(params: CodeParameters) -> dict[CosetClass, int]:
    return {r.cls: r.count(params.q) for r in table1_rows(params.q)}


def mds_code_distribution(params: CodeParameters, w: int) -> int:
    n, q, d = params.n, params.q, params.d
    if w == 0:
        return 1
    if w < d or w > n:
        return 0
    return comb(n, w) * sum((-1) ** j * comb(w, j) * (q ** (w - d + 1 - j) - 1) for j in range(w - d + 1))


def code_distribution(params: CodeParameters) -> WeightDistribution:
    return WeightDistribution(tuple(mds_code_distribution(params, w) for w in range(params.n + 1)))


def wd_weight1(params: CodeParameters) -> WeightDistribution:
    q = params.q
    B = [0, 1, 0, 0, comb(q, 4)]
    for w in range(5, q + 2):
        B.append(mds_code_distribution(params, w)
                 + (-1) ** w * (comb(q + 1, w) * comb(w - 1, 3) - comb(q, w - 1) * comb(w - 2, 2)))
    return WeightDistribution(tuple(B))


def legal_b3(W: int, q: int) -> set[int]:
    return {r.b3(q) for r in table1_rows(q) if r.cls.leader_weight == W}


def wd_weight2(params: CodeParameters, b3: int) -> WeightDistribution:
    q = params.q
    if b3 not in legal_b3(2, q):
        raise IllegalB3(f"B3 = {b3} is not a weight-2 value for q = {q}")
    B = [0, 0, 1, b3, comb(q + 1, 4) - comb(q - 1, 2) - (q - 2) * b3]
    for w in range(5, q + 2):
        B.append(mds_code_distribution(params, w)
                 + (-1) ** w * (comb(q + 1, w) * comb(w - 1, 3) - (w - 3) * comb(q - 1, w - 2)
                                - comb(q - 2, w - 3) * b3))
    return WeightDistribution(tuple(B))


def wd_weight3(params: CodeParameters, b3: int) -> WeightDistribution:
    q = params.q
    if b3 not in legal_b3(3, q):
        raise IllegalB3(f"B3 = {b3} is not a weight-3 value for q = {q}")
    B = [0, 0, 0, b3, comb(q + 1, 4) - (q - 2) * b3]
    for w in range(5, q + 2):
        B.append(mds_code_distribution(params, w)
                 + (-1) ** w * (comb(q + 1, w) * comb(w - 1, 3) - comb(q - 2, w - 3) * b3))
    return WeightDistribution(tuple(B))


def bonneau_complete(n: int, d: int, q: int, low) -> WeightDistribution:
    """Full coset distribution of an [n, n-d+1, d]_q MDS code from B_0..B_{d-2}."""
    low = [int(b) for b in low]
    if len(low) != d - 1:
        raise ValueError(f"need the {d - 1} counts B_0..B_{d - 2}, got {len(low)}")
    B = list(low)
    for w in range(d - 1, n + 1):
        head = comb(n, w) * sum((-1) ** j * comb(w, j) * q ** (w - d + 1 - j) for j in range(w - d + 2))
        tail = 0
        for j in range(w - d + 2, w + 1):
            inner = sum(comb(j + n - w, j) * comb(n - v, w - j - v) * low[v]
                        for v in range(0, min(w - j, d - 2) + 1))
            tail += (-1) ** j * inner
        B.append(head + tail)
    return WeightDistribution(tuple(B))


def class_distribution(cls: CosetClass, q: int) -> WeightDistribution:
    params = CodeParameters(q)
    b3 = b3_closed_form(cls, q)
    W = cls.leader_weight
    if W == 0:
        return code_distribution(params)
    if W == 1:
        return wd_weight1(params)
    if W == 2:
        return wd_weight2(params, b3)
    return wd_weight3(params, b3)


def all_class_distributions(q: int) -> dict[CosetClass, WeightDistribution]:
    return {cls: class_distribution(cls, q) for cls in coset_classes(q)}


# -- laws between classes of equal weight --------------------------------------

@dataclass
class LawReport:
    name: str
    q: int
    checked: int = 0
    constants: dict = None

    def as_dict(self):
        return {"law": self.name, "q": self.q, "checked": self.checked,
                "constants": {k: str(v) for k, v in (self.constants or {}).items()}}


def _families(dists: dict[CosetClass, WeightDistribution]):
    by_weight = {}
    for cls, dist in dists.items():
        by_weight.setdefault(cls.leader_weight, []).append(cls)
    return {W: members for W, members in by_weight.items() if W >= 2 and len(members) >= 2}


def difference_law_check(params: CodeParameters, dists=None) -> LawReport:
    """B_w(a) - B_w(b) = -(-1)^w (B_3(a) - B_3(b)) C(q-2, w-3) for 3 <= w <= q+1."""
    q = params.q
    dists = dists or all_class_distributions(q)
    report = LawReport("difference", q)
    for W, members in _families(dists).items():
        for a, b in itertools.combinations(members, 2):
            da, db = dists[a], dists[b]
            delta3 = da[3] - db[3]
            for w in range(3, q + 2):
                expect = -((-1) ** w) * delta3 * comb(q - 2, w - 3)
                got = da[w] - db[w]
                if got != expect:
                    raise LawViolation(
                        f"difference law fails for ({a.value}, {b.value}) at w = {w}",
                        {"law": "difference", "q": q, "pair": [a.value, b.value], "w": w,
                         "expected": str(expect), "got": str(got)})
                report.checked += 1
    return report


def symmetry_check(params: CodeParameters, dists=None) -> LawReport:
    """B_{q+4-w} - (-1)^q B_w is constant within each equal-weight family."""
    q = params.q
    dists = dists or all_class_distributions(q)
    report = LawReport("symmetry", q, constants={})
    sign = (-1) ** q
    for W, members in _families(dists).items():
        for w in range(3, (q + 3) // 2 + 1):
            values = {cls: dists[cls][q + 4 - w] - sign * dists[cls][w] for cls in members}
            if len(set(values.values())) != 1:
                raise LawViolation(
                    f"symmetry fails for weight-{W} cosets at w = {w}",
                    {"law": "symmetry", "q": q, "W": W, "w": w,
                     "values": {c.value: str(v) for c, v in values.items()}})
            report.constants[(W, w)] = next(iter(values.values()))
            report.checked += 1
    return report


def dual_weight_set(params: CodeParameters, H, F: gf.FieldSpec) -> DualWeightSet:
    """Nonzero weights over all q^4 codewords of the row space of H."""
    q = params.q
    H = np.asarray(H, dtype=np.int64)
    words = np.zeros((1, H.shape[1]), dtype=np.int64)
    for row in H:
        scaled = F.mul_table[np.arange(q)[:, None], row[None, :]]
        words = F.add_table[words[:, None, :], scaled[None, :, :]].reshape(-1, H.shape[1])
    wts = np.count_nonzero(words, axis=1)
    weights = frozenset(int(w) for w in np.unique(wts) if w)
    return DualWeightSet(weights)
