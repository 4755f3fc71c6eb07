"""The twisted cubic of PG(3, q), its osculating planes, chords and orbits.

Cubic parameters t in F_q ∪ {∞} are encoded as column positions: 0..q-1
are the field element indices and q stands for ∞.  The same positions
index the columns of the parity-check matrix.

``CubicGeometry`` is the per-field context: it is built once (and cached),
precomputes plane labels, the chord through every point, osculating
counts and 3-point-plane counts, and is read-only afterwards.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import gf
from .errors import GeometryInconsistency, InvalidResidue, PointOnCubic
from .geom import (
    PG3, Line, Plane, Point, as_plane, as_point, incident, line_through, planes_through_line, points_on_line,
)


def residue(q: int) -> int:
    """q mod 3, centered in {-1, 0, 1}."""
    return {0: 0, 1: 1, 2: -1}[q % 3]


def param_label(t: int, q: int) -> str:
    return "inf" if t == q else str(t)


class PlaneOrbitLabel(enum.Enum):
    GAMMA = 1
    TWO_C = 2
    THREE_C = 3
    ONE_C_NOT_GAMMA = 4
    ZERO_C = 5

    @property
    def orbit(self) -> int:
        return self.value


class PointOrbitLabel(enum.Enum):
    CUBIC = ("C-point", 1)
    T_POINT = ("T-point", 2)
    THREE_GAMMA = ("3_Gamma-point", 3)
    ONE_GAMMA = ("1_Gamma-point", 4)
    ZERO_GAMMA = ("0_Gamma-point", 5)
    AXIS = ("(q+1)_Gamma-point", 2)
    TO_POINT = ("TO-point", 3)
    RC_POINT = ("RC-point", 4)
    IC_POINT = ("IC-point", 5)

    @property
    def orbit(self) -> int:
        return self.value[1]

    @property
    def text(self) -> str:
        return self.value[0]

    @classmethod
    def for_orbit(cls, j: int, xi: int) -> "PointOrbitLabel":
        table = _LABELS_AXIAL if xi == 0 else _LABELS_GENERIC
        return table[j - 1]


_LABELS_GENERIC = (
    PointOrbitLabel.CUBIC, PointOrbitLabel.T_POINT, PointOrbitLabel.THREE_GAMMA,
    PointOrbitLabel.ONE_GAMMA, PointOrbitLabel.ZERO_GAMMA,
)
_LABELS_AXIAL = (
    PointOrbitLabel.CUBIC, PointOrbitLabel.AXIS, PointOrbitLabel.TO_POINT,
    PointOrbitLabel.RC_POINT, PointOrbitLabel.IC_POINT,
)


@dataclass(frozen=True)
class RealChord:
    t1: int
    t2: int


@dataclass(frozen=True)
class Tangent:
    t: int


@dataclass(frozen=True)
class ImaginaryChord:
    pass


ChordClass = RealChord | Tangent | ImaginaryChord


@dataclass(frozen=True)
class Cubic:
    field: gf.FieldSpec
    points: tuple[Point, ...]
    parameter_of: dict

    @property
    def q(self) -> int:
        return self.field.order

    def __contains__(self, P: Point) -> bool:
        return P in self.parameter_of


@dataclass(frozen=True)
class OsculatingDevelopable:
    planes: tuple[Plane, ...]


def build_cubic(F: gf.FieldSpec) -> Cubic:
    q = F.order
    pts = [as_point(F, (1, t, F.mul(t, t), F.pow(t, 3))) for t in range(q)]
    pts.append(Point((0, 0, 0, 1)))
    cubic = Cubic(F, tuple(pts), {P: t for t, P in enumerate(pts)})
    if len(cubic.parameter_of) != q + 1:
        raise GeometryInconsistency("cubic points are not distinct")
    space = PG3(F)
    on = space.incidence(np.array([P.coords for P in pts]), space.coords)
    if on.sum(axis=0).max() > 3:
        raise GeometryInconsistency("four cubic points are coplanar")
    return cubic


def osculating_plane(F: gf.FieldSpec, t: int) -> Plane:
    q = F.order
    if t == q:
        return Plane((1, 0, 0, 0))
    three = F.from_int(3)
    t2 = F.mul(t, t)
    t3 = F.mul(t2, t)
    return as_plane(F, (F.neg(t3), F.mul(three, t2), F.neg(F.mul(three, t)), 1))


def osculating_developable(cubic: Cubic) -> OsculatingDevelopable:
    F = cubic.field
    planes = tuple(osculating_plane(F, t) for t in range(cubic.q + 1))
    for t, pi in enumerate(planes):
        on = [s for s, P in enumerate(cubic.points) if incident(F, P, pi)]
        if on != [t]:
            raise GeometryInconsistency(f"osculating plane at t={param_label(t, cubic.q)} meets the cubic in {on}")
    return OsculatingDevelopable(planes)


def tangent_line(cubic: Cubic, t: int, developable: OsculatingDevelopable | None = None) -> Line:
    """Line through P(t) in the direction of d/dt (1, t, t^2, t^3)."""
    F, q = cubic.field, cubic.q
    if t == q:
        direction = (0, 0, 1, 0)
    else:
        direction = (0, 1, F.mul(F.from_int(2), t), F.mul(F.from_int(3), F.mul(t, t)))
    L = line_through(F, cubic.points[t], as_point(F, direction))
    pts = points_on_line(F, L)
    hits = [P for P in pts if P in cubic]
    if hits != [cubic.points[t]]:
        raise GeometryInconsistency(f"tangent at t={param_label(t, q)} meets the cubic in {len(hits)} points")
    pi = (developable.planes[t] if developable else osculating_plane(F, t))
    if not all(incident(F, P, pi) for P in pts):
        raise GeometryInconsistency(f"tangent at t={param_label(t, q)} leaves its osculating plane")
    return L


class CubicGeometry:
    """Immutable per-field context for all cubic classification queries."""

    def __init__(self, F: gf.FieldSpec):
        self.field = F
        self.q = q = F.order
        self.xi = residue(q)
        self.space = space = PG3(F)
        self.cubic = build_cubic(F)
        self.developable = osculating_developable(self.cubic)
        self.tangents = tuple(tangent_line(self.cubic, t, self.developable) for t in range(q + 1))

        self.cubic_idx = np.array([space.index(P) for P in self.cubic.points])
        self.cubic_coords = space.coords[self.cubic_idx]
        self.gamma_idx = np.array([space.index(pi) for pi in self.developable.planes])
        self.is_cubic = np.zeros(space.size, dtype=bool)
        self.is_cubic[self.cubic_idx] = True

        self._build_plane_labels()
        self._build_chords()
        self.mu = space.incidence(space.coords, space.coords[self.gamma_idx]).sum(axis=1)
        self._build_point_labels()
        for arr in (self.plane_labels, self.chord_kind, self.chord_t1, self.chord_t2,
                    self.mu, self.point_orbits, self.is_cubic):
            arr.flags.writeable = False

    # -- planes --

    def _build_plane_labels(self):
        space = self.space
        meets = space.incidence(self.cubic_coords, space.coords).sum(axis=0)
        labels = np.full(space.size, PlaneOrbitLabel.ZERO_C.value, dtype=np.int8)
        labels[meets == 3] = PlaneOrbitLabel.THREE_C.value
        labels[meets == 2] = PlaneOrbitLabel.TWO_C.value
        labels[meets == 1] = PlaneOrbitLabel.ONE_C_NOT_GAMMA.value
        if not np.all(meets[self.gamma_idx] == 1):
            raise GeometryInconsistency("an osculating plane does not meet the cubic exactly once")
        labels[self.gamma_idx] = PlaneOrbitLabel.GAMMA.value
        self.plane_labels = labels
        self.three_plane_idx = np.nonzero(labels == PlaneOrbitLabel.THREE_C.value)[0]
        self.three_plane_coords = space.coords[self.three_plane_idx]

    # -- chords --

    KIND_CUBIC, KIND_IMAGINARY, KIND_REAL, KIND_TANGENT = -1, 0, 1, 2

    def chord_point_indices(self, chord) -> np.ndarray:
        """Positions of all q+1 points on a real chord or tangent."""
        if isinstance(chord, RealChord):
            a, b = self.cubic_coords[chord.t1], self.cubic_coords[chord.t2]
        elif isinstance(chord, Tangent):
            L = self.tangents[chord.t]
            a, b = np.array(L.a.coords), np.array(L.b.coords)
        else:
            raise TypeError(f"{chord!r} has no explicit point set")
        return self.space.line_point_indices(a, b)

    def all_chords(self):
        q = self.q
        for t1, t2 in itertools.combinations(range(q + 1), 2):
            yield RealChord(t1, t2)
        for t in range(q + 1):
            yield Tangent(t)

    @cached_property
    def chord_sets(self) -> dict:
        return {ch: frozenset(int(i) for i in self.chord_point_indices(ch)) for ch in self.all_chords()}

    def _build_chords(self):
        n = self.space.size
        kind = np.full(n, self.KIND_IMAGINARY, dtype=np.int8)
        t1 = np.full(n, -1, dtype=np.int64)
        t2 = np.full(n, -1, dtype=np.int64)
        hits = np.zeros(n, dtype=np.int64)
        for ch in self.all_chords():
            idx = self.chord_point_indices(ch)
            idx = idx[~self.is_cubic[idx]]
            hits[idx] += 1
            if isinstance(ch, RealChord):
                kind[idx], t1[idx], t2[idx] = self.KIND_REAL, ch.t1, ch.t2
            else:
                kind[idx], t1[idx] = self.KIND_TANGENT, ch.t
        if hits.max() > 1:
            bad = int(np.argmax(hits))
            raise GeometryInconsistency(f"point {self.space.point(bad)} lies on {hits[bad]} chords")
        kind[self.is_cubic] = self.KIND_CUBIC
        self.chord_kind, self.chord_t1, self.chord_t2 = kind, t1, t2

    def chord_at(self, i: int):
        k = self.chord_kind[i]
        if k == self.KIND_CUBIC:
            raise PointOnCubic(f"{self.space.point(i)} is on the cubic")
        if k == self.KIND_REAL:
            return RealChord(int(self.chord_t1[i]), int(self.chord_t2[i]))
        if k == self.KIND_TANGENT:
            return Tangent(int(self.chord_t1[i]))
        return ImaginaryChord()

    # -- points --

    def _build_point_labels(self):
        q, xi = self.q, self.xi
        kind, mu = self.chord_kind, self.mu
        orbit = np.zeros(self.space.size, dtype=np.int8)
        off = ~self.is_cubic
        orbit[self.is_cubic] = 1
        if xi != 0:
            orbit[off & (kind == self.KIND_TANGENT)] = 2
            rest = off & (kind != self.KIND_TANGENT)
            for m, j in ((3, 3), (1, 4), (0, 5)):
                orbit[rest & (mu == m)] = j
            if np.any(rest & ~np.isin(mu, (0, 1, 3))):
                raise GeometryInconsistency("osculating count outside {0,1,3} off the tangents")
            real_orbits, imag_orbits = ((3, 5), (4,)) if xi == 1 else ((4,), (3, 5))
            rest_real = kind == self.KIND_REAL
            if np.any(np.isin(orbit, real_orbits) != rest_real):
                raise GeometryInconsistency("real-chord points do not match the expected orbits")
            if np.any(np.isin(orbit, imag_orbits) != (kind == self.KIND_IMAGINARY)):
                raise GeometryInconsistency("imaginary-chord points do not match the expected orbits")
        else:
            axis = off & (mu == q + 1)
            if np.any(axis & (kind != self.KIND_TANGENT)):
                raise GeometryInconsistency("an axis point is not on a tangent")
            tangent_rest = off & ~axis & (kind == self.KIND_TANGENT)
            if np.any(mu[tangent_rest] != 1):
                raise GeometryInconsistency("a tangent point off the axis is not on exactly one osculating plane")
            orbit[axis] = 2
            orbit[tangent_rest] = 3
            orbit[off & (kind == self.KIND_REAL)] = 4
            orbit[off & (kind == self.KIND_IMAGINARY)] = 5
        if np.any(orbit == 0):
            raise GeometryInconsistency("some point received no orbit label")
        self.point_orbits = orbit

    def label_at(self, i: int) -> PointOrbitLabel:
        return PointOrbitLabel.for_orbit(int(self.point_orbits[i]), self.xi)

    @cached_property
    def three_plane_counts(self) -> np.ndarray:
        c = self.space.incidence(self.space.coords, self.three_plane_coords).sum(axis=1)
        c.flags.writeable = False
        return c

    @cached_property
    def pencil_axis(self) -> list[Point] | None:
        """Common points of all osculating planes (a line iff q ≡ 0 mod 3)."""
        F = self.field
        basis = gf.null_space(F, np.array([pi.coeffs for pi in self.developable.planes]))
        if len(basis) < 2:
            return None
        return sorted({as_point(F, F.add_table[basis[0], F.mul_table[mu, basis[1]]]) for mu in range(self.q)}
                      | {as_point(F, basis[1])})


@lru_cache(maxsize=None)
def build_geometry(F: gf.FieldSpec) -> CubicGeometry:
    return CubicGeometry(F)


# -- per-object queries ------------------------------------------------------

def classify_plane(pi: Plane, geo: CubicGeometry) -> PlaneOrbitLabel:
    F = geo.field
    on = sum(incident(F, P, pi) for P in geo.cubic.points)
    if on == 1:
        return PlaneOrbitLabel.GAMMA if pi in geo.developable.planes else PlaneOrbitLabel.ONE_C_NOT_GAMMA
    return {0: PlaneOrbitLabel.ZERO_C, 2: PlaneOrbitLabel.TWO_C, 3: PlaneOrbitLabel.THREE_C}[on]


def chord_through(Q: Point, geo: CubicGeometry):
    """The real chord or tangent through Q, else ImaginaryChord."""
    if Q in geo.cubic:
        raise PointOnCubic(f"{Q} is on the cubic")
    i = geo.space.index(Q)
    found = [ch for ch, pts in geo.chord_sets.items() if i in pts]
    if len(found) > 1:
        raise GeometryInconsistency(f"{Q} lies on several chords: {found}")
    return found[0] if found else ImaginaryChord()


def osculating_count(Q: Point, geo: CubicGeometry) -> int:
    return sum(incident(geo.field, Q, pi) for pi in geo.developable.planes)


def classify_point(Q: Point, geo: CubicGeometry) -> PointOrbitLabel:
    if Q in geo.cubic:
        return PointOrbitLabel.CUBIC
    chord = chord_through(Q, geo)
    mu = osculating_count(Q, geo)
    if geo.xi != 0:
        if isinstance(chord, Tangent):
            return PointOrbitLabel.T_POINT
        try:
            label = {3: PointOrbitLabel.THREE_GAMMA, 1: PointOrbitLabel.ONE_GAMMA, 0: PointOrbitLabel.ZERO_GAMMA}[mu]
        except KeyError:
            raise GeometryInconsistency(f"{Q} lies on {mu} osculating planes") from None
        on_real = label is not PointOrbitLabel.ONE_GAMMA
        if geo.xi == -1:
            on_real = not on_real
        if on_real != isinstance(chord, RealChord):
            raise GeometryInconsistency(f"{Q}: {label.text} inconsistent with chord {chord}")
        return label
    if mu == geo.q + 1:
        return PointOrbitLabel.AXIS
    if isinstance(chord, Tangent):
        return PointOrbitLabel.TO_POINT
    if isinstance(chord, RealChord):
        return PointOrbitLabel.RC_POINT
    return PointOrbitLabel.IC_POINT


def three_plane_count(Q: Point, geo: CubicGeometry) -> int:
    F = geo.field
    return int((F.vsum(F.mul_table[np.array(Q.coords)[None, :], geo.three_plane_coords]) == 0).sum())


def chord_plane_counts(chord: RealChord, geo: CubicGeometry) -> tuple[int, int]:
    """(# 3-point planes, # 2-point planes) through a real chord."""
    L = line_through(geo.field, geo.cubic.points[chord.t1], geo.cubic.points[chord.t2])
    labels = [PlaneOrbitLabel(int(geo.plane_labels[geo.space.index(pi)])) for pi in planes_through_line(geo.field, L)]
    return labels.count(PlaneOrbitLabel.THREE_C), labels.count(PlaneOrbitLabel.TWO_C)


# -- closed forms ------------------------------------------------------------

def _exact(num: int, den: int) -> int:
    if num % den:
        raise GeometryInconsistency(f"{num}/{den} is not an integer")
    return num // den


def orbit_sizes_closed_form(q: int) -> dict[int, int]:
    c = q**3 - q
    if residue(q) == 0:
        return {1: q + 1, 2: q + 1, 3: q * q - 1, 4: _exact(c, 2), 5: _exact(c, 2)}
    return {1: q + 1, 2: q * q + q, 3: _exact(c, 6), 4: _exact(c, 2), 5: _exact(c, 3)}


# r_{3j}: (a, b, c, den) meaning (a q^2 + b q + c) / den
_R3 = {
    1: {1: (1, -1, 0, 2), 2: (1, -3, 2, 6), 3: (1, 1, 4, 6), 4: (1, -1, 0, 6), 5: (1, 1, -2, 6)},
    -1: {1: (1, -1, 0, 2), 2: (1, -3, 2, 6), 3: (1, -1, 4, 6), 4: (1, 1, 0, 6), 5: (1, -1, -2, 6)},
    0: {1: (1, -1, 0, 2), 2: (1, -1, 0, 6), 3: (1, -3, 0, 6), 4: (1, 1, 0, 6), 5: (1, -1, 0, 6)},
}


def r_closed_form(j: int, xi: int, q: int) -> int:
    """Number of 3-point planes through each point of orbit j, q ≡ xi (mod 3)."""
    if xi not in _R3 or residue(q) != xi:
        raise InvalidResidue(f"q = {q} is not congruent to {xi} mod 3")
    if q < 5:
        raise InvalidResidue("q must be at least 5")
    a, b, c, den = _R3[xi][j]
    return _exact(a * q * q + b * q + c, den)


def orbit_census(geo: CubicGeometry) -> dict[PointOrbitLabel, int]:
    counts = np.bincount(geo.point_orbits, minlength=6)
    return {PointOrbitLabel.for_orbit(j, geo.xi): int(counts[j]) for j in range(1, 6)}


def plane_census(geo: CubicGeometry) -> dict[PlaneOrbitLabel, int]:
    counts = np.bincount(geo.plane_labels, minlength=6)
    return {lab: int(counts[lab.value]) for lab in PlaneOrbitLabel}


def incidence_census(geo: CubicGeometry) -> dict[int, list[int]]:
    """Distinct 3-point-plane counts seen on each point orbit."""
    out = {}
    for j in range(1, 6):
        vals = np.unique(geo.three_plane_counts[geo.point_orbits == j])
        out[j] = [int(v) for v in vals]
    return out
