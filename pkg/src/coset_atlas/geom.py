"""Points, planes and lines of PG(3, q).

Points and planes are normalized 4-tuples of field indices whose leftmost
nonzero entry is 1.  The global order is lexicographic on those tuples;
``PG3`` maps between tuples and their positions in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import gf
from .errors import CollinearPoints, EqualPoints, ZeroVector


@dataclass(frozen=True, order=True)
class Point:
    coords: tuple[int, int, int, int]

    def __str__(self):
        return ",".join(map(str, self.coords))


@dataclass(frozen=True, order=True)
class Plane:
    coeffs: tuple[int, int, int, int]

    def __str__(self):
        return ",".join(map(str, self.coeffs))


@dataclass(frozen=True, order=True)
class Line:
    """A line, stored as its two smallest points in the global order."""

    a: Point
    b: Point


def normalize(F: gf.FieldSpec, raw) -> tuple[int, ...]:
    raw = [int(x) for x in raw]
    lead = next((x for x in raw if x), None)
    if lead is None:
        raise ZeroVector("the zero vector has no projective point")
    s = F.inv(lead)
    return tuple(F.mul(s, x) for x in raw)


def normalize_many(F: gf.FieldSpec, arr) -> np.ndarray:
    """Row-wise normalization of an (..., 4) array; zero rows stay zero."""
    arr = np.asarray(arr, dtype=np.int64)
    nz = arr != 0
    lead_pos = np.argmax(nz, axis=-1)
    lead = np.take_along_axis(arr, lead_pos[..., None], axis=-1)
    return F.mul_table[F.inv_table[lead], arr]


def as_point(F, raw) -> Point:
    return Point(normalize(F, raw))


def as_plane(F, raw) -> Plane:
    return Plane(normalize(F, raw))


def incident(F: gf.FieldSpec, P: Point, pi: Plane) -> bool:
    return F.dot(P.coords, pi.coeffs) == 0


def _normalized_block(q: int) -> np.ndarray:
    """All normalized 4-tuples, in lexicographic order."""
    blocks = []
    for lead in (3, 2, 1, 0):
        free = 3 - lead
        grid = np.array(list(itertools.product(range(q), repeat=free)), dtype=np.int64).reshape(q**free, free)
        block = np.zeros((grid.shape[0], 4), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = grid
        blocks.append(block)
    return np.vstack(blocks)


class PG3:
    """PG(3, q) over a fixed field with vectorised index lookups."""

    def __init__(self, F: gf.FieldSpec):
        self.field = F
        self.q = F.order
        self.coords = _normalized_block(self.q)
        self.coords.flags.writeable = False
        self.size = len(self.coords)

    def index_many(self, normalized: np.ndarray) -> np.ndarray:
        """Positions of already-normalized tuples (rows of an (..., 4) array)."""
        x = np.asarray(normalized, dtype=np.int64)
        q = self.q
        x0, x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2], x[..., 3]
        return np.where(
            x0 == 1, 1 + q + q * q + (x1 * q + x2) * q + x3,
            np.where(x1 == 1, 1 + q + x2 * q + x3,
                     np.where(x2 == 1, 1 + x3, 0)))

    def index(self, obj) -> int:
        coords = obj.coords if isinstance(obj, Point) else obj.coeffs
        return int(self.index_many(np.array(coords)))

    def point(self, i: int) -> Point:
        return Point(tuple(int(x) for x in self.coords[i]))

    def plane(self, i: int) -> Plane:
        return Plane(tuple(int(x) for x in self.coords[i]))

    def points(self) -> list[Point]:
        return [self.point(i) for i in range(self.size)]

    def planes(self) -> list[Plane]:
        return [self.plane(i) for i in range(self.size)]

    def incidence(self, points: np.ndarray, planes: np.ndarray) -> np.ndarray:
        """Boolean matrix [i, j] = point i lies on plane j."""
        F = self.field
        prods = F.mul_table[np.asarray(points)[:, None, :], np.asarray(planes)[None, :, :]]
        return F.vsum(prods, axis=-1) == 0

    def line_point_indices(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Positions of the q+1 points a + mu*b (mu in F) and b."""
        F = self.field
        mus = np.arange(self.q)
        combos = F.add_table[np.asarray(a)[None, :], F.mul_table[mus[:, None], np.asarray(b)[None, :]]]
        combos = np.vstack([combos, np.asarray(b)[None, :]])
        return self.index_many(normalize_many(F, combos))


def enumerate_points(F: gf.FieldSpec) -> list[Point]:
    return PG3(F).points()


def enumerate_planes(F: gf.FieldSpec) -> list[Plane]:
    return PG3(F).planes()


def plane_through(F: gf.FieldSpec, P1: Point, P2: Point, P3: Point) -> Plane:
    basis = gf.null_space(F, np.array([P1.coords, P2.coords, P3.coords]))
    if len(basis) != 1:
        raise CollinearPoints("the three points do not span a plane")
    return as_plane(F, basis[0])


def planes_through_line(F: gf.FieldSpec, L: Line) -> list[Plane]:
    basis = gf.null_space(F, np.array([L.a.coords, L.b.coords]))
    u, v = basis
    out = {as_plane(F, F.add_table[u, F.mul_table[mu, v]]) for mu in range(F.order)}
    out.add(as_plane(F, v))
    return sorted(out)


def points_on_line(F: gf.FieldSpec, L: Line) -> list[Point]:
    a, b = np.array(L.a.coords), np.array(L.b.coords)
    pts = {as_point(F, F.add_table[a, F.mul_table[mu, b]]) for mu in range(F.order)}
    pts.add(L.b)
    return sorted(pts)


def line_through(F: gf.FieldSpec, P1: Point, P2: Point) -> Line:
    if P1 == P2:
        raise EqualPoints("a line needs two distinct points")
    pts = points_on_line(F, Line(P1, P2))
    return Line(pts[0], pts[1])
