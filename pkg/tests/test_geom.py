import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coset_atlas import geom, gf
from coset_atlas.cubic import osculating_plane
from coset_atlas.errors import CollinearPoints, EqualPoints, ZeroVector
from coset_atlas.geom import PG3, Plane, Point


@pytest.fixture(scope="module")
def F5():
    return gf.field_of_order(5)


def test_normalize_examples(F5):
    assert geom.normalize(F5, (0, 0, 0, 3)) == (0, 0, 0, 1)
    assert geom.normalize(F5, (1, 2, 3, 4)) == (1, 2, 3, 4)
    assert geom.normalize(F5, (2, 4, 1, 3)) == (1, 2, 3, 4)
    with pytest.raises(ZeroVector):
        geom.normalize(F5, (0, 0, 0, 0))


def test_incidence_examples(F5):
    assert geom.incident(F5, Point((1, 0, 0, 0)), Plane((0, 0, 0, 1)))
    assert not geom.incident(F5, Point((0, 0, 0, 1)), Plane((0, 0, 0, 1)))
    assert geom.incident(F5, Point((1, 1, 1, 1)), osculating_plane(F5, 1))


def test_plane_through(F5):
    e = [Point(tuple(int(i == j) for j in range(4))) for i in range(4)]
    assert geom.plane_through(F5, e[0], e[1], e[2]) == Plane((0, 0, 0, 1))
    third = geom.points_on_line(F5, geom.line_through(F5, e[0], e[1]))[2]
    with pytest.raises(CollinearPoints):
        geom.plane_through(F5, e[0], e[1], third)
    P0, P1, Pinf = Point((1, 0, 0, 0)), Point((1, 1, 1, 1)), Point((0, 0, 0, 1))
    pi = geom.plane_through(F5, P0, P1, Pinf)
    assert all(geom.incident(F5, P, pi) for P in (P0, P1, Pinf))


def test_lines(F5):
    P, Q = Point((1, 0, 0, 0)), Point((0, 1, 2, 3))
    L = geom.line_through(F5, P, Q)
    pts = geom.points_on_line(F5, L)
    assert len(pts) == 6 and P in pts and Q in pts
    assert geom.line_through(F5, pts[3], pts[5]) == L
    assert len(geom.planes_through_line(F5, L)) == 6
    with pytest.raises(EqualPoints):
        geom.line_through(F5, P, P)


@pytest.mark.parametrize("q,n", [(5, 156), (7, 400), (9, 820)])
def test_enumeration_sizes(q, n):
    F = gf.field_of_order(q)
    assert len(geom.enumerate_points(F)) == n
    assert len(geom.enumerate_planes(F)) == n


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13])
def test_index_order_and_duality(q):
    F = gf.field_of_order(q)
    space = PG3(F)
    assert space.size == q**3 + q * q + q + 1
    assert [tuple(r) for r in space.coords] == sorted(tuple(r) for r in space.coords)
    assert np.array_equal(space.index_many(space.coords), np.arange(space.size))
    assert all(geom.normalize(F, r) == tuple(r) for r in space.coords[:: max(1, space.size // 50)])


@pytest.mark.parametrize("q", [5, 7, 8, 9])
def test_planes_contain_q2_q_1_points(q):
    F = gf.field_of_order(q)
    space = PG3(F)
    rng = random.Random(q)
    cols = rng.sample(range(space.size), 10)
    inc = space.incidence(space.coords, space.coords[cols])
    assert set(inc.sum(axis=0)) == {q * q + q + 1}


@settings(max_examples=100, deadline=None)
@given(q=st.sampled_from((5, 7, 8, 9)), data=st.data())
def test_incidence_invariant_under_scaling(q, data):
    F = gf.field_of_order(q)
    vec = st.lists(st.integers(0, q - 1), min_size=4, max_size=4).filter(any)
    p, pi = data.draw(vec), data.draw(vec)
    a, b = data.draw(st.integers(1, q - 1)), data.draw(st.integers(1, q - 1))
    P, Pi = geom.as_point(F, p), geom.as_plane(F, pi)
    Ps = geom.as_point(F, [F.mul(a, x) for x in p])
    Pis = geom.as_plane(F, [F.mul(b, x) for x in pi])
    assert Ps == P and Pis == Pi
    assert geom.incident(F, P, Pi) == (F.dot(p, pi) == 0)
