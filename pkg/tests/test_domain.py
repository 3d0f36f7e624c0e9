from fractions import Fraction as F

import pytest

from tropicaust import lattice as L
from tropicaust.domain import (EMPTY, INF, ConvexDomain, Locus, from_vertices, half_plane,
                               interior_hull, interior_lattice_points, intersect,
                               minkowski_domain, residual_cone, strip, support_value)
from tropicaust.errors import DegenerateInput, NonConvexInput, NotLatticePolygon, Unbounded

from conftest import SQUARE, TRI3, UNIT_TRI, pt


def test_from_vertices_square(square):
    assert square.kind == "bounded"
    assert square.vertices == (pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2))
    assert len(square.support) == 4


def test_collinear_point_dropped():
    d = from_vertices([(0, 0), (1, 0), (2, 0), (0, 2)])
    assert d.vertices == (pt(0, 0), pt(2, 0), pt(0, 2))


def test_quadrant(quadrant):
    assert quadrant.kind == "tworays"
    assert quadrant.vertices == (pt(0, 0),)
    assert set(quadrant.rays) == {(1, 0), (0, 1)}


def test_bad_inputs():
    with pytest.raises(NonConvexInput):
        from_vertices([(0, 0), (4, 0), (0, 4), (1, 1)])
    with pytest.raises(DegenerateInput):
        from_vertices([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(DegenerateInput):
        strip((0, 1), 2, 1)


def test_support_value(square, quadrant):
    assert support_value(square, (1, 0)) == 2
    assert support_value(square, (1, 1)) == 4
    assert support_value(quadrant, (1, 0)) == INF


def test_residual_cone(square, quadrant, strip3):
    assert residual_cone(square).kind == "empty"
    rc = residual_cone(quadrant)
    assert rc.kind == "cone" and set(rc.generators) == {(1, 0), (0, 1)}
    assert residual_cone(strip3).kind == "line"


def test_intersect_kinds():
    assert intersect([((0, 1), 0)]).kind == "halfplane"
    assert intersect([((0, 1), 0), ((0, -1), -3)]).kind == "strip"
    assert intersect([((0, 1), 0), ((0, -1), 1)]) is EMPTY
    seg = intersect([((0, 1), 0), ((0, -1), 0), ((1, 0), 0), ((-1, 0), -2)])
    assert seg == Locus("segment", (pt(0, 0), pt(2, 0)))
    p = intersect([((1, 0), 1), ((0, 1), 1), ((-1, -1), -2)])
    assert p == Locus("point", (pt(1, 1),))
    line = intersect([((0, 1), 1), ((0, -1), -1)])
    assert line.kind == "line" and line.contains(pt(7, 1))


def test_intersect_redundant_constraints():
    d = intersect([((1, 0), 0), ((0, 1), 0), ((-1, 0), -2), ((0, -1), -2), ((1, 1), -5),
                   ((2, 0), -4)])
    assert d == from_vertices(SQUARE)


def test_minkowski_domain_accepts_interior_points():
    d = minkowski_domain([(0, 0), (1, 1), (3, 0)], ((0, 1), (0, 1)))
    assert d.kind == "tworays" and d.vertices == (pt(0, 0), pt(3, 0))


def test_interior_points_and_hull():
    tri = from_vertices(TRI3)
    assert interior_lattice_points(tri) == [(1, 1)]
    assert interior_hull(tri) == Locus("point", (pt(1, 1),))
    assert interior_hull(from_vertices(SQUARE)) == Locus("point", (pt(1, 1),))
    assert interior_hull(from_vertices(UNIT_TRI)) is EMPTY
    big = from_vertices([(0, 0), (6, 0), (6, 4), (0, 4)])
    assert interior_hull(big) == from_vertices([(1, 1), (5, 1), (5, 3), (1, 3)])


def test_interior_hull_needs_lattice_polygon(quadrant):
    with pytest.raises(NotLatticePolygon):
        interior_hull(from_vertices([(0, 0), (F(5, 2), 0), (0, 3)]))
    with pytest.raises(Unbounded):
        interior_hull(quadrant)


def test_contains(square):
    assert square.contains(pt(1, 2)) and not square.contains(pt(3, 1))
    assert half_plane((0, 1), F(1, 2)).contains(pt(-100, 1))
