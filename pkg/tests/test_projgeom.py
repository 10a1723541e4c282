import pytest

from linecensus import (LineRep, ProjectivePoint, count_common_zeros,
                        count_points_on, enumerate_lines, enumerate_points,
                        find_singular_point, line_count, line_from_index,
                        lines_contained_in, make_field, parse_line_literal,
                        parse_poly, point_count, tangent_plane)
from linecensus.errors import (DependentSpan, ExtensionTooLarge,
                               PolynomialSyntaxError, SingularPoint)
from linecensus.projgeom import PlaneRep, extension_field


def test_point_normalization(F3):
    P = ProjectivePoint.from_indices(F3, (2, 1, 0, 0))
    assert P._key == (1, 2, 0, 0)
    assert repr(P) == "[1 : 2 : 0 : 0]"
    Q = ProjectivePoint.from_indices(F3, (1, 2, 0, 0))
    assert P._key == Q._key


def test_point_counts():
    assert point_count(3, 3) == 40
    assert point_count(5, 3) == 156
    assert point_count(3, 2) == 13
    assert point_count(9, 3) == 820


def test_enumerate_points_complete(F3):
    pts = list(enumerate_points(F3))
    assert len(pts) == 40
    assert len({p._key for p in pts}) == 40


def test_line_counts():
    # (q^2+1)(q^2+q+1)
    assert line_count(2) == 35
    assert line_count(3) == 130
    assert line_count(5) == 806
    assert line_count(7) == 2850


def test_enumerate_lines_complete_and_distinct(F2):
    lines = list(enumerate_lines(F2))
    assert len(lines) == 35
    assert len({l.pluecker for l in lines}) == 35


def test_line_from_index_matches_enumeration(F3):
    lines = list(enumerate_lines(F3))
    for idx in (0, 17, 129):
        assert line_from_index(F3, idx).literal() == lines[idx].literal()


def test_line_literal_round_trip(F3):
    P = ProjectivePoint.from_indices(F3, (2, 1, 0, 0))
    Q = ProjectivePoint.from_indices(F3, (0, 0, 1, 1))
    L = LineRep.from_points(P, Q)
    assert L.literal() == "1,2,0,0|0,0,1,1"
    back = parse_line_literal(L.literal(), F3)
    assert back.rows == L.rows
    assert back.pluecker == L.pluecker


def test_line_points_and_span(F3):
    L = parse_line_literal("1,0,0,0|0,1,0,1", F3)
    pts = L.points()
    assert len(pts) == 4
    assert len({p._key for p in pts}) == 4
    a, b = L.span()
    assert [x.i for x in a] == [1, 0, 0, 0]
    assert [x.i for x in b] == [0, 1, 0, 1]


def test_line_rows_are_echelon_canonical(F5):
    # same line from two spanning pairs yields identical rows
    P = ProjectivePoint.from_indices(F5, (1, 2, 3, 4))
    Q = ProjectivePoint.from_indices(F5, (0, 1, 1, 1))
    R = ProjectivePoint.from_indices(F5, (1, 3, 4, 0))  # P + Q
    L1 = LineRep.from_points(P, Q)
    L2 = LineRep.from_points(Q, R)
    assert L1.rows == L2.rows


def test_dependent_span_rejected(F3):
    P = ProjectivePoint.from_indices(F3, (1, 2, 0, 0))
    Q = ProjectivePoint.from_indices(F3, (2, 1, 0, 0))
    with pytest.raises(DependentSpan):
        LineRep.from_points(P, Q)


def test_pluecker_relation_holds(F3):
    # p01*p23 - p02*p13 + p03*p12 = 0 for every enumerated line
    for L in enumerate_lines(F3):
        a, b, c, d, e, f = (F3.element(x) for x in L.pluecker)
        assert (a * f - b * e + c * d).i == 0


def test_plane_contains(F3):
    pl = PlaneRep(F3, [F3.zero, F3.zero, F3.zero, F3.one])
    assert pl._key == (0, 0, 0, 1)
    assert pl.contains(ProjectivePoint.from_indices(F3, (1, 0, 0, 0)))
    assert not pl.contains(ProjectivePoint.from_indices(F3, (0, 0, 0, 1)))


def test_tangent_plane_of_quadric(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    P = ProjectivePoint.from_indices(F3, (1, 0, 0, 0))
    pl = tangent_plane(Q, P)
    assert pl._key == (0, 0, 0, 1)
    assert pl.contains(P)


def test_tangent_plane_rejects_singular_point(F3):
    F = parse_poly("X0^2*X1", F3)
    with pytest.raises(SingularPoint):
        tangent_plane(F, ProjectivePoint.from_indices(F3, (0, 1, 0, 0)))


def test_count_points_on_quadric(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    # smooth quadric: (q+1)^2 points
    assert count_points_on(Q) == 16
    assert count_points_on(Q, k=2) == 100


def test_count_common_zeros(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    L = parse_poly("X3", F3)
    # slice X3 = 0 of the quadric is two lines through [1:0:0:0]
    assert count_common_zeros([Q, L]) == 7
    assert count_common_zeros([Q]) == count_points_on(Q)


def test_find_singular_point(F3):
    F = parse_poly("X0^2*X1", F3)
    P = find_singular_point(F)
    assert repr(P) == "[0 : 1 : 0 : 0]"
    Q = parse_poly("X0*X3 - X1*X2", F3)
    assert find_singular_point(Q) is None


def test_find_singular_point_extension_cap(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    with pytest.raises(ExtensionTooLarge):
        find_singular_point(Q, k=4, ext_cap=3)


def test_lines_contained_in_quadric(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    lines = lines_contained_in(Q)
    # smooth quadric carries 2(q+1) lines
    assert len(lines) == 8
    for L in lines:
        for P in L.points():
            coords = P.coords
            assert (coords[0] * coords[3] - coords[1] * coords[2]).i == 0


def test_extension_field(F3):
    F27 = extension_field(F3, 3)
    assert F27.q == 27 and F27.p == 3
    assert extension_field(F3, 1) is F3
