import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import nondegenerate_triangles, points, rationals, tri
from orthofam import constructions as cs
from orthofam.conics import degenerate_carriers
from orthofam.errors import NotOnCircumcircle
from orthofam.family import LinearFamily, Triangle, triangle_at
from orthofam.harness import generators as gen
from orthofam.numeric import Line, Vec2, collinear, concurrent, orthogonal, perpendicular_from, same_line, same_point
from orthofam.orthology import (
    alpha_orthology_center,
    carnot_sum,
    center_conic,
    is_orthologic,
    is_orthologic_family,
    orthology_center,
)


def v(x, y):
    return Vec2(F(x), F(y))


RIGHT = tri((0, 0), (4, 0), (0, 3))
QUARTER = Vec2(F(0), F(1))  # alpha = pi/2 as (cos, sin)


class TestCenters:
    def test_right_triangle(self):
        R = cs.ReferenceTriangle(RIGHT)
        assert R.O == v(2, F(3, 2))
        assert R.H == v(0, 0)
        assert R.I == v(1, 1)
        assert R.G == v(F(4, 3), 1)

    @given(nondegenerate_triangles)
    def test_euler_relation_and_equidistance(self, T):
        R = cs.ReferenceTriangle(T)
        assert R.H - R.O == (T.A - R.O) + (T.B - R.O) + (T.C - R.O)
        assert len({(X - R.O).norm2() for X in T}) == 1

    def test_bevan_point(self):
        assert cs.bevan_point(RIGHT) == v(3, 2)


class TestPedal:
    def test_circumcenter_gives_the_medial_triangle(self):
        assert cs.pedal_triangle(v(2, F(3, 2)), RIGHT) == tri((2, F(3, 2)), (0, F(3, 2)), (2, 0))
        assert cs.pedal_triangle(v(2, F(3, 2)), RIGHT) == cs.medial_triangle(RIGHT)

    def test_point_on_circumcircle(self):
        P = cs.pedal_triangle(v(4, 3), RIGHT)
        assert set(P) == {v(4, 0), v(0, 3), v(F(64, 25), F(27, 25))}
        assert P.is_degenerate()
        assert same_line(cs.simson_line(v(4, 3), RIGHT), Line(F(3), F(4), F(-12)))

    @given(points)
    def test_pedal_triangle_is_orthologic_with_center_p(self, p):
        T = tri((0, 0), (7, 1), (2, 5))
        P = cs.pedal_triangle(p, T)
        assert carnot_sum(P, T) == 0
        if not P.is_degenerate():
            assert same_point(orthology_center(T, P), p) or same_point(orthology_center(P, T), p)

    def test_pedal_criterion_both_directions(self):
        rng = random.Random(3)
        for _ in range(20):
            R = gen.triangle(rng)
            P0 = gen.point(rng)
            P1 = gen.collinear_with_circumcenter(rng, R, P0)
            assert is_orthologic(cs.pedal_triangle(P0, R), cs.pedal_triangle(P1, R))
            Q = gen.point(rng)
            O = cs.circumcenter(R)
            if not collinear(P0, Q, O):
                assert not is_orthologic(cs.pedal_triangle(P0, R), cs.pedal_triangle(Q, R))

    @given(rationals, rationals, rationals)
    def test_sliding_pedal_vertices_along_their_perpendiculars(self, k1, k2, k3):
        p = v(1, 2)
        P = cs.pedal_triangle(p, RIGHT)
        moved = Triangle(*(p + (X - p) * k for X, k in zip(P, (k1, k2, k3))))
        assert is_orthologic(moved, RIGHT)
        assert is_orthologic(Triangle(*((X + p) / 2 for X in P)), RIGHT)

    def test_pedal_family_is_orthologic_when_line_passes_through_o(self):
        Fm = cs.pedal_family(RIGHT, v(0, 0), v(4, 3))
        assert is_orthologic_family(Fm)
        assert not is_orthologic_family(cs.pedal_family(RIGHT, v(1, 0), v(0, 1)))


class TestAlphaPedal:
    @given(points)
    def test_right_angle_is_the_pedal_triangle(self, p):
        assert cs.alpha_pedal_triangle(p, RIGHT, QUARTER) == cs.pedal_triangle(p, RIGHT)

    @pytest.mark.parametrize("alpha", [(F(3, 5), F(4, 5)), (F(-5, 13), F(12, 13)), (F(8, 17), F(-15, 17))])
    def test_alpha_orthologic_with_center_p(self, alpha):
        p = v(1, 1)
        T = tri((0, 0), (7, 1), (2, 5))
        P = cs.alpha_pedal_triangle(p, T, alpha)
        assert same_point(alpha_orthology_center(P, T, Vec2(*alpha)), p)

    def test_vertices_move_linearly(self):
        alpha = (F(3, 5), F(4, 5))
        T = tri((0, 0), (7, 1), (2, 5))
        P0, P1 = v(1, 1), v(3, -2)
        Fm = LinearFamily(cs.alpha_pedal_triangle(P0, T, alpha), cs.alpha_pedal_triangle(P1, T, alpha))
        for t in (F(-1), F(1, 3), F(5, 2)):
            assert triangle_at(Fm, t) == cs.alpha_pedal_triangle(P0 + (P1 - P0) * t, T, alpha)


class TestSimson:
    def test_not_on_circle(self):
        with pytest.raises(NotOnCircumcircle):
            cs.simson_line(v(1, 1), RIGHT)

    def test_vertex(self):
        B = v(4, 0)
        l = cs.simson_line(B, RIGHT)
        feet = cs.pedal_triangle(B, RIGHT)
        assert all(l.contains(X) for X in feet)
        # two feet are B itself; the third is the foot of the altitude from B
        assert l.contains(B) and l.contains(cs.foot(B, Line.through(RIGHT.C, RIGHT.A)))

    def test_opposite_points_give_perpendicular_lines(self):
        O, r = v(2, F(3, 2)), F(5, 2)
        for c, s in ((F(3, 5), F(4, 5)), (F(0), F(1)), (F(5, 13), F(12, 13)), (F(-8, 17), F(15, 17))):
            P = O + Vec2(c, s) * r
            Q = O * 2 - P
            assert orthogonal(cs.simson_line(P, RIGHT).direction(), cs.simson_line(Q, RIGHT).direction())


class TestOrthopole:
    def test_projection_is_orthologic(self):
        R = tri((0, 0), (4, 0), (1, 3))
        for l in (Line(F(0), F(1), F(0)), Line(F(1), F(2), F(-3)), Line(F(3), F(-1), F(7))):
            assert carnot_sum(cs.project(R, l), R) == 0
            Fm = LinearFamily(R, cs.project(R, l))
            M = triangle_at(Fm, 2)
            assert M == cs.reflect_triangle(R, l)
            assert is_orthologic(M, R)

    def test_x_axis(self):
        R = tri((0, 0), (4, 0), (1, 3))
        l = Line(F(0), F(1), F(0))
        P = cs.orthopole(R, l)
        # perpendiculars from the projections onto the opposite sides
        A1, B1, C1 = cs.project(R, l)
        perps = [perpendicular_from(X, Line.through(Y, Z)) for X, (Y, Z) in zip((A1, B1, C1), ((R.B, R.C), (R.C, R.A), (R.A, R.B)))]
        assert concurrent(*perps)
        assert all(p.contains(P) for p in perps)
        assert P.to_point() == v(1, 1)


class TestContact:
    def test_right_triangle(self):
        K, X = cs.contact_triangles(RIGHT)
        assert K.C == v(1, 0)
        assert K == tri((F(8, 5), F(9, 5)), (0, 1), (1, 0))
        assert X == tri((F(12, 5), F(6, 5)), (0, 2), (3, 0))

    def test_midpoint_symmetry_and_orthology(self):
        for T in (RIGHT, tri((0, 0), (12, 0), (0, 5)), gen.rational_incircle_triangle(random.Random(4))[0]):
            K, X = cs.contact_triangles(T)
            for k, x, m in zip(K, X, cs.medial_triangle(T)):
                assert (k + x) / 2 == m
            assert is_orthologic(K, X)

    def test_irrational_sides_stay_exact(self):
        T = tri((0, 0), (2, 0), (1, 3))
        K, X = cs.contact_triangles(T)
        for k, x, m in zip(K, X, cs.medial_triangle(T)):
            assert (k + x) / 2 == m
        assert is_orthologic(K, X)


class TestKiepert:
    def test_base_members(self):
        T = tri((0, 0), (6, 0), (1, 4))
        Fm = cs.kiepert_family(T)
        assert triangle_at(Fm, 0) == cs.medial_triangle(T)
        # square on AB (below the x-axis for this counterclockwise triangle)
        assert triangle_at(Fm, 1).C == v(3, -3)

    def test_orientation_is_computed(self):
        T = tri((0, 0), (6, 0), (1, 4))
        Tr = Triangle(T.A, T.C, T.B)
        assert set(cs.square_centers(T)) == set(cs.square_centers(Tr))

    def test_center_conic_through_centroid_and_orthocenter(self):
        T = tri((0, 0), (6, 0), (1, 4))
        C = center_conic(T, cs.kiepert_family(T))
        R = cs.ReferenceTriangle(T)
        for p in (*T, R.G, R.H):
            assert C.contains(p)


class TestAltitudes:
    def test_configuration(self):
        T = tri((0, 0), (6, 0), (1, 4))
        D, XYZ = cs.altitude_configuration(T)
        assert is_orthologic(T, XYZ)
        assert triangle_at(LinearFamily(T, XYZ), 2) == D
        assert is_orthologic(D, XYZ)

    def test_feet_lie_on_sides(self):
        D = cs.altitude_feet(RIGHT)
        assert D == tri((F(36, 25), F(48, 25)), (0, 0), (0, 0))

    @pytest.mark.parametrize("seed", range(10))
    def test_flies_on_altitudes(self, seed):
        Fm = gen.flies_on_altitudes(random.Random(seed))
        assert is_orthologic_family(Fm)
        (_, d1), (_, d2) = degenerate_carriers(Fm)
        assert orthogonal(d1, d2)


class TestRadicalAxes:
    @given(rationals, rationals, rationals)
    def test_centers_orthologic_to_points_on_radical_axes(self, s1, s2, s3):
        c1, c2, c3 = v(0, 0), v(5, 1), v(2, 6)
        r1, r2, r3 = F(4), F(9), F(1)
        X23 = cs.point_on_line(cs.radical_axis(c2, r2, c3, r3), s1)
        X31 = cs.point_on_line(cs.radical_axis(c3, r3, c1, r1), s2)
        X12 = cs.point_on_line(cs.radical_axis(c1, r1, c2, r2), s3)
        assert is_orthologic(Triangle(c1, c2, c3), Triangle(X23, X31, X12))
