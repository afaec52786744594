import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import families, nondegenerate_triangles, points, rationals, tri, triangles
from orthofam import constructions as cs
from orthofam.conics import classify, has_perpendicular_asymptotes, is_rectangular
from orthofam.errors import DegenerateTarget, NotDefined, NotOrthologic
from orthofam.family import LinearFamily, Triangle, VectorPair, triangle_at
from orthofam.harness import generators as gen
from orthofam.numeric import INF, Line, Vec2, collinear, same_line, same_point, solve_quadratic
from orthofam.orthology import (
    MoebiusMap,
    alpha_orthology_center,
    carnot_sum,
    center_conic,
    center_line,
    common_center_correspondence,
    common_center_point,
    harmonic_center,
    is_harmonic,
    is_orthologic,
    is_orthologic_family,
    orthology_center,
    orthology_form,
    rideau_check,
    rotate90,
    unique_h,
)


def v(x, y):
    return Vec2(F(x), F(y))


def reflect_x(T):
    return T.map(lambda p: Vec2(p.x, -p.y))


T_REF = tri((0, 0), (4, 0), (1, 3))
RIGHT = tri((0, 0), (4, 0), (0, 3))


def d2(p, q):
    return (p - q).dot(p - q)


class TestCarnot:
    def test_examples(self):
        assert carnot_sum(tri((0, 0), (1, 0), (0, 1)), tri((0, 0), (1, 0), (1, 1))) == 2
        assert carnot_sum(T_REF, T_REF) == 0
        assert carnot_sum(T_REF, reflect_x(T_REF)) == 0

    def test_reflection_example_term_by_term(self):
        A, B, C = T_REF
        A1, B1, C1 = reflect_x(T_REF)
        terms = [d2(A1, B), -d2(A1, C), d2(B1, C), -d2(B1, A), d2(C1, A), -d2(C1, B)]
        assert terms == [16, -10, 18, -16, 10, -18]

    @given(triangles, triangles)
    def test_sum_is_twice_the_vector_form(self, T, Tp):
        assert carnot_sum(T, Tp) == 2 * orthology_form(T, Tp)

    @given(triangles, triangles)
    def test_orthology_is_symmetric(self, T, Tp):
        assert is_orthologic(T, Tp) == is_orthologic(Tp, T)


class TestIsOrthologic:
    def test_worked_family_bases(self, fstar):
        assert is_orthologic(fstar.T0, fstar.T1)

    def test_degenerate_on_perpendicular_lines(self):
        assert is_orthologic(VectorPair(v(1, 0), v(2, 0)), VectorPair(v(0, 1), v(0, 3)))

    def test_similar_degenerate_triangles(self):
        assert is_orthologic(VectorPair(v(1, 0), v(2, 0)), VectorPair(v(3, 0), v(6, 0)))

    @given(triangles, triangles, points, rationals)
    def test_invariant_under_homothety_and_shift(self, T, Tp, w, k):
        assert is_orthologic(T, Tp) == is_orthologic(T, Tp.homothety(w, k).translated(w)) or k == 0


class TestOrthologyCenter:
    def test_right_triangle_with_itself(self):
        assert orthology_center(RIGHT, RIGHT).to_point() == v(0, 0)

    def test_reflection_pair(self):
        Tp = reflect_x(T_REF)
        O = orthology_center(T_REF, Tp).to_point()
        assert O == v(1, -1)
        # oracle: the perpendicular from A to B'C' is x + y = 0, the one from C is x = 1
        assert O.x + O.y == 0 and O.x == 1

    def test_pedal_triangle_center_is_the_point(self):
        P = v(F(3, 2), 1)
        assert orthology_center(cs.pedal_triangle(P, T_REF), T_REF).to_point() == P

    def test_errors(self):
        flat = tri((0, 0), (1, 1), (2, 2))
        with pytest.raises(DegenerateTarget):
            orthology_center(T_REF, flat)
        with pytest.raises(NotDefined):
            orthology_center(flat, flat)
        with pytest.raises(NotOrthologic):
            orthology_center(T_REF, tri((0, 0), (5, 1), (3, 7)))

    @given(nondegenerate_triangles, nondegenerate_triangles)
    def test_both_centers_exist_iff_orthologic(self, T, Tp):
        if is_orthologic(T, Tp):
            O = orthology_center(T, Tp)
            Op = orthology_center(Tp, T)
            assert O.is_finite() and Op.is_finite()
        else:
            with pytest.raises(NotOrthologic):
                orthology_center(T, Tp)


class TestHarmonic:
    def test_rotated_right_triangle(self):
        Tp = RIGHT.map(lambda p: Vec2(-p.y, p.x))
        assert is_harmonic(RIGHT, Tp)
        assert harmonic_center(RIGHT, Tp).to_point() == v(0, 0)

    def test_generic_pair_is_not_harmonic(self):
        assert not is_harmonic(T_REF, tri((0, 0), (5, 1), (3, 7)))

    @given(nondegenerate_triangles, points, rationals)
    def test_maxwell_symmetry(self, T, w, s):
        Tp = gen.orthologic_partner(random.Random(str((T, w, s))), T, 20)
        R = rotate90(Tp)
        assert is_harmonic(T, R) == is_harmonic(R, T)
        assert is_harmonic(T, R)


class TestAlphaCenter:
    def test_right_angle_is_orthology(self):
        Tp = reflect_x(T_REF)
        assert same_point(alpha_orthology_center(T_REF, Tp, v(0, 1)), orthology_center(T_REF, Tp))

    def test_zero_angle_is_harmonicity(self):
        Tp = RIGHT.map(lambda p: Vec2(-p.y, p.x))
        assert same_point(alpha_orthology_center(RIGHT, Tp, v(1, 0)), harmonic_center(RIGHT, Tp))


class TestRideau:
    def test_reflection_pair(self):
        assert rideau_check(T_REF, reflect_x(T_REF))

    def test_identity(self):
        assert rideau_check(T_REF, T_REF)

    def test_needs_orthologic_pair(self):
        with pytest.raises(NotOrthologic):
            rideau_check(T_REF, tri((0, 0), (5, 1), (3, 7)))

    @given(nondegenerate_triangles)
    def test_random_orthologic_pairs(self, T):
        Tp = gen.orthologic_partner(random.Random(str(T)), T, 30)
        assert rideau_check(T, Tp)


def altitude_family(R, ks=(F(1), F(-2), F(3, 2))):
    A, B, C = R
    perp = lambda w: Vec2(-w.y, w.x)
    return LinearFamily(R, Triangle(A + perp(C - B) * ks[0], B + perp(A - C) * ks[1], C + perp(B - A) * ks[2]))


class TestFamilies:
    def test_worked_family(self, fstar):
        assert is_orthologic_family(fstar)

    def test_altitude_family(self):
        assert is_orthologic_family(altitude_family(T_REF))

    def test_unrelated_family(self):
        assert not is_orthologic_family(LinearFamily(T_REF, tri((0, 0), (5, 1), (3, 7))))

    @given(nondegenerate_triangles, rationals, rationals)
    def test_every_pair_of_members_is_orthologic(self, T, s, t):
        Fm = LinearFamily(T, gen.orthologic_partner(random.Random(str(T)), T, 30))
        assert is_orthologic(triangle_at(Fm, s), triangle_at(Fm, t))


class TestCenterLine:
    def test_fixed_center_is_the_orthocenter(self):
        Fm = altitude_family(T_REF)
        c = center_line(Fm, T_REF)
        assert same_point(c, cs.orthocenter(T_REF))

    def test_altitude_family_centers_are_collinear(self):
        Fm = altitude_family(T_REF)
        pts = [orthology_center(triangle_at(Fm, t), T_REF).to_point() for t in (0, 1, 2)]
        assert collinear(*pts)

    def test_translating_target_keeps_trajectory(self):
        rng = random.Random(5)
        Tp = T_REF
        T0 = gen.orthologic_partner(rng, Tp, 20)
        T1 = gen.orthologic_partner(rng, Tp, 20)
        Fm = LinearFamily(T0, T1)
        l1 = center_line(Fm, Tp)
        l2 = center_line(Fm, Tp.translated(v(7, -3)))
        l3 = center_line(Fm, Tp.homothety(v(1, 1), F(-5, 2)))
        assert isinstance(l1, Line)
        assert same_line(l1, l2) and same_line(l1, l3)

    @given(nondegenerate_triangles)
    def test_centers_move_on_a_line(self, Tp):
        rng = random.Random(str(Tp))
        Fm = LinearFamily(gen.orthologic_partner(rng, Tp, 20), gen.orthologic_partner(rng, Tp, 20))
        pts = []
        for t in (0, 1, 2, 3):
            Tt = triangle_at(Fm, t)
            pts.append(orthology_center(Tt, Tp).to_point())
        assert collinear(*pts[:3]) and collinear(pts[0], pts[1], pts[3]) or pts[0] == pts[1]


def isogonal_conjugate(P, R):
    """Barycentric oracle: (u:v:w) -> (a^2/u : b^2/v : c^2/w)."""
    A, B, C = R
    area = (B - A).cross(C - A)
    u = (B - P).cross(C - P) / area
    w_ = (A - P).cross(B - P) / area
    vv = 1 - u - w_
    a2, b2, c2 = d2(B, C), d2(C, A), d2(A, B)
    x, y, z = a2 / u, b2 / vv, c2 / w_
    s = x + y + z
    return (A * x + B * y + C * z) / s


class TestCenterConic:
    def test_pedal_family_gives_isogonal_image(self):
        R = T_REF
        P0, P1 = v(1, 1), v(F(5, 2), F(1, 3))
        Fm = cs.pedal_family(R, P0, P1)
        C = center_conic(R, Fm)
        for s in (F(1, 3), F(-1, 2), F(7, 5)):
            P = P0 + (P1 - P0) * s
            assert C.contains(isogonal_conjugate(P, R))
            assert same_point(orthology_center(R, cs.pedal_triangle(P, R)), isogonal_conjugate(P, R))

    def test_line_through_circumcenter_gives_rectangular_hyperbola(self):
        R = T_REF
        O = cs.circumcenter(R)
        Fm = cs.pedal_family(R, v(1, 1), O + (v(1, 1) - O) * 3)
        C = center_conic(R, Fm)
        assert C.contains(cs.orthocenter(R))
        assert is_rectangular(C)
        assert has_perpendicular_asymptotes(C)

    def test_kiepert_hyperbola(self):
        R = T_REF
        C = center_conic(R, cs.kiepert_family(R))
        for p in (*R, cs.orthocenter(R), cs.centroid(R)):
            assert C.contains(p)
        assert classify(C).value in ("rectangular_hyperbola", "line_pair")


def gergonnian_family(seed=3):
    R, I, _ = gen.rational_incircle_triangle(random.Random(seed))
    K, _ = cs.contact_triangles(R)
    return LinearFamily(R, K), R, I


class TestCorrespondence:
    def test_incenter_is_both_centers(self):
        Fm, R, I = gergonnian_family()
        m = common_center_correspondence(Fm)
        assert isinstance(m, MoebiusMap)
        assert common_center_point(Fm) == I
        for lam in (F(1, 3), F(-2), F(5, 7)):
            mu = m(lam)
            if mu is INF or lam == m.pole():
                continue
            Tl, Tm = triangle_at(Fm, lam), triangle_at(Fm, mu)
            assert orthology_center(Tl, Tm).to_point() == I
            assert orthology_center(Tm, Tl).to_point() == I

    def test_vertex_at_the_meet_of_the_carriers(self):
        # one member's vertex lands on the meet of the degenerate lines
        R = tri((F(65, 3), -4), (-5, 16), (F(101, 15), F(-76, 5)))
        K, _ = cs.contact_triangles(R)
        Fm = LinearFamily(R, K)
        I = v(10, -4)
        assert common_center_point(Fm) == I
        m = common_center_correspondence(Fm)
        for lam in (F(1, 3), F(-2), F(5, 7)):
            mu = m(lam)
            if mu is INF or lam == m.pole():
                continue
            Tl, Tm = triangle_at(Fm, lam), triangle_at(Fm, mu)
            assert orthology_center(Tl, Tm).to_point() == I
            assert orthology_center(Tm, Tl).to_point() == I

    def test_fixed_points_make_the_center_an_orthocenter(self):
        for seed in range(20):
            Fm, R, I = gergonnian_family(seed)
            m = common_center_correspondence(Fm)
            p, q, r, s = m
            rs = solve_quadratic(r, s - p, -q)
            if rs.kind != "two":
                continue
            for lam in rs.roots:
                if lam is INF:
                    continue
                assert cs.orthocenter(triangle_at(Fm, lam)) == I
            return
        pytest.skip("no instance with real fixed points")

    def test_pole_is_the_orthocenter_parameter(self):
        Fm, R, I = gergonnian_family()
        m = common_center_correspondence(Fm)
        h = unique_h(Fm)
        assert m.pole() == h
        assert m(h) is INF


class TestUniqueH:
    def test_altitude_family(self):
        assert unique_h(altitude_family(T_REF)) == 0

    def test_gergonnian_family(self):
        Fm, R, I = gergonnian_family()
        h = unique_h(Fm)
        Th = triangle_at(Fm, h)
        va, vb, vc = Fm.velocities()
        assert (Th.B - Th.A).dot(vc) == 0
        assert (Th.C - Th.B).dot(va) == 0
        assert (Th.A - Th.C).dot(vb) == 0

    def test_infinite_h(self):
        # concurrent trajectories through the origin whose velocities are perpendicular
        # to the sides of the triangle at infinity
        R = T_REF
        H = cs.orthocenter(R)
        Fm = LinearFamily(R.translated(-H), R.translated(-H).homothety(v(0, 0), 3))
        # every member is a homothet of R about the orthocenter: T_inf is 2 R, so h = inf
        assert unique_h(Fm) is INF
