"""Classical triangle constructions: centers, pedal triangles, Simson lines, contact triangles."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import NotOnCircumcircle
from .family import LinearFamily, Triangle
from .numeric import (
    HPoint,
    Line,
    Vec2,
    as_scalar,
    eq,
    intersect,
    is_inexact,
    perp,
    rotate_back,
    same_point,
    sign,
    sqrt_exact,
)
from .orthology import orthology_center


def _length(v: Vec2):
    n2 = v.dot(v)
    return math.sqrt(n2) if is_inexact(n2) else sqrt_exact(n2)


def circumcenter(T: Triangle) -> Vec2:
    A, B, C = T
    b, c = B - A, C - A
    d = 2 * b.cross(c)
    bb, cc = b.dot(b), c.dot(c)
    return A + Vec2((c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d)


def orthocenter(T: Triangle) -> Vec2:
    return T.A + T.B + T.C - circumcenter(T) * 2


def centroid(T: Triangle) -> Vec2:
    return (T.A + T.B + T.C) / 3


def side_lengths(T: Triangle) -> tuple:
    """``(a, b, c) = (|BC|, |CA|, |AB|)``, exact when the squares are rational squares."""
    A, B, C = T
    return _length(C - B), _length(A - C), _length(B - A)


def incenter(T: Triangle) -> Vec2:
    a, b, c = side_lengths(T)
    return (T.A * a + T.B * b + T.C * c) / (a + b + c)


@dataclass(frozen=True)
class ReferenceTriangle:
    """A nondegenerate triangle with its lazily computed centers."""

    T: Triangle

    @cached_property
    def O(self) -> Vec2:
        return circumcenter(self.T)

    @cached_property
    def H(self) -> Vec2:
        return orthocenter(self.T)

    @cached_property
    def G(self) -> Vec2:
        return centroid(self.T)

    @cached_property
    def I(self) -> Vec2:
        return incenter(self.T)

    @cached_property
    def R2(self):
        """Squared circumradius."""
        v = self.T.A - self.O
        return v.dot(v)

    def on_circumcircle(self, p, tol=None) -> bool:
        v = p - self.O
        return eq(v.dot(v), self.R2, tol)

    def sides(self) -> tuple[Line, Line, Line]:
        A, B, C = self.T
        return Line.through(B, C), Line.through(C, A), Line.through(A, B)


def _ref(R) -> ReferenceTriangle:
    return R if isinstance(R, ReferenceTriangle) else ReferenceTriangle(Triangle.of(R) if not isinstance(R, Triangle) else R)


def foot(p: Vec2, l: Line) -> Vec2:
    """Orthogonal projection of ``p`` onto ``l``."""
    n = l.normal()
    k = (n.dot(p) + l.c) / n.dot(n)
    return p - n * k


def reflect(p: Vec2, l: Line) -> Vec2:
    return foot(p, l) * 2 - p


def project(T: Triangle, l: Line) -> Triangle:
    return T.map(lambda p: foot(p, l))


def reflect_triangle(T: Triangle, l: Line) -> Triangle:
    return T.map(lambda p: reflect(p, l))


def medial_triangle(T: Triangle) -> Triangle:
    A, B, C = T
    return Triangle((B + C) / 2, (C + A) / 2, (A + B) / 2)


def pedal_triangle(p: Vec2, R) -> Triangle:
    """Feet of the perpendiculars from ``p`` to BC, CA, AB."""
    R = _ref(R)
    return Triangle(*(foot(p, s) for s in R.sides()))


def alpha_pedal_triangle(p: Vec2, R, alpha) -> Triangle:
    """Points X on the side lines with the oriented angle from XP to the side equal to ``alpha``."""
    R = _ref(R)
    alpha = Vec2(as_scalar(alpha[0]), as_scalar(alpha[1]))
    out = []
    for s in R.sides():
        through_p = Line.through_direction(p, rotate_back(s.direction(), alpha))
        out.append(intersect(through_p, s).to_point())
    return Triangle(*out)


def pedal_family(R, P0: Vec2, P1: Vec2) -> LinearFamily:
    """Pedal triangles of a point moving linearly from ``P0`` to ``P1``."""
    return LinearFamily(pedal_triangle(P0, R), pedal_triangle(P1, R))


def simson_line(p: Vec2, R, tol=None) -> Line:
    R = _ref(R)
    if not R.on_circumcircle(p, tol):
        raise NotOnCircumcircle("the point is not on the circumcircle")
    feet = pedal_triangle(p, R)
    for i in range(3):
        for j in range(i + 1, 3):
            if not same_point(feet[i], feet[j], tol):
                return Line.through(feet[i], feet[j])
    raise NotOnCircumcircle("all feet coincide")


def orthopole(R, l: Line, tol=None) -> HPoint:
    """Orthology center of the projection of ``R`` onto ``l`` with respect to ``R``."""
    T = _ref(R).T
    return orthology_center(project(T, l), T, tol)


def contact_triangles(R) -> tuple[Triangle, Triangle]:
    """Incircle contact points ``K_a K_b K_c`` and excircle contact points ``X_a X_b X_c``."""
    A, B, C = _ref(R).T
    a, b, c = side_lengths(Triangle(A, B, C))
    s = (a + b + c) / 2
    K = Triangle(
        B + (C - B) * ((s - b) / a),
        C + (A - C) * ((s - c) / b),
        A + (B - A) * ((s - a) / c),
    )
    X = Triangle(
        B + (C - B) * ((s - c) / a),
        C + (A - C) * ((s - a) / b),
        A + (B - A) * ((s - b) / c),
    )
    return K, X


def square_centers(R, outward: bool = True) -> Triangle:
    """Centers of the squares erected on BC, CA, AB (outward by default)."""
    T = _ref(R).T
    A, B, C = T
    o = sign(T.orientation())
    # for counterclockwise triangles the outside of side XY is on its right
    k = -o if outward else o
    out = []
    for X, Y in ((B, C), (C, A), (A, B)):
        out.append((X + Y) / 2 + perp(Y - X) * k / 2)
    return Triangle(*out)


def kiepert_family(R) -> LinearFamily:
    """Medial triangle at ``t = 0`` and outward square centers at ``t = 1``."""
    T = _ref(R).T
    return LinearFamily(medial_triangle(T), square_centers(T))


def altitude_feet(R) -> Triangle:
    T = _ref(R).T
    return Triangle(*(foot(v, s) for v, s in zip(T, _ref(R).sides())))


def altitude_configuration(R) -> tuple[Triangle, Triangle]:
    """Altitude feet ``DEF`` and midpoints ``XYZ`` of the altitudes AD, BE, CF."""
    T = _ref(R).T
    D = altitude_feet(T)
    mid = Triangle(*((v + f) / 2 for v, f in zip(T, D)))
    return D, mid


def radical_axis(c1: Vec2, r1sq, c2: Vec2, r2sq) -> Line:
    """Radical axis of two circles given by center and squared radius."""
    n = (c2 - c1) * 2
    return Line(n.x, n.y, -(c2.dot(c2) - c1.dot(c1) - r2sq + r1sq))


def point_on_line(l: Line, s) -> Vec2:
    """Affine parametrization of a finite line."""
    p = foot(Vec2(l.a - l.a, l.b - l.b), l)
    return p + l.direction() * as_scalar(s)


def bevan_point(R) -> Vec2:
    """Reflection of the incenter in the circumcenter."""
    R = _ref(R)
    return R.O * 2 - R.I
