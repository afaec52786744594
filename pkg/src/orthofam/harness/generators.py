"""Seeded random instances with rational coordinates.

Every generator takes a ``random.Random`` and returns exact values; a
trial is reproducible from ``(suite, seed, index)`` alone.
"""
from __future__ import annotations

import random
from fractions import Fraction

from ..constructions import circumcenter
from ..family import LinearFamily, Triangle, degenerate_parameters, is_singular
from ..numeric import Line, Vec2, intersect, perp

NUM_BOUND = 100
DEN_BOUND = 10
# reject slivers: twice the area must be at least this fraction of the longest side squared
MIN_SHAPE = Fraction(1, 200)


def trial_rng(suite: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{suite}/{seed}/{index}")


def scalar(rng: random.Random, num: int = NUM_BOUND, den: int = DEN_BOUND) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def nonzero(rng: random.Random, num: int = NUM_BOUND, den: int = DEN_BOUND) -> Fraction:
    while True:
        x = scalar(rng, num, den)
        if x:
            return x


def point(rng: random.Random, num: int = NUM_BOUND, den: int = DEN_BOUND) -> Vec2:
    return Vec2(scalar(rng, num, den), scalar(rng, num, den))


def triangle(rng: random.Random, num: int = NUM_BOUND, den: int = DEN_BOUND) -> Triangle:
    while True:
        T = Triangle(point(rng, num, den), point(rng, num, den), point(rng, num, den))
        if well_shaped(T):
            return T


def well_shaped(T: Triangle) -> bool:
    longest = max((q - p).norm2() for p, q in ((T.A, T.B), (T.B, T.C), (T.C, T.A)))
    return T.orientation() != 0 and abs(T.orientation()) >= MIN_SHAPE * longest


def orthologic_partner(rng: random.Random, T: Triangle, num: int = NUM_BOUND) -> Triangle:
    """Random nondegenerate T' with ``b . c' = b' . c``.

    ``b'`` is free; ``c'`` is the solution of the linear condition plus a
    random multiple of ``perp(b)``.
    """
    P = T.pair()
    while True:
        bp = point(rng, num)
        k = bp.dot(P.c)
        cp = P.b * (k / P.b.dot(P.b)) + perp(P.b) * scalar(rng, 10, 10)
        A = point(rng, num)
        Tp = Triangle(A, A + bp, A + cp)
        if not Tp.is_degenerate():
            return Tp


def orthologic_family(rng: random.Random, num: int = NUM_BOUND) -> LinearFamily:
    """Nonsingular family with two degenerate members whose bases are orthologic."""
    while True:
        T0 = triangle(rng, num)
        T1 = orthologic_partner(rng, T0, num)
        F = LinearFamily(T0, T1)
        if is_singular(F):
            continue
        rs = degenerate_parameters(F)
        if rs.is_all or len(rs.roots) != 2:
            continue
        return F


def graph_family(rng: random.Random, count: int = 3, num: int = 20):
    """``count`` triangles whose pairs lie on the graph of one random symmetric operator."""
    p, q, r = scalar(rng, num, 5), scalar(rng, num, 5), scalar(rng, num, 5)
    out = []
    while len(out) < count:
        b = point(rng, num, 5)
        c = Vec2(p * b.x + q * b.y, q * b.x + r * b.y)
        A = point(rng, num)
        T = Triangle(A, A + b, A + c)
        if not T.is_degenerate():
            out.append(T)
    return out


def random_family(rng: random.Random, num: int = NUM_BOUND) -> LinearFamily:
    return LinearFamily(triangle(rng, num), triangle(rng, num))


def degenerate_family(rng: random.Random, num: int = NUM_BOUND) -> LinearFamily:
    """Both bases degenerate with the same ratio ``AC / AB``: every member is degenerate."""
    k = nonzero(rng, 10, 5)
    out = []
    for _ in range(2):
        A, b = point(rng, num), point(rng, num)
        out.append(Triangle(A, A + b, A + b * k))
    return LinearFamily(*out)


def bc_singular_family(rng: random.Random, num: int = NUM_BOUND) -> LinearFamily:
    """Family whose side ``B_tC_t`` keeps its direction."""
    T0 = triangle(rng, num)
    while True:
        A1, B1 = point(rng, num), point(rng, num)
        C1 = B1 + (T0.C - T0.B) * nonzero(rng, 10, 5)
        T1 = Triangle(A1, B1, C1)
        if not T1.is_degenerate():
            return LinearFamily(T0, T1)


def perspective_orthologic_pair(rng: random.Random, num: int = NUM_BOUND):
    """``(T, T', P)`` with T' = images of the vertices under per-vertex homotheties about P.

    The orthology condition is linear in the three ratios, so the third
    ratio is solved for.
    """
    while True:
        T = triangle(rng, num)
        P = point(rng, num)
        al, be = nonzero(rng, 5, 5), nonzero(rng, 5, 5)
        # equal ratios force a homothetic pair, whose perspective axis is at infinity
        if al == 1 or be == 1 or al == be:
            continue
        A = P + (T.A - P) * al
        B = P + (T.B - P) * be
        b = T.B - T.A
        c = T.C - T.A
        # b . (P + g (C - P) - A) = (B - A) . c
        coef = b.dot(T.C - P)
        if coef == 0:
            continue
        g = ((B - A).dot(c) - b.dot(P - A)) / coef
        C = P + (T.C - P) * g
        Tp = Triangle(A, B, C)
        if g in (0, 1) or Tp.is_degenerate():
            continue
        return T, Tp, P


def flies_on_altitudes(rng: random.Random, num: int = NUM_BOUND) -> LinearFamily:
    """Family from R to a triangle whose vertices lie on the altitudes of R."""
    while True:
        R = triangle(rng, num)
        A, B, C = R
        T1 = Triangle(
            A + perp(C - B) * nonzero(rng, 5, 5),
            B + perp(A - C) * nonzero(rng, 5, 5),
            C + perp(B - A) * nonzero(rng, 5, 5),
        )
        F = LinearFamily(R, T1)
        if T1.is_degenerate() or is_singular(F):
            continue
        rs = degenerate_parameters(F)
        if rs.is_all or len(rs.roots) != 2:
            continue
        return F


def _circle_point(u: Fraction, center: Vec2, r: Fraction) -> Vec2:
    d = 1 + u * u
    return center + Vec2(r * (1 - u * u) / d, r * 2 * u / d)


def rational_incircle_triangle(rng: random.Random):
    """``(R, I, r)``: triangle with rational vertices, incenter and side lengths."""
    while True:
        I = point(rng, 20, 4)
        r = Fraction(rng.randint(1, 20), rng.randint(1, 4))
        us = sorted({scalar(rng, 20, 7) for _ in range(3)})
        if len(us) < 3:
            continue
        K = [_circle_point(u, I, r) for u in us]
        # I must lie strictly inside the contact triangle
        signs = [(K[(i + 1) % 3] - K[i]).cross(I - K[i]) for i in range(3)]
        if not (all(s > 0 for s in signs) or all(s < 0 for s in signs)):
            continue
        tangents = [Line(k.x - I.x, k.y - I.y, -((k - I).dot(k))) for k in K]
        A = intersect(tangents[1], tangents[2]).to_point()
        B = intersect(tangents[2], tangents[0]).to_point()
        C = intersect(tangents[0], tangents[1]).to_point()
        R = Triangle(A, B, C)
        if max(abs(v) for p in R for v in p) > 400:
            continue
        return R, I, r


def collinear_with_circumcenter(rng: random.Random, R: Triangle, P0: Vec2) -> Vec2:
    O = circumcenter(R)
    while True:
        s = scalar(rng, 10, 5)
        P1 = O + (P0 - O) * s
        if P1 != P0:
            return P1


def nonsingular_pair(rng: random.Random, num: int = NUM_BOUND):
    """``(A0, A1, B0, B1)`` with nonparallel velocities and no collision direction."""
    while True:
        A0, A1, B0, B1 = (point(rng, num) for _ in range(4))
        va, vb = A1 - A0, B1 - B0
        if va.cross(vb) == 0 or (B0 - A0).cross(vb - va) == 0:
            continue
        return A0, A1, B0, B1

