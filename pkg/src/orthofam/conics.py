"""Conics in point coordinates: fitting, classification, asymptotes, envelopes and foci."""
from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    DegenerateConfiguration,
    DegenerateDual,
    NoSolution,
    NotHyperbola,
    NotParabola,
    NotUnique,
    SingularPair,
)
from .numeric import (
    HPoint,
    Line,
    Vec2,
    collinear,
    cross,
    cross3,
    is_inexact,
    is_zero,
    nullspace,
    parallel,
    rank,
    sign,
    sqrt_exact,
    vanishes,
)


class ConicKind(str, Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    RECTANGULAR_HYPERBOLA = "rectangular_hyperbola"
    LINE_PAIR = "line_pair"
    OTHER_DEGENERATE = "other_degenerate"


class Conic(NamedTuple):
    """``a x^2 + b xy + c y^2 + d xw + e yw + f w^2 = 0``, up to scale."""

    a: object
    b: object
    c: object
    d: object
    e: object
    f: object

    def matrix(self) -> list[list]:
        a, b, c, d, e, f = self
        h = Fraction(1, 2) if not is_inexact(*self) else 0.5
        return [[a, b * h, d * h], [b * h, c, e * h], [d * h, e * h, f]]

    @staticmethod
    def from_matrix(m) -> "Conic":
        return Conic(m[0][0], 2 * m[0][1], m[1][1], 2 * m[0][2], 2 * m[1][2], m[2][2])

    def terms(self, p) -> tuple:
        x, y, w = HPoint.of(p)
        a, b, c, d, e, f = self
        return (a * x * x, b * x * y, c * y * y, d * x * w, e * y * w, f * w * w)

    def evaluate(self, p):
        return sum(self.terms(p)[1:], self.terms(p)[0])

    def contains(self, p, tol=None) -> bool:
        p = HPoint.of(p)
        C = self
        if is_inexact(*p, *self):
            p, C = p.normalized(), self.normalized()
        return vanishes(*C.terms(p), tol=tol)

    def normalized(self) -> "Conic":
        """Integer coefficients with gcd 1 (exact) or max-abs 1 (float); first nonzero positive."""
        if is_inexact(*self):
            vals = [float(v) for v in self]
            m = max(abs(v) for v in vals)
            if m == 0:
                return self
            lead = next(v for v in vals if abs(v) > 0)
            s = m if lead > 0 else -m
            return Conic(*(v / s for v in vals))
        if not all(isinstance(v, (int, Fraction)) for v in self):
            lead = next(v for v in self if v != 0)
            return Conic(*(v / lead for v in self))
        vals = [Fraction(v) for v in self]
        den = math.lcm(*(v.denominator for v in vals))
        ints = [int(v * den) for v in vals]
        g = math.gcd(*ints) or 1
        lead = next((v for v in ints if v != 0), 1)
        g = g if lead > 0 else -g
        return Conic(*(Fraction(v // g) for v in ints))

    def proportional(self, other: "Conic", tol=None) -> bool:
        u, v = self, other
        if is_inexact(*u, *v):
            u, v = u.normalized(), v.normalized()
        for i in range(6):
            for j in range(i + 1, 6):
                if not vanishes(u[i] * v[j], -(u[j] * v[i]), tol=tol):
                    return False
        return True

    def quadratic_part(self) -> tuple:
        return self.a, self.b, self.c

    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def restricted(self, l: Line) -> tuple:
        """Binary quadratic form of the conic on the line ``l`` in a basis of two of its points."""
        p, q = points_spanning(l)
        M = self.matrix()
        return _bilinear(M, p, p), _bilinear(M, p, q), _bilinear(M, q, q)


def _bilinear(M, p, q):
    return sum(p[i] * M[i][j] * q[j] for i in range(3) for j in range(3))


def points_spanning(l: Line) -> tuple[tuple, tuple]:
    """Two independent homogeneous points of ``l``."""
    vals = [abs(float(v)) for v in l]
    k = max(range(3), key=lambda i: vals[i])
    one = 1.0 if is_inexact(*l) else Fraction(1)
    zero = one - one
    basis = []
    for i in range(3):
        if i != k:
            e = [zero, zero, zero]
            e[i] = one
            basis.append(cross3(l, e))
    return basis[0], basis[1]


def _conic_row(p) -> list:
    x, y, w = HPoint.of(p)
    return [x * x, x * y, y * y, x * w, y * w, w * w]


def _four_collinear(points, tol=None) -> bool:
    n = len(points)
    for skip in range(n):
        rest = [p for i, p in enumerate(points) if i != skip]
        if all(collinear(rest[0], rest[1], r, tol) for r in rest[2:]) and not _has_repeat(rest, tol):
            return True
    return False


def _has_repeat(points, tol=None) -> bool:
    from .numeric import same_point

    return any(same_point(p, q, tol) for i, p in enumerate(points) for q in points[i + 1 :])


def conic_through_5(p1, p2, p3, p4, p5, tol=None) -> Conic:
    """Unique conic through five points; four collinear points leave a pencil."""
    pts = [p1, p2, p3, p4, p5]
    if _four_collinear(pts, tol):
        raise DegenerateConfiguration("four of the five points are collinear")
    return fit_conic(pts, tol)


def fit_conic(points, tol=None) -> Conic:
    """Conic through all ``points`` (at least five), unique up to scale."""
    rows = [_conic_row(p) for p in points]
    if is_inexact(*(v for r in rows for v in r)):
        rows = [_unit_row(r) for r in rows]
    return _fit_rows(rows, tol)


def _fit_rows(rows, tol) -> Conic:
    ns = nullspace(rows, 6, tol)
    if len(ns) != 1:
        raise DegenerateConfiguration(f"the points determine a {len(ns)}-dimensional family of conics")
    return Conic(*ns[0]).normalized()


def _unit_row(r):
    m = max(abs(float(v)) for v in r) or 1.0
    return [float(v) / m for v in r]


def adjugate(M) -> list[list]:
    """Classical adjoint of a 3x3 matrix."""

    def minor(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        return M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]

    return [[(-1) ** (i + j) * minor(j, i) for j in range(3)] for i in range(3)]


def _det3(M):
    from .numeric import det3

    return det3(M)


def _matrix_rank(M, tol=None) -> int:
    rows = M
    if any(is_inexact(*r) for r in M):
        m = max(abs(float(v)) for r in M for v in r) or 1.0
        rows = [[float(v) / m for v in r] for r in M]
    return rank(rows, tol)


def hyperbola_with_asymptote_dirs(d1: Vec2, d2: Vec2, p1, p2, p3, tol=None) -> Conic:
    """Conic through three points whose asymptotes are parallel to ``d1`` and ``d2``.

    The quadratic part is ``k cross(d1, v) cross(d2, v)``; the remaining
    coefficients are solved linearly.
    """
    if parallel(d1, d2, tol):
        raise NoSolution("asymptote directions must be independent")
    qa = d1.y * d2.y
    qb = -(d1.y * d2.x + d1.x * d2.y)
    qc = d1.x * d2.x
    rows = []
    for p in (p1, p2, p3):
        x, y, w = HPoint.of(p)
        rows.append([qa * x * x + qb * x * y + qc * y * y, x * w, y * w, w * w])
    if is_inexact(*(v for r in rows for v in r)):
        rows = [_unit_row(r) for r in rows]
    ns = nullspace(rows, 4, tol)
    if len(ns) != 1:
        raise NotUnique("the points do not fix the conic")
    k, d, e, f = ns[0]
    if is_zero(k, tol):
        raise NoSolution("only a line pair containing the line at infinity passes through the points")
    return Conic(k * qa, k * qb, k * qc, d, e, f).normalized()


def classify(C: Conic, tol=None) -> ConicKind:
    M = C.matrix()
    if is_inexact(*C):
        C = C.normalized()
        M = C.matrix()
    r = _matrix_rank(M, tol)
    a, b, c = C.a, C.b, C.c
    disc_zero = vanishes(b * b, -4 * a * c, tol=tol)
    disc_sign = 0 if disc_zero else sign(b * b - 4 * a * c)
    if r == 3:
        if disc_sign < 0:
            return ConicKind.ELLIPSE if sign(a * _det3(M)) < 0 else ConicKind.OTHER_DEGENERATE
        if disc_sign == 0:
            return ConicKind.PARABOLA
        if vanishes(a, c, tol=tol):
            return ConicKind.RECTANGULAR_HYPERBOLA
        return ConicKind.HYPERBOLA
    if r == 2:
        e2 = sum(M[i][i] * M[j][j] - M[i][j] * M[j][i] for i, j in ((0, 1), (0, 2), (1, 2)))
        if sign(e2, tol) < 0:
            return ConicKind.LINE_PAIR
    return ConicKind.OTHER_DEGENERATE


def has_perpendicular_asymptotes(C: Conic, tol=None) -> bool:
    """Trace of the quadratic part vanishes (orthogonal asymptotic directions)."""
    if is_inexact(*C):
        C = C.normalized()
    return vanishes(C.a, C.c, tol=tol) and not vanishes(C.b * C.b, -4 * C.a * C.c, tol=tol)


def is_rectangular(C: Conic, tol=None) -> bool:
    """Rectangular hyperbola or a pair of perpendicular lines."""
    kind = classify(C, tol)
    if kind is ConicKind.RECTANGULAR_HYPERBOLA:
        return True
    return kind is ConicKind.LINE_PAIR and has_perpendicular_asymptotes(C, tol)


def _first_unit(v: Vec2) -> Vec2:
    k = v.x if not is_zero(v.x) else v.y
    return Vec2(v.x / k, v.y / k)


def asymptote_directions(C: Conic, tol=None) -> tuple[Vec2, Vec2]:
    """Root directions of the quadratic part; requires a real pair (hyperbola or crossing lines)."""
    if is_inexact(*C):
        C = C.normalized()
    a, b, c = C.a, C.b, C.c
    if vanishes(b * b, -4 * a * c, tol=tol) or sign(b * b - 4 * a * c) < 0:
        raise NotHyperbola("the quadratic part has no two real root directions")
    D = b * b - 4 * a * c
    root = math.sqrt(D) if is_inexact(D) else sqrt_exact(D)
    if is_zero(a, tol):
        return _first_unit(Vec2(b - b + 1, a - a)), _first_unit(Vec2(-c, b))
    return (
        _first_unit(Vec2(-b + root, 2 * a)),
        _first_unit(Vec2(-b - root, 2 * a)),
    )


def is_tangent(l: Line, C: Conic, tol=None) -> bool:
    """The restriction of ``C`` to ``l`` has a double root."""
    if is_inexact(*l, *C):
        l = l.normalized()
        C = C.normalized()
    p, q = points_spanning(l)
    M = C.matrix()
    pp, pq, qq = _bilinear(M, p, p), _bilinear(M, p, q), _bilinear(M, q, q)
    return vanishes(pq * pq, -(pp * qq), tol=tol)


def conic_tangent_to_lines(lines, tol=None) -> Conic:
    """Point conic tangent to five (or more) lines, fitted as a dual conic and inverted."""
    rows = [_conic_row(HPoint(*l)) for l in lines]
    if is_inexact(*(v for r in rows for v in r)):
        rows = [_unit_row(r) for r in rows]
    ns = nullspace(rows, 6, tol)
    if len(ns) != 1:
        raise DegenerateDual("the lines do not determine a unique dual conic")
    dual = Conic(*ns[0])
    D = dual.matrix()
    if _matrix_rank(D, tol) < 3:
        raise DegenerateDual("the dual conic is degenerate (lines through a point)")
    return Conic.from_matrix(adjugate(D)).normalized()


def dual_matrix(C: Conic) -> list[list]:
    return adjugate(C.matrix())


def parabola_focus(C: Conic, tol=None) -> HPoint:
    """Focus of a nondegenerate parabola.

    With the dual matrix ``D`` (``D33 = 0`` for a parabola) the focus solves
    ``2 D13 x - 2 D23 y = D11 - D22`` and ``2 D23 x + 2 D13 y = 2 D12``.
    """
    if classify(C, tol) is not ConicKind.PARABOLA:
        raise NotParabola("conic is not a nondegenerate parabola")
    if is_inexact(*C):
        C = C.normalized()
    D = dual_matrix(C)
    A, B, H = D[0][0], D[1][1], D[0][1]
    G, F = D[0][2], D[1][2]
    det = 4 * (G * G + F * F)
    r1, r2 = A - B, 2 * H
    x = (2 * G * r1 + 2 * F * r2) / det
    y = (-2 * F * r1 + 2 * G * r2) / det
    return HPoint.of(Vec2(x, y))


def pencil_member_through(C1: Conic, C2: Conic, p) -> Conic:
    """Member ``s C1 + t C2`` of a pencil passing through ``p``."""
    v1, v2 = C1.evaluate(p), C2.evaluate(p)
    return Conic(*(v2 * x - v1 * y for x, y in zip(C1, C2)))


def intersect_line(C: Conic, l: Line, tol=None):
    """Real intersection points of ``l`` and ``C`` (exact results may use the quadratic extension)."""
    from .numeric import solve_quadratic

    p, q = points_spanning(l)
    M = C.matrix()
    pp, pq, qq = _bilinear(M, p, p), _bilinear(M, p, q), _bilinear(M, q, q)
    if is_zero(pp, tol):
        # p itself lies on C: the root at s = infinity
        if is_zero(pq, tol) and is_zero(qq, tol):
            raise DegenerateConfiguration("the line lies on the conic")
        if is_zero(pq, tol):
            return [HPoint(*p)]
        s = -qq / (2 * pq)
        return [HPoint(*p), HPoint(*(s * pi + qi for pi, qi in zip(p, q)))]
    # points s p + q
    rs = solve_quadratic(pp, 2 * pq, qq, tol)
    return [HPoint(*(s * pi + qi for pi, qi in zip(p, q))) for s in rs.roots]


# --------------------------------------------------------------------------
# family envelopes


def _pair_indices(pair) -> tuple[int, int]:
    if isinstance(pair, str):
        table = {"AB": (0, 1), "BC": (1, 2), "CA": (2, 0)}
        return table[pair.upper()]
    return tuple(pair)


def envelope_conic(F, pair="AB", samples=(0, 1, -1, 2, "1/2", 3, "-1/2", "1/3"), tol=None) -> Conic:
    """Conic enveloped by the lines ``X_tY_t`` of one vertex pair of a family."""
    from .family import is_pair_singular
    from .numeric import as_scalar, same_point

    i, j = _pair_indices(pair)
    X0, Y0, X1, Y1 = F.T0[i], F.T0[j], F.T1[i], F.T1[j]
    if is_pair_singular(X0, X1, Y0, Y1, tol):
        raise SingularPair("the joining line keeps its direction")
    inexact = is_inexact(*X0, *Y0, *X1, *Y1)
    lines = []
    for t in samples:
        t = float(as_scalar(t)) if inexact else as_scalar(t)
        X, Y = F.point_at(i, t), F.point_at(j, t)
        if same_point(X, Y, tol):
            continue
        lines.append(Line.through(X, Y))
    if len(lines) < 6:
        raise DegenerateDual("not enough sample lines")
    C = conic_tangent_to_lines(lines[:5], tol)
    if not is_tangent(lines[5], C, tol):
        raise DegenerateDual("sixth sampled line is not tangent to the fitted conic")
    return C


def degenerate_carriers(F, tol=None):
    """``(parameter, direction)`` for the two degenerate members; ``INF`` members use ``v_b - v_a``."""
    from .family import degenerate_parameters

    rs = degenerate_parameters(F, tol)
    if rs.is_all or len(rs.roots) != 2:
        raise DegenerateConfiguration("the family needs exactly two degenerate members")
    out = []
    for t in rs.roots:
        P = F.pair_at(t)
        out.append((t, P.b if not P.b.is_zero(tol) else P.c))
    return out


def carrier_line(F, t, tol=None) -> Line:
    """Line containing the degenerate member ``T_t`` (the line at infinity for ``t = INF``)."""
    from .family import triangle_at
    from .numeric import INF

    P = F.pair_at(t)
    d = P.b if not P.b.is_zero(tol) else P.c
    if t is INF:
        return Line.at_infinity(not is_inexact(*d))
    return Line.through_direction(triangle_at(F, t).A, d)


def gamma_hyperbola(F, lam, tol=None) -> Conic:
    """``gamma_lambda``: through the vertices of ``T_lam`` with asymptotes along the carrier lines."""
    from .family import triangle_at

    (_, d1), (_, d2) = degenerate_carriers(F, tol)
    T = triangle_at(F, lam)
    return hyperbola_with_asymptote_dirs(d1, d2, T.A, T.B, T.C, tol)


def epsilon_envelope(F, tol=None) -> Conic:
    """``epsilon``: the conic tangent to the trajectories a, b, c and to both carrier lines."""
    (t1, _), (t2, _) = degenerate_carriers(F, tol)
    lines = list(F.trajectories()) + [carrier_line(F, t1, tol), carrier_line(F, t2, tol)]
    return conic_tangent_to_lines(lines, tol)
