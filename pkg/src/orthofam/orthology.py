"""The orthology relation, its centers, and how centers move along linear families."""
from __future__ import annotations

from typing import NamedTuple

from .conics import Conic, conic_through_5, fit_conic
from .errors import (
    DegenerateAtInfinity,
    DegenerateConfiguration,
    DegenerateInput,
    DegenerateTarget,
    GeometryError,
    NonConcurrent,
    NoSuchPoint,
    NotDefined,
    NotOrthologic,
)
from .family import LinearFamily, Triangle, as_pair, degenerate_parameters, triangle_at
from .numeric import (
    INF,
    HPoint,
    Line,
    Vec2,
    as_scalar,
    concurrent,
    eq,
    intersect,
    is_inexact,
    is_zero,
    perp,
    rotate_back,
    same_point,
    vanishes,
)

DEFAULT_SAMPLES = (0, 1, -1, 2, "1/2", 3, -2, "1/3", "3/2", -3, 4, "-1/2")


class MoebiusMap(NamedTuple):
    """``lam -> (p lam + q) / (r lam + s)`` on the projective line of parameters."""

    p: object
    q: object
    r: object
    s: object

    def __call__(self, lam):
        if lam is INF:
            return INF if is_zero(self.r) else self.p / self.r
        lam = as_scalar(lam)
        den = self.r * lam + self.s
        if is_zero(den):
            return INF
        return (self.p * lam + self.q) / den

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """``self o other``."""
        p, q, r, s = self
        P, Q, R, S = other
        return MoebiusMap(p * P + q * R, p * Q + q * S, r * P + s * R, r * Q + s * S)

    def inverse(self) -> "MoebiusMap":
        p, q, r, s = self
        return MoebiusMap(s, -q, -r, p)

    def determinant(self):
        return self.p * self.s - self.q * self.r

    def pole(self):
        """Parameter sent to infinity."""
        return INF if is_zero(self.r) else -self.s / self.r

    def normalized(self) -> "MoebiusMap":
        for k in self:
            if not is_zero(k):
                return MoebiusMap(*(v / k for v in self))
        return self


# --------------------------------------------------------------------------
# the relation


def carnot_sum(T: Triangle, Tp: Triangle):
    """``A'B^2 - A'C^2 + B'C^2 - B'A^2 + C'A^2 - C'B^2``; zero exactly for orthologic pairs."""

    def d2(p, q):
        v = p - q
        return v.dot(v)

    A, B, C = T
    A1, B1, C1 = Tp
    return d2(A1, B) - d2(A1, C) + d2(B1, C) - d2(B1, A) + d2(C1, A) - d2(C1, B)


def orthology_form(P, Pp):
    """``b . c' - b' . c`` for the two vector pairs."""
    P, Pp = as_pair(P), as_pair(Pp)
    return P.b.dot(Pp.c) - Pp.b.dot(P.c)


def is_orthologic(P, Pp, tol=None) -> bool:
    P, Pp = as_pair(P), as_pair(Pp)
    return eq(P.b.dot(Pp.c), Pp.b.dot(P.c), tol)


def _side_lines(T: Triangle) -> tuple[Line, Line, Line]:
    """Lines B'C', C'A', A'B' opposite to A', B', C'."""
    A, B, C = T
    return Line.through(B, C), Line.through(C, A), Line.through(A, B)


def _meet_of_three(lines, tol, error):
    if not concurrent(*lines, tol=tol):
        raise error
    return intersect(lines[0], lines[1], tol).normalized()


def orthology_center(T: Triangle, Tp: Triangle, tol=None) -> HPoint:
    """Common point of the perpendiculars from A, B, C to B'C', C'A', A'B'."""
    if Tp.is_degenerate(tol):
        if T.is_degenerate(tol):
            raise NotDefined("orthology center of two degenerate triangles")
        raise DegenerateTarget("the second triangle is degenerate")
    sides = _side_lines(Tp)
    lines = [Line.through_direction(v, s.normal()) for v, s in zip(T, sides)]
    return _meet_of_three(lines, tol, NotOrthologic("perpendiculars are not concurrent"))


def harmonic_lines(T: Triangle, Tp: Triangle) -> list[Line]:
    return [Line.through_direction(v, s.direction()) for v, s in zip(T, _side_lines(Tp))]


def is_harmonic(T: Triangle, Tp: Triangle, tol=None) -> bool:
    """Parallels through A, B, C to B'C', C'A', A'B' are concurrent."""
    if T.is_degenerate(tol) or Tp.is_degenerate(tol):
        raise DegenerateInput("harmonicity needs two nondegenerate triangles")
    return concurrent(*harmonic_lines(T, Tp), tol=tol)


def harmonic_center(T: Triangle, Tp: Triangle, tol=None) -> HPoint:
    if T.is_degenerate(tol) or Tp.is_degenerate(tol):
        raise DegenerateInput("harmonicity needs two nondegenerate triangles")
    return _meet_of_three(harmonic_lines(T, Tp), tol, NoSuchPoint("parallels are not concurrent"))


def alpha_lines(T: Triangle, Tp: Triangle, alpha: Vec2) -> list[Line]:
    """Lines through A, B, C making the oriented angle ``alpha`` with B'C', C'A', A'B'.

    The angle from a line ``l`` to a line ``m`` is the rotation carrying
    ``l`` onto ``m``, so the line through A has direction ``R_{-alpha}(B'C')``.
    """
    return [Line.through_direction(v, rotate_back(s.direction(), alpha)) for v, s in zip(T, _side_lines(Tp))]


def alpha_orthology_center(T: Triangle, Tp: Triangle, alpha, tol=None) -> HPoint:
    """Point P with angle(AP, B'C') = angle(BP, C'A') = angle(CP, A'B') = alpha.

    ``alpha`` is a direction pair ``(cos-like, sin-like)``; ``(0, 1)`` gives
    ordinary orthology and ``(1, 0)`` harmonicity.
    """
    alpha = Vec2(as_scalar(alpha[0]), as_scalar(alpha[1]))
    if alpha.is_zero():
        raise ValueError("alpha direction must be nonzero")
    if Tp.is_degenerate(tol):
        raise DegenerateTarget("the second triangle is degenerate")
    return _meet_of_three(alpha_lines(T, Tp, alpha), tol, NoSuchPoint("no point with the given angles"))


def barycentric(p: Vec2, T: Triangle) -> tuple:
    A, B, C = T
    area = (B - A).cross(C - A)
    return ((B - p).cross(C - p) / area, (C - p).cross(A - p) / area, (A - p).cross(B - p) / area)


def rideau_check(T: Triangle, Tp: Triangle, tol=None) -> bool:
    """The affine map A,B,C -> A',B',C' sends the center O_{T,T'} to O_{T',T}."""
    if not is_orthologic(T, Tp, tol):
        raise NotOrthologic("Rideau's check needs an orthologic pair")
    if T.is_degenerate(tol) or Tp.is_degenerate(tol):
        raise DegenerateInput("both triangles must be nondegenerate")
    D = orthology_center(T, Tp, tol).to_point()
    Dp = orthology_center(Tp, T, tol).to_point()
    al, be, ga = barycentric(D, T)
    image = Tp.A * al + Tp.B * be + Tp.C * ga
    return same_point(image, Dp, tol)


# --------------------------------------------------------------------------
# families


def is_orthologic_family(F: LinearFamily, tol=None) -> bool:
    return is_orthologic(F.T0, F.T1, tol)


def center_line(F: LinearFamily, Tp: Triangle, tol=None):
    """Trajectory of O_{T_t, T'}: a line, or a single point when it does not move."""
    if not (is_orthologic(F.T0, Tp, tol) and is_orthologic(F.T1, Tp, tol)):
        raise NotOrthologic("both base triangles must be orthologic to T'")
    o0 = orthology_center(F.T0, Tp, tol)
    o1 = orthology_center(F.T1, Tp, tol)
    if same_point(o0, o1, tol):
        return o0
    return Line.through(o0, o1)


def _sample_params(samples):
    return [as_scalar(s) for s in samples]


def center_conic(Tp: Triangle, F: LinearFamily, samples=DEFAULT_SAMPLES, tol=None) -> Conic:
    """Conic carrying O_{T', T_t}, fitted through five sampled centers.

    Degenerate members are skipped.  A sixth center and the vertices of T'
    are checked for incidence before the conic is returned.
    """
    if not (is_orthologic(F.T0, Tp, tol) and is_orthologic(F.T1, Tp, tol)):
        raise NotOrthologic("the family is not orthologic to T'")
    if is_inexact(*F.T0.A):
        samples = [float(s) for s in _sample_params(samples)]
    centers = []
    for t in _sample_params(samples) if not is_inexact(*F.T0.A) else samples:
        Tt = triangle_at(F, t)
        if Tt.is_degenerate(tol):
            continue
        c = orthology_center(Tp, Tt, tol)
        if any(same_point(c, o, tol) for o in centers):
            continue
        centers.append(c)
        if len(centers) == 6:
            break
    if len(centers) < 6:
        raise DegenerateConfiguration("not enough distinct centers to fit and check a conic")
    try:
        conic = conic_through_5(*centers[:5], tol=tol)
    except DegenerateConfiguration:
        conic = fit_conic(list(centers) + list(Tp), tol=tol)
    for p in [centers[5], *Tp]:
        if not conic.contains(p, tol):
            raise GeometryError("center conic failed its incidence check")
    return conic


def perspector(T: Triangle, Tp: Triangle, tol=None) -> HPoint:
    """Common point of AA', BB', CC'."""
    lines = [Line.through(p, q) for p, q in zip(T, Tp)]
    return _meet_of_three(lines, tol, NonConcurrent("AA', BB', CC' are not concurrent"))


def is_perspective(T: Triangle, Tp: Triangle, tol=None) -> bool:
    lines = [Line.through(p, q) for p, q in zip(T, Tp)]
    return concurrent(*lines, tol=tol)


def desargues_axis(T: Triangle, Tp: Triangle, tol=None) -> Line:
    """Line through the intersections of corresponding side lines."""
    pts = [intersect(l, m, tol) for l, m in zip(_side_lines(T), _side_lines(Tp))]
    for i in range(3):
        for j in range(i + 1, 3):
            if not same_point(pts[i], pts[j], tol):
                return Line.through(pts[i], pts[j])
    raise GeometryError("the side intersections coincide")


def family_is_concurrent(F: LinearFamily, tol=None) -> bool:
    return concurrent(*F.trajectories(), tol=tol)


def _two_finite_degenerates(F: LinearFamily, tol=None):
    rs = degenerate_parameters(F, tol)
    if rs.is_all or len(rs.roots) != 2:
        raise GeometryError("the family must have exactly two degenerate members")
    if INF in rs.roots:
        raise DegenerateAtInfinity("one degenerate member is the triangle at infinity")
    return rs.roots


def _carrier(F: LinearFamily, t) -> Vec2:
    P = F.pair_at(t)
    return P.b if not P.b.is_zero() else P.c


def common_center_correspondence(F: LinearFamily, tol=None) -> MoebiusMap:
    """Map lam -> mu with O = O_{T_lam, T_mu} = O_{T_mu, T_lam} at the meet of the degenerate lines.

    Works in the frame whose axes are the carrier lines x (of ``T_{t_x}``)
    and y (of ``T_{t_y}``) and whose parameter puts the member on y at 0 and
    the one on x at 1; there ``mu = (1 - lam) / (1 - lam (k_a + 1))`` with
    ``k_a = x_a (x_c - x_b) / (y_a (y_c - y_b))``.  The result is expressed in
    the family's own parameter.
    """
    t_y, t_x = _two_finite_degenerates(F, tol)
    if not family_is_concurrent(F, tol):
        raise NonConcurrent("vertex trajectories are not concurrent")
    Tx, Ty = triangle_at(F, t_x), triangle_at(F, t_y)
    ex, ey = _carrier(F, t_x), _carrier(F, t_y)
    x_line = Line.through_direction(Tx.A, ex)
    y_line = Line.through_direction(Ty.A, ey)
    O = intersect(x_line, y_line, tol).to_point()
    # metric coordinates scaled by |e|; the ratio below restores unit axes
    xs = [(p - O).dot(ex) for p in Tx]
    ys = [(p - O).dot(ey) for p in Ty]
    gx, gy = ex.dot(ex), ey.dot(ey)

    # k_i = num_i / den_i is the same for every vertex; a vertex at O gives 0/0
    fracs = [
        (xs[i] * (xs[l] - xs[j]) * gy, ys[i] * (ys[l] - ys[j]) * gx)
        for i, j, l in ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    ]
    usable = [(n, d) for n, d in fracs if not is_zero(d, tol)]
    if not usable:
        raise NonConcurrent("no vertex determines the correspondence")
    ka = usable[0][0] / usable[0][1]
    if not all(eq(n, ka * d, tol) for n, d in fracs):
        raise NonConcurrent("k_a, k_b, k_c differ")
    one = ka - ka + 1
    in_frame = MoebiusMap(-one, one, -(ka + 1), one)
    to_frame = MoebiusMap(one, -t_y, one - one, t_x - t_y)
    return to_frame.inverse().compose(in_frame).compose(to_frame).normalized()


def common_center_point(F: LinearFamily, tol=None) -> Vec2:
    """Meet O of the two degenerate carrier lines."""
    t_y, t_x = _two_finite_degenerates(F, tol)
    Tx, Ty = triangle_at(F, t_x), triangle_at(F, t_y)
    x_line = Line.through_direction(Tx.A, _carrier(F, t_x))
    y_line = Line.through_direction(Ty.A, _carrier(F, t_y))
    return intersect(x_line, y_line, tol).to_point()


def unique_h(F: LinearFamily, tol=None):
    """Parameter h with A_hB_h perp c, B_hC_h perp a, C_hA_h perp b (possibly INF).

    When h is finite the common point of the trajectories is the orthocenter
    of ``T_h``.
    """
    if not family_is_concurrent(F, tol):
        raise NonConcurrent("vertex trajectories are not concurrent")
    va, vb, vc = F.velocities()
    P0 = F.T0
    d = F.T1
    # side vectors opposite to each trajectory: AB vs c, BC vs a, CA vs b
    conds = []
    for (i, j), v in (((0, 1), vc), ((1, 2), va), ((2, 0), vb)):
        s0 = P0[j] - P0[i]
        ds = (d[j] - d[i]) - s0
        conds.append((s0.dot(v), ds.dot(v), (s0.x * v.x, s0.y * v.y), (ds.x * v.x, ds.y * v.y)))
    h = INF
    for c0, c1, _, terms1 in conds:
        if not vanishes(*terms1, tol=tol):
            h = -c0 / c1
            break
    for c0, c1, terms0, terms1 in conds:
        ok = vanishes(*terms1, tol=tol) if h is INF else vanishes(c0, c1 * h, tol=tol)
        if not ok:
            raise GeometryError("no parameter satisfies all three perpendicularities")
    return h


def orthocenter_of(T: Triangle, tol=None) -> HPoint:
    return orthology_center(T, T, tol)


def rotate_triangle(T: Triangle, cs, center: Vec2 | None = None) -> Triangle:
    """Rotate by the angle with direction ``cs`` about ``center`` (default: the first vertex)."""
    from .numeric import rotate

    cs = Vec2(as_scalar(cs[0]), as_scalar(cs[1]))
    n2 = cs.dot(cs)
    if center is None:
        center = T.A
    return T.map(lambda p: center + rotate(p - center, cs) / _sqrt_norm(n2))


def _sqrt_norm(n2):
    from .numeric import sqrt_exact

    return sqrt_exact(n2)


def rotate90(T: Triangle) -> Triangle:
    return T.map(perp)
