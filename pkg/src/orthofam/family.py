"""Triangles, their translation and homothety classes, and linear families."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    EqualClasses,
    EqualParameters,
    ParallelVelocities,
    SingularPair,
    ZeroCoordinates,
)
from .numeric import (
    INF,
    HPoint,
    RootSet,
    Vec2,
    as_scalar,
    cross,
    eq,
    is_inexact,
    is_zero,
    parallel,
    solve_quadratic,
    vanishes,
    vec,
)


class VectorPair(NamedTuple):
    """A triangle up to translation: ``(b, c) = (AB, AC)``."""

    b: Vec2
    c: Vec2

    def __add__(self, o):
        return VectorPair(self.b + o.b, self.c + o.c)

    def __sub__(self, o):
        return VectorPair(self.b - o.b, self.c - o.c)

    def __mul__(self, k):
        return VectorPair(self.b * k, self.c * k)

    __rmul__ = __mul__

    def __neg__(self):
        return VectorPair(-self.b, -self.c)

    def is_degenerate(self, tol=None) -> bool:
        return parallel(self.b, self.c, tol)

    def is_zero(self, tol=None) -> bool:
        return self.b.is_zero(tol) and self.c.is_zero(tol)

    def coords(self) -> tuple:
        return (self.b.x, self.b.y, self.c.x, self.c.y)


class Triangle(NamedTuple):
    """Ordered vertex triple; collinear triples are legal (degenerate triangles)."""

    A: Vec2
    B: Vec2
    C: Vec2

    @staticmethod
    def of(*pts) -> "Triangle":
        if len(pts) == 1:
            pts = pts[0]
        return Triangle(*(p if isinstance(p, Vec2) else vec(*p) for p in pts))

    def pair(self) -> VectorPair:
        return VectorPair(self.B - self.A, self.C - self.A)

    def is_degenerate(self, tol=None) -> bool:
        return self.pair().is_degenerate(tol)

    def orientation(self):
        """Twice the signed area."""
        return cross(self.B - self.A, self.C - self.A)

    def translated(self, v: Vec2) -> "Triangle":
        return Triangle(self.A + v, self.B + v, self.C + v)

    def homothety(self, center: Vec2, k) -> "Triangle":
        return Triangle(*(center + (p - center) * k for p in self))

    def map(self, fn) -> "Triangle":
        return Triangle(fn(self.A), fn(self.B), fn(self.C))


def as_pair(x) -> VectorPair:
    if isinstance(x, Triangle):
        return x.pair()
    if isinstance(x, HomothetClass):
        return x.rep
    if isinstance(x, VectorPair):
        return x
    raise TypeError(f"expected a triangle or a vector pair, got {type(x).__name__}")


@dataclass(frozen=True, eq=False)
class HomothetClass:
    """Triangle up to translation and homothety, i.e. a point of RP^3."""

    rep: VectorPair

    def __post_init__(self):
        if self.rep.is_zero():
            raise ValueError("the zero pair has no homothety class")

    def coords(self) -> tuple:
        return self.rep.coords()

    def __eq__(self, other):
        if not isinstance(other, HomothetClass):
            return NotImplemented
        return proportional(self.coords(), other.coords())

    __hash__ = None

    def is_degenerate(self, tol=None) -> bool:
        return self.rep.is_degenerate(tol)


def proportional(u, v, tol=None) -> bool:
    """All 2x2 minors of the pair of vectors vanish."""
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if not eq(u[i] * v[j], u[j] * v[i], tol):
                return False
    return True


def homothet_class(x) -> HomothetClass:
    return x if isinstance(x, HomothetClass) else HomothetClass(as_pair(x))


class LinearFamily(NamedTuple):
    """Triangles ``T_t`` with vertices ``X_t = (1-t) X_0 + t X_1``."""

    T0: Triangle
    T1: Triangle

    def velocities(self) -> tuple[Vec2, Vec2, Vec2]:
        return tuple(p1 - p0 for p0, p1 in zip(self.T0, self.T1))

    def at(self, t):
        return triangle_at(self, t)

    def pair_at(self, t) -> VectorPair:
        if t is INF:
            return self.T1.pair() - self.T0.pair()
        p0, p1 = self.T0.pair(), self.T1.pair()
        return p0 + (p1 - p0) * t

    def point_at(self, index: int, t) -> Vec2:
        p0, p1 = self.T0[index], self.T1[index]
        return p0 + (p1 - p0) * t

    def trajectories(self):
        """Lines a, b, c along which the vertices move."""
        from .numeric import Line

        return tuple(Line.through(p0, p1) for p0, p1 in zip(self.T0, self.T1))


def triangle_at(F: LinearFamily, t):
    """Member ``T_t``; at ``t = INF`` only the vector pair of the triangle at infinity exists."""
    if t is INF:
        return F.pair_at(INF)
    t = as_scalar(t)
    return Triangle(*(p0 + (p1 - p0) * t for p0, p1 in zip(F.T0, F.T1)))


_PAIRS = (("AB", 0, 1), ("BC", 1, 2), ("CA", 2, 0))


def is_pair_singular(X0: Vec2, X1: Vec2, Y0: Vec2, Y1: Vec2, tol=None) -> bool:
    """The joining vector ``X_tY_t`` keeps its direction (or collapses)."""
    return parallel(Y0 - X0, (Y1 - Y0) - (X1 - X0), tol)


def is_singular(F: LinearFamily, tol=None) -> tuple[str, ...]:
    """Labels of the singular vertex pairs; an empty tuple means the family is nonsingular."""
    out = []
    for label, i, j in _PAIRS:
        if is_pair_singular(F.T0[i], F.T1[i], F.T0[j], F.T1[j], tol):
            out.append(label)
    return tuple(out)


def degeneracy_polynomial(F: LinearFamily, tol=None) -> tuple:
    """Coefficients ``(a, b, c)`` of ``cross(b_t, c_t) = a t^2 + b t + c``.

    Float coefficients whose constituent terms cancel within tolerance are
    snapped to zero so the root finder sees the exact degree.
    """
    p0 = F.T0.pair()
    d = F.T1.pair() - p0
    b0, c0, db, dc = p0.b, p0.c, d.b, d.c
    a_terms = (db.x * dc.y, -(db.y * dc.x))
    b_terms = (b0.x * dc.y, -(b0.y * dc.x), db.x * c0.y, -(db.y * c0.x))
    c_terms = (b0.x * c0.y, -(b0.y * c0.x))
    out = []
    for terms in (a_terms, b_terms, c_terms):
        s = sum(terms[1:], terms[0])
        if is_inexact(*terms) and vanishes(*terms, tol=tol):
            s = 0.0
        out.append(s)
    return tuple(out)


def degenerate_parameters(F: LinearFamily, tol=None) -> RootSet:
    """Parameters of the degenerate members, including ``INF`` for a degenerate triangle at infinity.

    Returns ``all`` for degenerate families.  Otherwise at most two roots
    are reported.
    """
    a, b, c = degeneracy_polynomial(F, tol)
    rs = solve_quadratic(a, b, c, tol)
    if rs.kind == "none" and is_zero(a, tol) and is_zero(b, tol):
        # cross(b_t, c_t) is a nonzero constant: only T_inf can degenerate
        if not F.pair_at(INF).is_zero(tol):
            return RootSet("one", (INF,))
    return rs


def reparametrize(F: LinearFamily, lam, mu) -> LinearFamily:
    """Same triangles with ``T_lam`` at parameter 0 and ``T_mu`` at parameter 1.

    ``mu = INF`` keeps the unit step of the old parameter (new base
    ``T_lam, T_{lam+1}``); ``lam`` must be finite.
    """
    if lam is INF:
        raise EqualParameters("the new origin must be a finite parameter")
    lam = as_scalar(lam)
    if mu is INF:
        return LinearFamily(triangle_at(F, lam), triangle_at(F, lam + 1))
    mu = as_scalar(mu)
    if eq(lam, mu):
        raise EqualParameters("reparametrization needs two distinct parameters")
    return LinearFamily(triangle_at(F, lam), triangle_at(F, mu))


def class_at(K0, K1, x0, x1) -> HomothetClass:
    """Class with representative ``(x0 b0 + x1 b1, x0 c0 + x1 c1)``."""
    x0, x1 = as_scalar(x0), as_scalar(x1)
    if is_zero(x0) and is_zero(x1):
        raise ZeroCoordinates("homogeneous coordinates (0, 0)")
    k0, k1 = homothet_class(K0), homothet_class(K1)
    if k0 == k1:
        raise EqualClasses("a family of classes needs two distinct classes")
    return HomothetClass(k0.rep * x0 + k1.rep * x1)


def family_of_classes(F: LinearFamily) -> tuple[HomothetClass, HomothetClass]:
    return homothet_class(F.T0), homothet_class(F.T1)


# --------------------------------------------------------------------------
# spiral centers


def _cmul(u: Vec2, v: Vec2) -> Vec2:
    return Vec2(u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x)


def _cdiv(u: Vec2, v: Vec2) -> Vec2:
    n = v.norm2()
    return Vec2((u.x * v.x + u.y * v.y) / n, (u.y * v.x - u.x * v.y) / n)


def spiral_center(A0, A1, B0, B1, tol=None) -> HPoint:
    """Center of the spiral similarity taking every ``A_sB_s`` to every ``A_tB_t``.

    With complex coordinates ``M = (A1 B0 - A0 B1) / (v_a - v_b)``.  When
    the velocities are parallel the lines ``A_tB_t`` are concurrent instead;
    :class:`ParallelVelocities` carries that common point (at infinity for
    equal velocities).
    """
    A0, A1, B0, B1 = (p if isinstance(p, Vec2) else HPoint.of(p).to_point() for p in (A0, A1, B0, B1))
    va, vb = A1 - A0, B1 - B0
    if (vb - va).is_zero(tol) and not (B0 - A0).is_zero(tol):
        raise ParallelVelocities(HPoint.at_infinity(B0 - A0))
    if is_pair_singular(A0, A1, B0, B1, tol):
        raise SingularPair("A_tB_t keeps its direction")
    m = _cdiv(_cmul(A1, B0) - _cmul(A0, B1), va - vb)
    point = HPoint.of(m)
    if not va.is_zero(tol) and not vb.is_zero(tol) and parallel(va, vb, tol):
        raise ParallelVelocities(point)
    return point


def affine_map(src: Triangle, dst: Triangle):
    """The affine map sending ``src`` vertices to ``dst`` vertices (``src`` nondegenerate)."""
    A, B, C = src
    u, v = B - A, C - A
    det = cross(u, v)
    A2, B2, C2 = dst
    u2, v2 = B2 - A2, C2 - A2

    def apply(p: Vec2) -> Vec2:
        w = p - A
        beta = cross(w, v) / det
        gamma = cross(u, w) / det
        return A2 + u2 * beta + v2 * gamma

    return apply
