"""Scalar backends, tolerance policy and projective primitives of the plane.

Two backends share one set of functions.  Exact values are ``Fraction``
instances, or :class:`QuadExt` when a square root of a non-square rational
is needed.  Float values switch every equality test to the relative policy

    |a - b| <= tol * max(1, |a|, |b|)

with a single tolerance (``DEFAULT_TOL`` unless a ``tol`` is passed).
Nothing here keeps global state; all values are immutable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import CoincidentLines, IncompatibleFields, InfinitePoint

DEFAULT_TOL = 1e-9

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, math.isqrt(p) + 1))]


# --------------------------------------------------------------------------
# scalars


def as_scalar(x):
    """Lift ints and decimal strings to ``Fraction``; floats and extensions pass through."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    return x


def is_inexact(*values) -> bool:
    return any(isinstance(v, float) for v in values)


def to_float(x) -> float:
    return float(x)


def vanishes(*terms, tol=None) -> bool:
    """Decide whether ``sum(terms) == 0``.

    Exact terms are summed exactly.  Float terms are compared against the
    largest term magnitude, which for two terms ``a, -b`` is the
    ``|a-b| <= tol*max(1,|a|,|b|)`` policy.
    """
    if any(isinstance(t, float) for t in terms):
        tol = DEFAULT_TOL if tol is None else tol
        fl = [float(t) for t in terms]
        return abs(math.fsum(fl)) <= tol * max(1.0, max(abs(t) for t in fl))
    total = 0
    for t in terms:
        total = total + t
    return total == 0


def eq(a, b, tol=None) -> bool:
    return vanishes(a, -b, tol=tol)


def is_zero(x, tol=None) -> bool:
    return vanishes(x, tol=tol)


def sign(x, tol=None) -> int:
    if isinstance(x, float):
        if is_zero(x, tol):
            return 0
        return 1 if x > 0 else -1
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def _square_root_rational(q: Fraction):
    """Exact square root of a nonnegative rational, or None when irrational."""
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _squarefree_part(n: int) -> tuple[int, int]:
    """Write ``n = k*k*m`` removing square factors of small primes; returns ``(k, m)``."""
    k, m = 1, n
    for p in _SMALL_PRIMES:
        pp = p * p
        if pp > m:
            break
        while m % pp == 0:
            m //= pp
            k *= p
    r = math.isqrt(m)
    if r * r == m:
        return k * r, 1
    return k, m


class QuadExt:
    """Exact number ``a + b*sqrt(d)`` with rational ``a, b`` and integer ``d > 1``.

    Instances always have ``b != 0``; arithmetic that cancels the radical
    returns a plain ``Fraction``.  Values with different radicands combine
    only when the radicands differ by a rational square factor.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @staticmethod
    def make(a, b, d):
        a, b, d = Fraction(a), Fraction(b), Fraction(d)
        if d < 0:
            raise ValueError("negative radicand")
        if b == 0 or d == 0:
            return a
        # sqrt(p/q) = sqrt(p*q) / q
        b = b / d.denominator
        n = d.numerator * d.denominator
        k, m = _squarefree_part(n)
        b *= k
        if m == 1:
            return a + b
        return QuadExt(a, b, m)

    # field alignment ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d == self.d:
                return other.a, other.b
            r = _square_root_rational(Fraction(other.d, self.d))
            if r is None:
                raise IncompatibleFields(f"sqrt({self.d}) and sqrt({other.d}) generate different fields")
            return other.a, other.b * r
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        if isinstance(other, float):
            return float(self) + other
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt.make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, float):
            return float(self) - other
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt.make(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, float):
            return float(self) * other
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a2, b2 = c
        return QuadExt.make(self.a * a2 + self.b * b2 * self.d, self.a * b2 + self.b * a2, self.d)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        if isinstance(other, float):
            return float(self) / other
        if isinstance(other, QuadExt):
            self._coerce(other)
            return self * other.conjugate() / other.norm()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadExt.make(self.a / other, self.b / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, float):
            return other / float(self)
        if isinstance(other, (int, Fraction)):
            return Fraction(other) * self.conjugate() / self.norm()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** -n)
        out = Fraction(1)
        for _ in range(n):
            out = out * self
        return out

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger magnitude wins; equality is impossible
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            try:
                a2, b2 = self._coerce(other)
            except IncompatibleFields:
                return False
            return self.a == a2 and self.b == b2
        if isinstance(other, (int, Fraction)):
            return False
        if isinstance(other, float):
            return float(self) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        diff = self - other
        return sign(diff)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        coef = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        surd = f"{coef}sqrt({self.d})"
        if self.a == 0:
            return surd if self.b > 0 else f"-{surd}"
        return f"{self.a} {'+' if self.b > 0 else '-'} {surd}"


def sqrt_exact(x):
    """Square root staying inside the exact backend where possible."""
    if isinstance(x, float):
        return math.sqrt(x)
    if isinstance(x, QuadExt):
        raise IncompatibleFields("square root of a quadratic-extension value is not supported")
    x = Fraction(x)
    if x < 0:
        raise ValueError("square root of a negative number")
    r = _square_root_rational(x)
    if r is not None:
        return r
    return QuadExt.make(0, 1, x)


def scalar_str(x) -> str:
    """Stable text form for reports: ``p/q`` for rationals, ``a + b*sqrt(d)`` for extensions."""
    if isinstance(x, float):
        return repr(x)
    return str(x)


class _Infinity:
    """The parameter value at infinity (the triangle at infinity of a family)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


# --------------------------------------------------------------------------
# vectors and projective objects


class Vec2(NamedTuple):
    x: object
    y: object

    def __add__(self, o):
        return Vec2(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return Vec2(self.x - o.x, self.y - o.y)

    def __mul__(self, k):
        return Vec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return Vec2(self.x / k, self.y / k)

    def __neg__(self):
        return Vec2(-self.x, -self.y)

    def dot(self, o):
        return self.x * o.x + self.y * o.y

    def cross(self, o):
        return self.x * o.y - self.y * o.x

    def perp(self):
        return Vec2(-self.y, self.x)

    def norm2(self):
        return self.x * self.x + self.y * self.y

    def is_zero(self, tol=None) -> bool:
        return is_zero(self.x, tol) and is_zero(self.y, tol)


def vec(x, y) -> Vec2:
    return Vec2(as_scalar(x), as_scalar(y))


def dot(u: Vec2, v: Vec2):
    return u.x * v.x + u.y * v.y


def cross(u: Vec2, v: Vec2):
    return u.x * v.y - u.y * v.x


def perp(v: Vec2) -> Vec2:
    """Rotation by +90 degrees."""
    return Vec2(-v.y, v.x)


def parallel(u: Vec2, v: Vec2, tol=None) -> bool:
    return eq(u.x * v.y, u.y * v.x, tol)


def orthogonal(u: Vec2, v: Vec2, tol=None) -> bool:
    return vanishes(u.x * v.x, u.y * v.y, tol=tol)


def rotate(v: Vec2, cs: Vec2) -> Vec2:
    """Rotate ``v`` by the angle whose (cos, sin) direction is ``cs`` (scaled by ``|cs|``)."""
    c, s = cs
    return Vec2(c * v.x - s * v.y, s * v.x + c * v.y)


def rotate_back(v: Vec2, cs: Vec2) -> Vec2:
    c, s = cs
    return Vec2(c * v.x + s * v.y, -s * v.x + c * v.y)


class HPoint(NamedTuple):
    """Homogeneous point; ``w == 0`` is a point at infinity (a direction)."""

    x: object
    y: object
    w: object

    @staticmethod
    def of(p) -> "HPoint":
        if isinstance(p, HPoint):
            return p
        x, y = as_scalar(p[0]), as_scalar(p[1])
        return HPoint(x, y, Fraction(1) if not is_inexact(x, y) else 1.0)

    @staticmethod
    def at_infinity(direction: Vec2) -> "HPoint":
        zero = 0.0 if is_inexact(*direction) else Fraction(0)
        return HPoint(direction.x, direction.y, zero)

    def is_finite(self, tol=None) -> bool:
        if isinstance(self.w, float) or is_inexact(self.x, self.y):
            n = self.normalized()
            return not is_zero(n.w, tol)
        return self.w != 0

    def to_point(self, tol=None) -> Vec2:
        if not self.is_finite(tol):
            raise InfinitePoint(f"{self} lies at infinity")
        return Vec2(self.x / self.w, self.y / self.w)

    def normalized(self) -> "HPoint":
        """Canonical representative: ``w = 1`` for finite exact points, unit max-norm for floats."""
        if is_inexact(self.x, self.y, self.w):
            m = max(abs(float(self.x)), abs(float(self.y)), abs(float(self.w)))
            if m == 0:
                return self
            return HPoint(float(self.x) / m, float(self.y) / m, float(self.w) / m)
        for k in (self.w, self.x, self.y):
            if k != 0:
                return HPoint(self.x / k, self.y / k, self.w / k)
        return self

    def direction(self) -> Vec2:
        return Vec2(self.x, self.y)


def _hom(p) -> HPoint:
    return HPoint.of(p)


def cross3(u, v) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _cross3_vanishes(u, v, tol=None) -> bool:
    return (
        vanishes(u[1] * v[2], -(u[2] * v[1]), tol=tol)
        and vanishes(u[2] * v[0], -(u[0] * v[2]), tol=tol)
        and vanishes(u[0] * v[1], -(u[1] * v[0]), tol=tol)
    )


def same_point(p, q, tol=None) -> bool:
    """Projective equality of two points (finite or not)."""
    p, q = _hom(p), _hom(q)
    if is_inexact(*p, *q):
        p, q = p.normalized(), q.normalized()
    return _cross3_vanishes(p, q, tol)


class Line(NamedTuple):
    """The locus ``a*x + b*y + c*w = 0``."""

    a: object
    b: object
    c: object

    @staticmethod
    def through(p, q) -> "Line":
        l = Line(*cross3(_hom(p), _hom(q)))
        if all(v == 0 for v in l):
            raise CoincidentLines("points coincide; the joining line is undefined")
        return l

    @staticmethod
    def through_direction(p, d: Vec2) -> "Line":
        """Line through the finite point ``p`` with direction ``d``."""
        p = _hom(p).to_point()
        n = perp(d)
        return Line(n.x, n.y, -(n.x * p.x + n.y * p.y))

    @staticmethod
    def at_infinity(exact: bool = True) -> "Line":
        if exact:
            return Line(Fraction(0), Fraction(0), Fraction(1))
        return Line(0.0, 0.0, 1.0)

    def normal(self) -> Vec2:
        return Vec2(self.a, self.b)

    def direction(self) -> Vec2:
        return Vec2(-self.b, self.a)

    def contains(self, p, tol=None) -> bool:
        p = _hom(p)
        if is_inexact(*p, *self):
            p = p.normalized()
            l = self.normalized()
        else:
            l = self
        return vanishes(l.a * p.x, l.b * p.y, l.c * p.w, tol=tol)

    def normalized(self) -> "Line":
        if is_inexact(*self):
            m = max(abs(float(v)) for v in self)
            return Line(*(float(v) / m for v in self)) if m else self
        for k in self:
            if k != 0:
                return Line(*(v / k for v in self))
        return self

    def is_infinite(self, tol=None) -> bool:
        n = self.normalized()
        return is_zero(n.a, tol) and is_zero(n.b, tol)


def same_line(l1: Line, l2: Line, tol=None) -> bool:
    if is_inexact(*l1, *l2):
        l1, l2 = l1.normalized(), l2.normalized()
    return _cross3_vanishes(l1, l2, tol)


def intersect(l1: Line, l2: Line, tol=None) -> HPoint:
    """Meet of two lines; parallel lines meet at infinity."""
    if is_inexact(*l1, *l2):
        l1, l2 = l1.normalized(), l2.normalized()
    if _cross3_vanishes(l1, l2, tol):
        raise CoincidentLines("lines coincide")
    return HPoint(*cross3(l1, l2))


def perpendicular_from(p, l: Line, tol=None) -> Line:
    """Line through the finite point ``p`` perpendicular to ``l``."""
    hp = _hom(p)
    if not hp.is_finite(tol):
        raise InfinitePoint("perpendicular from a point at infinity")
    return Line.through_direction(hp.to_point(), l.normal())


def parallel_through(p, l: Line) -> Line:
    return Line.through_direction(p, l.direction())


def det3_terms(rows) -> tuple[list, object]:
    (a, b, c), (d, e, f), (g, h, i) = rows
    terms = [a * e * i, b * f * g, c * d * h, -(c * e * g), -(a * f * h), -(b * d * i)]
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return terms, total


def det3(rows):
    return det3_terms(rows)[1]


def det3_vanishes(rows, tol=None) -> bool:
    rows = [tuple(r) for r in rows]
    if any(is_inexact(*r) for r in rows):
        norm = []
        for r in rows:
            m = max(abs(float(v)) for v in r) or 1.0
            norm.append(tuple(float(v) / m for v in r))
        rows = norm
    terms, _ = det3_terms(rows)
    return vanishes(*terms, tol=tol)


def concurrent(l1: Line, l2: Line, l3: Line, tol=None) -> bool:
    """Three lines through one (possibly infinite) point."""
    return det3_vanishes([l1, l2, l3], tol)


def collinear(p, q, r, tol=None) -> bool:
    return det3_vanishes([_hom(p), _hom(q), _hom(r)], tol)


# --------------------------------------------------------------------------
# quadratic roots


@dataclass(frozen=True)
class RootSet:
    """Roots of ``a t^2 + b t + c``.

    ``kind`` is one of ``all``, ``none``, ``one``, ``two`` or
    ``one_plus_infinity``; ``roots`` lists the finite roots in increasing
    order followed by ``INF`` when the root at infinity is present.
    """

    kind: str
    roots: tuple = ()

    @property
    def is_all(self) -> bool:
        return self.kind == "all"

    @property
    def finite(self) -> tuple:
        return tuple(r for r in self.roots if r is not INF)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def solve_quadratic(a, b, c, tol=None) -> RootSet:
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    if is_zero(a, tol):
        if is_zero(b, tol):
            return RootSet("all") if is_zero(c, tol) else RootSet("none")
        return RootSet("one_plus_infinity", (-c / b, INF))
    disc = b * b - 4 * a * c
    if is_inexact(a, b, c):
        if vanishes(b * b, -4 * a * c, tol=tol):
            return RootSet("one", (-b / (2 * a),))
        if disc < 0:
            return RootSet("none")
        r = math.sqrt(disc)
        # stable form avoids cancellation in -b +- r
        q = -0.5 * (b + math.copysign(r, b))
        roots = sorted((q / a, c / q)) if q != 0 else [0.0, 0.0]
        return RootSet("two", tuple(roots))
    if sign(disc) < 0:
        return RootSet("none")
    if disc == 0:
        return RootSet("one", (-b / (2 * a),))
    root = sqrt_exact(disc)
    r1 = (-b - root) / (2 * a)
    r2 = (-b + root) / (2 * a)
    return RootSet("two", tuple(sorted((r1, r2))))


# --------------------------------------------------------------------------
# small dense linear algebra over either backend


def row_reduce(rows: Sequence[Sequence], tol=None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns ``(rows, pivot_columns)`` with zero rows dropped."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    inexact = any(is_inexact(*r) for r in m)
    if inexact:
        m = [[float(v) for v in r] for r in m]
        scale = max((abs(v) for r in m for v in r), default=0.0) or 1.0
        tol = DEFAULT_TOL if tol is None else tol
    else:
        m = [[as_scalar(v) for v in r] for r in m]
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= len(m):
            break
        if inexact:
            best = max(range(row, len(m)), key=lambda i: abs(m[i][col]))
            if abs(m[best][col]) <= tol * scale:
                continue
            piv = best
        else:
            piv = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
            if piv is None:
                continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [v / pv for v in m[row]]
        for i in range(len(m)):
            if i != row:
                f = m[i][col]
                if (f != 0) if not inexact else (f != 0.0):
                    m[i] = [vi - f * vr for vi, vr in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    return m[:row], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None, tol=None) -> list[list]:
    """Basis of ``{x : rows @ x = 0}``."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_reduce(rows, tol)
    inexact = any(is_inexact(*r) for r in rows)
    one = 1.0 if inexact else Fraction(1)
    zero = 0.0 if inexact else Fraction(0)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in zip(red, pivots):
            v[pc] = -r[f]
        basis.append(v)
    return basis


def rank(rows: Sequence[Sequence], tol=None) -> int:
    return len(row_reduce(rows, tol)[1])
