"""Classes of triangles as vectors of R^4 = R^2 x R^2: the operator phi and the skew form."""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import NotABasis, WrongDimension
from .family import HomothetClass, LinearFamily, VectorPair, as_pair
from .numeric import (
    Vec2,
    as_scalar,
    eq,
    is_inexact,
    is_zero,
    nullspace,
    row_reduce,
    solve_quadratic,
    vanishes,
)


class LinOp2(NamedTuple):
    """2x2 matrix ``[[m11, m12], [m21, m22]]`` acting on column vectors."""

    m11: object
    m12: object
    m21: object
    m22: object

    def __call__(self, v: Vec2) -> Vec2:
        return Vec2(self.m11 * v.x + self.m12 * v.y, self.m21 * v.x + self.m22 * v.y)

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self):
        return self.m11 + self.m22

    def transpose(self) -> "LinOp2":
        return LinOp2(self.m11, self.m21, self.m12, self.m22)

    def graph_basis(self) -> tuple["Vec4", "Vec4"]:
        """Basis of ``{(v, phi v)}``."""
        one = Fraction(1) if not is_inexact(*self) else 1.0
        zero = one - one
        e1, e2 = Vec2(one, zero), Vec2(zero, one)
        return Vec4.of(VectorPair(e1, self(e1))), Vec4.of(VectorPair(e2, self(e2)))


class Vec4(NamedTuple):
    """``(b.x, b.y, c.x, c.y)``; the degeneracy quadric is ``x1 x4 - x2 x3 = 0``."""

    x1: object
    x2: object
    x3: object
    x4: object

    @staticmethod
    def of(x) -> "Vec4":
        if isinstance(x, Vec4):
            return x
        if isinstance(x, (tuple, list)) and len(x) == 4 and not isinstance(x, VectorPair):
            return Vec4(*(as_scalar(v) for v in x))
        return Vec4(*as_pair(x).coords())

    def pair(self) -> VectorPair:
        return VectorPair(Vec2(self.x1, self.x2), Vec2(self.x3, self.x4))

    def is_degenerate(self, tol=None) -> bool:
        return eq(self.x1 * self.x4, self.x2 * self.x3, tol)

    def __add__(self, o):
        return Vec4(*(a + b for a, b in zip(self, o)))

    def __sub__(self, o):
        return Vec4(*(a - b for a, b in zip(self, o)))

    def __mul__(self, k):
        return Vec4(*(a * k for a in self))

    __rmul__ = __mul__


class Subspace4:
    """Linear subspace of R^4 stored by its reduced row echelon basis (canonical)."""

    __slots__ = ("basis", "_tol")

    def __init__(self, vectors, tol=None):
        rows = [list(Vec4.of(v)) for v in vectors]
        red, _ = row_reduce(rows, tol) if rows else ([], [])
        if not red:
            raise ValueError("a subspace needs at least one nonzero vector")
        self.basis = tuple(Vec4(*r) for r in red)
        self._tol = tol

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v, tol=None) -> bool:
        rows = [list(b) for b in self.basis] + [list(Vec4.of(v))]
        return len(row_reduce(rows, tol)[0]) == self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace4):
            return NotImplemented
        if other.dim != self.dim:
            return False
        return all(self.contains(v, self._tol) for v in other.basis)

    __hash__ = None

    def __repr__(self):
        return f"Subspace4({list(self.basis)!r})"


def operator_from_classes(K0, K1, tol=None) -> LinOp2:
    """The unique ``phi`` with ``phi(b_t) = c_t`` for both classes."""
    P0, P1 = (K.rep if isinstance(K, HomothetClass) else as_pair(K) for K in (K0, K1))
    b0, b1, c0, c1 = P0.b, P1.b, P0.c, P1.c
    det = b0.x * b1.y - b1.x * b0.y
    if is_zero(det, tol) or eq(b0.x * b1.y, b1.x * b0.y, tol):
        raise NotABasis("b0 and b1 are dependent")
    if eq(c0.x * c1.y, c1.x * c0.y, tol):
        raise NotABasis("c0 and c1 are dependent")
    # phi = [c0 c1] [b0 b1]^-1
    inv = ((b1.y / det, -b1.x / det), (-b0.y / det, b0.x / det))
    return LinOp2(
        c0.x * inv[0][0] + c1.x * inv[1][0],
        c0.x * inv[0][1] + c1.x * inv[1][1],
        c0.y * inv[0][0] + c1.y * inv[1][0],
        c0.y * inv[0][1] + c1.y * inv[1][1],
    )


def operator_from_family(F: LinearFamily, tol=None) -> LinOp2:
    return operator_from_classes(F.T0, F.T1, tol)


def is_self_adjoint(phi: LinOp2, tol=None) -> bool:
    return eq(phi.m12, phi.m21, tol)


class EigenPair(NamedTuple):
    value: object
    vector: Vec2


def _eigenvector(phi: LinOp2, lam, tol=None) -> Vec2:
    a, b = phi.m11 - lam, phi.m12
    c, d = phi.m21, phi.m22 - lam
    # kernel of [[a, b], [c, d]]: pick the larger row
    if is_inexact(a, b, c, d):
        use_first = abs(a) + abs(b) >= abs(c) + abs(d)
    else:
        use_first = not (a == 0 and b == 0)
    x, y = (a, b) if use_first else (c, d)
    v = Vec2(-y, x)
    k = v.x if not is_zero(v.x, tol) else v.y
    return Vec2(v.x / k, v.y / k)


def eigenpairs(phi: LinOp2, tol=None):
    """Real eigenpairs; ``"all"`` when ``phi`` is a homothety."""
    phi = LinOp2(*(as_scalar(v) for v in phi))
    if is_zero(phi.m12, tol) and is_zero(phi.m21, tol) and eq(phi.m11, phi.m22, tol):
        return "all"
    one = 1.0 if is_inexact(*phi) else Fraction(1)
    rs = solve_quadratic(one, -phi.trace(), phi.det(), tol)
    return [EigenPair(lam, _eigenvector(phi, lam, tol)) for lam in rs.roots]


def skew_product(u, v):
    """``b_u . c_v - b_v . c_u``."""
    u, v = Vec4.of(u), Vec4.of(v)
    return u.x1 * v.x3 + u.x2 * v.x4 - v.x1 * u.x3 - v.x2 * u.x4


def _skew_row(u: Vec4) -> list:
    # coefficients of v in skew_product(u, v)
    return [-u.x3, -u.x4, u.x1, u.x2]


def skew_complement(U: Subspace4, tol=None) -> Subspace4:
    rows = [_skew_row(b) for b in U.basis]
    return Subspace4(nullspace(rows, 4, tol), tol)


def is_lagrangian(U: Subspace4, tol=None) -> bool:
    if U.dim != 2:
        raise WrongDimension(f"Lagrangian test needs a plane, got dimension {U.dim}")
    u, v = U.basis
    return is_zero(skew_product(u, v), tol)


def family_plane(F: LinearFamily, tol=None) -> Subspace4:
    return Subspace4([Vec4.of(F.T0), Vec4.of(F.T1)], tol)


def intersection_dim(U: Subspace4, V: Subspace4, tol=None) -> int:
    rows = [list(b) for b in U.basis] + [list(b) for b in V.basis]
    return U.dim + V.dim - len(row_reduce(rows, tol)[0])


def eigen_class(phi: LinOp2, pair: EigenPair) -> Vec4:
    """Degenerate class ``(e, lam e)`` attached to an eigenpair."""
    e = pair.vector
    return Vec4.of(VectorPair(e, e * pair.value))


def eigenvectors_orthogonal(phi: LinOp2, tol=None) -> bool:
    pairs = eigenpairs(phi, tol)
    if pairs == "all" or len(pairs) < 2:
        return True
    e1, e2 = pairs[0].vector, pairs[1].vector
    return vanishes(e1.x * e2.x, e1.y * e2.y, tol=tol)

