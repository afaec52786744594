import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import families, points, rationals, tri
from orthofam.errors import NotABasis, WrongDimension
from orthofam.family import LinearFamily, VectorPair, degenerate_parameters, is_singular, triangle_at
from orthofam.harness import generators as gen
from orthofam.numeric import INF, QuadExt, Vec2, cross, parallel
from orthofam.operator4 import (
    EigenPair,
    LinOp2,
    Subspace4,
    Vec4,
    eigen_class,
    eigenpairs,
    eigenvectors_orthogonal,
    family_plane,
    intersection_dim,
    is_lagrangian,
    is_self_adjoint,
    operator_from_classes,
    operator_from_family,
    skew_complement,
    skew_product,
)
from orthofam.orthology import is_orthologic_family, rotate_triangle


def v(x, y):
    return Vec2(F(x), F(y))


def op(*m):
    return LinOp2(*(F(x) for x in m))


def v4(*x):
    return Vec4(*(F(c) for c in x))


SWAP = op(0, 1, 1, 0)


class TestOperator:
    def test_worked_family(self, fstar):
        phi = operator_from_family(fstar)
        assert phi == SWAP
        assert phi(v(1, 0)) == v(0, 1)

    def test_rotated_family_gives_a_similarity(self):
        T = tri((0, 0), (3, 1), (1, 4))
        phi = operator_from_family(LinearFamily(T, rotate_triangle(T, v(F(3, 5), F(4, 5)), v(2, -1))))
        assert phi.m11 == phi.m22 and phi.m12 == -phi.m21

    def test_dependent_c_vectors(self):
        # c0 = c1 while b0, b1 are independent
        with pytest.raises(NotABasis):
            operator_from_family(LinearFamily(tri((0, 0), (1, 0), (1, 1)), tri((0, 0), (0, 1), (1, 1))))

    def test_dependent_b_vectors(self):
        with pytest.raises(NotABasis):
            operator_from_family(LinearFamily(tri((0, 0), (1, 0), (0, 1)), tri((0, 0), (2, 0), (1, 1))))

    @given(families)
    def test_graph_contains_both_classes(self, Fm):
        try:
            phi = operator_from_family(Fm)
        except NotABasis:
            return
        for T in (Fm.T0, Fm.T1):
            P = T.pair()
            assert phi(P.b) == P.c


class TestSelfAdjoint:
    def test_examples(self):
        assert is_self_adjoint(SWAP)
        assert not is_self_adjoint(op(0, -1, 1, 0))
        assert is_self_adjoint(op(1, 0, 0, 1))

    @given(families)
    def test_matches_orthologic_family_and_lagrangian_plane(self, Fm):
        try:
            phi = operator_from_family(Fm)
        except NotABasis:
            return
        want = is_orthologic_family(Fm)
        assert is_self_adjoint(phi) == want
        assert is_lagrangian(family_plane(Fm)) == want

    @pytest.mark.parametrize("seed", range(10))
    def test_orthologic_families_are_self_adjoint(self, seed):
        Fm = gen.orthologic_family(random.Random(seed))
        phi = operator_from_family(Fm)
        assert is_self_adjoint(phi)
        assert eigenvectors_orthogonal(phi)


class TestEigenpairs:
    def test_swap(self):
        assert eigenpairs(SWAP) == [EigenPair(-1, v(1, -1)), EigenPair(1, v(1, 1))]

    def test_homothety(self):
        assert eigenpairs(op(2, 0, 0, 2)) == "all"

    def test_shear(self):
        assert eigenpairs(op(1, 1, 0, 1)) == [EigenPair(1, v(1, 0))]

    def test_rotation_has_none(self):
        assert eigenpairs(op(0, -1, 1, 0)) == []

    def test_irrational_eigenvalues_stay_exact(self):
        phi = op(1, 1, 1, 0)
        pairs = eigenpairs(phi)
        assert len(pairs) == 2
        for lam, e in pairs:
            assert isinstance(lam, QuadExt)
            assert phi(e) == e * lam

    def test_float_backend(self):
        pairs = eigenpairs(LinOp2(0.0, 1.0, 1.0, 0.0), 1e-9)
        assert [round(p.value, 12) for p in pairs] == [-1.0, 1.0]

    @given(rationals, rationals, rationals)
    def test_symmetric_matrices_have_orthogonal_eigenbases(self, a, b, d):
        phi = LinOp2(a, b, b, d)
        pairs = eigenpairs(phi)
        if pairs == "all":
            return
        assert len(pairs) == 2
        e1, e2 = pairs[0].vector, pairs[1].vector
        assert e1.dot(e2) == 0
        for lam, e in pairs:
            assert phi(e) == e * lam

    def test_eigen_classes_of_the_worked_family_are_its_degenerate_members(self, fstar):
        phi = operator_from_family(fstar)
        classes = {Vec4.of(triangle_at(fstar, t)) for t in degenerate_parameters(fstar).roots}
        got = [eigen_class(phi, p) for p in eigenpairs(phi)]
        assert all(c.is_degenerate() for c in got)
        # the degenerate members are (1/2,1/2,1/2,1/2) and (-1,1,1,-1)
        for c in got:
            assert any(Subspace4([c]) == Subspace4([k]) for k in classes)

    @given(families)
    def test_eigenvectors_match_degenerate_parameters(self, Fm):
        try:
            phi = operator_from_family(Fm)
        except NotABasis:
            return
        pairs = eigenpairs(phi)
        rs = degenerate_parameters(Fm)
        if pairs == "all":
            assert rs.is_all
            return
        assert len(pairs) == len(rs.roots)
        for t in rs.roots:
            P = triangle_at(Fm, t) if t is not INF else triangle_at(Fm, INF)
            P = P if isinstance(P, VectorPair) else P.pair()
            assert any(parallel(P.b, e) for _, e in pairs)

    @given(families)
    def test_unit_eigenvalue_iff_bc_singular(self, Fm):
        try:
            phi = operator_from_family(Fm)
        except NotABasis:
            return
        pairs = eigenpairs(phi)
        has_one = pairs == "all" and phi.m11 == 1 or pairs != "all" and any(p.value == 1 for p in pairs)
        assert has_one == ("BC" in is_singular(Fm))


class TestSkewForm:
    def test_examples(self):
        assert skew_product(v4(1, 0, 0, 1), v4(0, 1, 1, 0)) == 0
        assert skew_product(v4(1, 0, 0, 0), v4(0, 0, 1, 0)) == 1

    @given(points, points)
    def test_alternating(self, b, c):
        u = Vec4.of(VectorPair(b, c))
        assert skew_product(u, u) == 0

    @given(points, points, points, points)
    def test_antisymmetric_and_carnot_form(self, b, c, b2, c2):
        u, w = Vec4.of(VectorPair(b, c)), Vec4.of(VectorPair(b2, c2))
        assert skew_product(u, w) == -skew_product(w, u)
        assert skew_product(u, w) == b.dot(c2) - b2.dot(c)

    def test_vec4_degeneracy_matches_triangle(self):
        T = tri((0, 0), (2, 1), (4, 2))
        assert Vec4.of(T).is_degenerate() and T.is_degenerate()
        assert not Vec4.of(tri((0, 0), (1, 0), (0, 1))).is_degenerate()


class TestSubspaces:
    def test_worked_plane_is_its_own_complement(self, fstar):
        U = Subspace4([v4(1, 0, 0, 1), v4(0, 1, 1, 0)])
        assert family_plane(fstar) == U
        assert skew_complement(U) == U
        assert is_lagrangian(U)

    def test_line_complement(self):
        e1 = v4(1, 0, 0, 0)
        W = skew_complement(Subspace4([e1]))
        assert W.dim == 3
        assert W.contains(e1)

    def test_non_lagrangian_plane(self):
        U = Subspace4([v4(1, 0, 0, 0), v4(0, 0, 1, 0)])
        assert not is_lagrangian(U)
        assert intersection_dim(U, skew_complement(U)) == 0

    def test_wrong_dimension(self):
        with pytest.raises(WrongDimension):
            is_lagrangian(Subspace4([v4(1, 0, 0, 0)]))

    def test_canonical_equality(self):
        assert Subspace4([v4(1, 1, 0, 0), v4(1, -1, 0, 0)]) == Subspace4([v4(1, 0, 0, 0), v4(0, 2, 0, 0)])
        assert Subspace4([v4(1, 0, 0, 0)]) != Subspace4([v4(0, 1, 0, 0)])

    @given(rationals, rationals, rationals)
    def test_graphs_of_self_adjoint_operators_are_lagrangian(self, a, b, d):
        phi = LinOp2(a, b, b, d)
        U = Subspace4(phi.graph_basis())
        assert is_lagrangian(U)
        assert skew_complement(U) == U

    @pytest.mark.parametrize("seed", range(10))
    def test_maximality(self, seed):
        rng = random.Random(seed)
        U = family_plane(gen.orthologic_family(rng))
        W = skew_complement(U)
        assert W.dim == 2 and W == U
        # anything skew-orthogonal to both base classes already lies in the plane
        w = W.basis[0] * gen.nonzero(rng) + W.basis[1] * gen.scalar(rng)
        assert U.contains(w)

    @given(points, points)
    def test_complement_dimension(self, b, c):
        u = Vec4.of(VectorPair(b, c))
        if all(x == 0 for x in u):
            return
        assert skew_complement(Subspace4([u])).dim == 3
        assert cross(b, b) == 0
