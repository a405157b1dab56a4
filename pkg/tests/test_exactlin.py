import pytest
from hypothesis import given
from sympy.polys.domains import QQ, QQ_I

from pluripotential.core.exactlin import (
    Matrix, Subquotient, Subspace, conjugate_scalar, image, induced_subquotient_map, is_isomorphism, kernel, rank,
    rank_kernel_image, solve, subquotient_dim, to_scalar,
)
from pluripotential.core.exception import ContainmentError, InclusionError, ShapeError
from tests.strategies import invertible_matrices, matrices


class TestMatrix():

    def test_fraction_strings_are_reduced(self):
        assert to_scalar("3/6") == QQ(1, 2)
        assert to_scalar("-4") == QQ(-4)

    def test_zero_entries_are_not_stored(self):
        assert Matrix.from_rows([[0, 1]]) == Matrix(1, 2, {0: {1: 1}})
        assert Matrix.zeros(2, 3).is_zero()

    def test_matmul_rejects_mismatched_shapes(self):
        with pytest.raises(ShapeError):
            Matrix.identity(2) @ Matrix.identity(3)

    def test_kron_index_is_left_major(self):
        a = Matrix.from_rows([[1], [2]])
        b = Matrix.from_rows([[1], [3]])
        assert a.kron(b) == Matrix.from_rows([[1], [3], [2], [6]])

    def test_gaussian_rank_through_realification(self):
        m = Matrix.from_rows([[(1, 0), (0, 1)], [(0, 1), (-1, 0)]], domain=QQ_I)
        assert m.realify().shape == (4, 4)
        assert rank(m) == 1

    def test_conjugate(self):
        assert conjugate_scalar(QQ_I(1, 2)) == QQ_I(1, -2)
        assert conjugate_scalar(3) == QQ_I(3, 0)
        m = Matrix.from_rows([[(1, 2), 0], [(0, -1), 5]], domain=QQ_I)
        assert m.conjugate() == Matrix.from_rows([[(1, -2), 0], [(0, 1), 5]], domain=QQ_I)
        assert Matrix.identity(2).conjugate() == Matrix.identity(2)

    @given(invertible_matrices(3))
    def test_inverse(self, m):
        assert m @ m.inverse() == Matrix.identity(3)


class TestRankKernelImage():

    def test_rank_of_dependent_rows(self):
        assert rank(Matrix.from_rows([[2, 4], [1, 2]])) == 1

    def test_identity_and_zero(self):
        assert rank(Matrix.identity(3)) == 3
        assert rank(Matrix.zeros(3, 2)) == 0
        assert kernel(Matrix.zeros(3, 2)).dim == 2
        assert image(Matrix.zeros(3, 2)).dim == 0

    @given(matrices())
    def test_kernel_is_annihilated(self, m):
        for vector in kernel(m).basis:
            assert not any(m.apply(vector))

    @given(matrices())
    def test_rank_of_transpose(self, m):
        assert rank(m) == rank(m.transpose())

    @given(matrices())
    def test_rank_nullity(self, m):
        decomposition = rank_kernel_image(m)
        assert decomposition.rank + decomposition.kernel.dim == m.cols
        assert decomposition.image.dim == decomposition.rank

    def test_solve(self):
        m = Matrix.from_rows([[1, 1], [0, 1]])
        assert m.apply(solve(m, (3, 1))) == (QQ(3), QQ(1))
        assert solve(Matrix.from_rows([[1], [1]]), (1, 2)) is None


class TestSubspace():

    def test_span_is_canonical(self):
        assert Subspace.span([(1, 2), (3, 4)], 2) == Subspace.full(2)
        assert Subspace.span([(2, 2)], 2) == Subspace.span([(-1, -1)], 2)

    def test_intersection(self):
        first = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
        second = Subspace.span([(0, 1, 0), (0, 0, 1)], 3)
        assert first.intersection(second) == Subspace.span([(0, 1, 0)], 3)

    @given(invertible_matrices(3))
    def test_subquotient_dim_ignores_spanning_sets(self, m):
        numerator = Subspace.span(m.columns(), 3)
        denominator = Subspace.span([m.column(0)], 3)
        assert subquotient_dim(numerator, denominator) == 2


class TestSubquotient():

    def test_denominator_must_lie_in_numerator(self):
        with pytest.raises(ContainmentError):
            Subquotient.of(Subspace.zero(2), Subspace.span([(1, 0)], 2))

    def test_identity_induces_identity(self):
        data = (Subspace.full(2), Subspace.span([(1, 1)], 2))
        assert induced_subquotient_map(Matrix.identity(2), data, data) == Matrix.identity(1)

    def test_zero_induces_zero(self):
        data = (Subspace.full(3), Subspace.zero(3))
        assert induced_subquotient_map(Matrix.zeros(3, 3), data, data) == Matrix.zeros(3, 3)

    def test_quotient_projection(self):
        source = (Subspace.full(2), Subspace.span([(1, 1)], 2))
        target = (Subspace.full(1), Subspace.zero(1))
        induced = induced_subquotient_map(Matrix.from_rows([[1, -1]]), source, target)
        assert induced.shape == (1, 1)
        assert is_isomorphism(induced)

    def test_denominator_escaping_is_reported(self):
        source = (Subspace.full(2), Subspace.span([(1, 1)], 2))
        target = (Subspace.full(1), Subspace.zero(1))
        with pytest.raises(InclusionError) as e:
            induced_subquotient_map(Matrix.from_rows([[1, 0]]), source, target)
        assert e.value.which == "denominator"

    def test_functoriality(self):
        a = (Subspace.full(2), Subspace.span([(1, 1)], 2))
        b = (Subspace.full(1), Subspace.zero(1))
        f = Matrix.from_rows([[1, -1]])
        g = Matrix.from_rows([[3]])
        assert induced_subquotient_map(g @ f, a, b) == induced_subquotient_map(g, b, b) @ induced_subquotient_map(f, a, b)
