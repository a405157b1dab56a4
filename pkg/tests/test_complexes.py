import pytest
from hypothesis import given

from pluripotential.core.cohomology import bott_chern, total_cohomology
from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, CochainComplex, braiding, chain_morphism_space, compose, devectorize, direct_sum,
    internal_hom, morphism_space, shift, tensor, totalize, transpose, truncate_third_quadrant, truncation_inclusion, validate,
)
from pluripotential.core.exactlin import Matrix
from pluripotential.core.exception import ShapeError
from pluripotential.core.inflation import ele
from tests.strategies import bicomplexes, cochain_complexes

UNIT = Bicomplex.point()


def all_positive_square() -> Bicomplex:
    one = Matrix.identity(1)
    return Bicomplex({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1},
                     {(0, 0): one, (0, 1): one}, {(0, 0): one, (1, 0): one})


class TestValidate():

    def test_staircase_is_valid(self):
        assert validate(ele(2)).is_valid

    def test_point_is_valid(self):
        assert validate(UNIT).is_valid

    def test_all_positive_square_fails_at_the_corner(self):
        report = validate(all_positive_square())
        assert not report.is_valid
        assert len(report.defects) == 1
        defect = report.defects[0]
        assert defect.location == (0, 0)
        assert defect.relation == "∂∂̄+∂̄∂"
        assert defect.matrix == Matrix.identity(1).scale(2)

    def test_block_shapes_are_checked(self):
        with pytest.raises(ShapeError):
            Bicomplex({(0, 0): 1, (1, 0): 2}, {(0, 0): Matrix.identity(1)})

    def test_non_commuting_map(self):
        square = Bicomplex.square((0, 0))
        f = BicomplexMorphism(square, square, {(0, 0): Matrix.identity(1)})
        assert not validate(f).is_valid
        assert validate(BicomplexMorphism.identity(square)).is_valid


class TestTensor():

    @given(bicomplexes())
    def test_unit_on_both_sides(self, a):
        assert tensor(a, UNIT) == a
        assert tensor(UNIT, a) == a

    def test_points(self):
        assert tensor(Bicomplex.point((1, 2)), Bicomplex.point((3, -1))) == Bicomplex.point((4, 1))

    def test_staircase_square(self):
        product = tensor(ele(-1), ele(-1))
        assert product.total_dim == 9
        assert product.dims == direct_sum([ele(-2), Bicomplex.square((-2, -2))]).dims

    @given(bicomplexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_output_is_valid(self, a, b):
        assert validate(tensor(a, b)).is_valid

    @given(cochain_complexes(), cochain_complexes())
    def test_cochain_output_is_valid(self, c, d):
        assert validate(tensor(c, d)).is_valid

    @given(bicomplexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_braiding_is_an_involutive_morphism(self, a, b):
        swap = braiding(a, b)
        assert validate(swap).is_valid
        assert compose(braiding(b, a), swap) == BicomplexMorphism.identity(tensor(a, b))


class TestInternalHom():

    @given(bicomplexes())
    def test_hom_from_unit(self, a):
        assert internal_hom(UNIT, a) == a

    def test_dual_point(self):
        assert internal_hom(Bicomplex.point((1, 0)), UNIT) == Bicomplex.point((-1, 0))

    def test_endomorphisms_of_staircase(self):
        assert internal_hom(ele(1), ele(1)).total_dim == 9

    @given(bicomplexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_output_is_valid(self, a, b):
        assert validate(internal_hom(a, b)).is_valid

    @given(bicomplexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_morphisms_are_degree_zero_cycles(self, a, b):
        for vector in morphism_space(a, b).basis:
            assert validate(devectorize(a, b, (0, 0), vector, BicomplexMorphism)).is_valid

    def test_chain_maps_of_a_disk(self):
        disk = CochainComplex.disk(0)
        assert chain_morphism_space(disk, disk).dim == 1
        assert chain_morphism_space(CochainComplex({0: 1}), disk).dim == 0

    @given(bicomplexes(0, 1, max_pieces=2), bicomplexes(0, 1, max_pieces=1), bicomplexes(0, 1, max_pieces=1))
    def test_tensor_hom_adjunction_dimensions(self, a, b, c):
        assert morphism_space(tensor(a, b), c).dim == morphism_space(b, internal_hom(a, c)).dim


class TestShift():

    @given(bicomplexes())
    def test_zero_shift(self, a):
        assert shift(a, 0, 0) == a

    def test_point(self):
        assert shift(UNIT, 2, -1) == Bicomplex.point((2, -1))

    @given(bicomplexes())
    def test_inverse_shift(self, a):
        assert shift(shift(a, 2, -3), -2, 3) == a


class TestTruncation():

    def test_unit(self):
        assert truncate_third_quadrant(UNIT) == UNIT

    def test_staircase_vanishes(self):
        assert truncate_third_quadrant(ele(1)).total_dim == 0

    def test_square_is_kept(self):
        square = Bicomplex.square((-1, -1))
        assert truncate_third_quadrant(square) == square

    @given(bicomplexes())
    def test_idempotent(self, a):
        truncated = truncate_third_quadrant(a)
        assert truncate_third_quadrant(truncated) == truncated

    @given(bicomplexes())
    def test_inclusion_is_a_morphism(self, a):
        inclusion = truncation_inclusion(a)
        assert validate(inclusion).is_valid
        assert all(p <= 0 and q <= 0 for p, q in inclusion.source.support)


class TestTotalize():

    def test_point(self):
        assert totalize(Bicomplex.point((2, 1))) == CochainComplex({3: 1})

    def test_square_is_acyclic(self):
        assert total_cohomology(totalize(Bicomplex.square())).is_zero()

    def test_staircase(self):
        assert total_cohomology(totalize(ele(1))).dims == {1: 1}

    @given(bicomplexes())
    def test_total_differential_squares_to_zero(self, a):
        assert validate(totalize(a)).is_valid


class TestDirectSum():

    @given(bicomplexes())
    def test_zero_summand(self, a):
        assert direct_sum([a, Bicomplex.zero()]) == a

    def test_points(self):
        assert direct_sum([UNIT, UNIT]).dims == {(0, 0): 2}

    def test_square_adds_nothing_to_bott_chern(self):
        assert bott_chern(direct_sum([Bicomplex.square(), UNIT])).dims == bott_chern(UNIT).dims


class TestTranspose():

    @given(bicomplexes())
    def test_bott_chern_symmetry(self, a):
        swapped = bott_chern(transpose(a))
        assert {(q, p): dim for (p, q), dim in bott_chern(a).dims.items()} == swapped.dims
