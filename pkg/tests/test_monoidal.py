import pytest
from hypothesis import given
from hypothesis import strategies as st

from pluripotential.core.bigolin import bigolin_complex, bigolin_map
from pluripotential.core.cohomology import is_pluripotential_weq
from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, ChainMorphism, CochainComplex, associator, braiding, compose, direct_sum, tensor,
    tensor_maps, validate,
)
from pluripotential.core.exactlin import Matrix
from pluripotential.core.exception import DomainRestrictionError
from pluripotential.core.inflation import ele, inflate, inflate_map
from pluripotential.core.monoidal import iota, lax_phi_closed_formula, lax_phi_cross_check, lax_phi_tilde, oplax_phi
from tests.strategies import nonpositive_complexes, third_quadrant_bicomplexes, thorough

UNIT = Bicomplex.point()
POINT = CochainComplex({0: 1})


class TestIota():

    def test_trivial(self):
        assert iota(0, 0) == BicomplexMorphism.identity(UNIT)

    def test_first_negative(self):
        f = iota(-1, -1)
        assert f.block((-1, -1)) == Matrix.from_rows([[1], [1]])
        assert f.block((-2, -1)) == Matrix.from_rows([[1], [-1]])
        assert validate(f).is_valid

    def test_positive_index_is_refused(self):
        with pytest.raises(DomainRestrictionError):
            iota(1, 0)

    @pytest.mark.parametrize("k, l", [(-1, 0), (0, -2), (-1, -1), (-2, -1), (-2, -2)])
    def test_weak_equivalence(self, k, l):
        assert is_pluripotential_weq(iota(k, l)).is_weq


class TestOplaxPhi():

    def test_unit(self):
        assert oplax_phi(POINT, POINT) == BicomplexMorphism.identity(UNIT)

    def test_points_in_degree_minus_one(self):
        c = CochainComplex({-1: 1})
        assert oplax_phi(c, c) == iota(-1, -1)

    def test_positive_degrees_are_refused(self):
        with pytest.raises(DomainRestrictionError):
            oplax_phi(CochainComplex({1: 1}), POINT)

    @given(nonpositive_complexes(), nonpositive_complexes())
    def test_is_a_morphism(self, c, d):
        assert validate(oplax_phi(c, d)).is_valid

    @thorough
    @given(nonpositive_complexes(), nonpositive_complexes())
    def test_weak_equivalence(self, c, d):
        assert is_pluripotential_weq(oplax_phi(c, d)).is_weq

    @given(nonpositive_complexes(1), nonpositive_complexes(1), nonpositive_complexes(1))
    def test_coassociative(self, c, d, e):
        inf_c, inf_d, inf_e = inflate(c), inflate(d), inflate(e)
        left = compose(associator(inf_c, inf_d, inf_e),
                       compose(tensor_maps(oplax_phi(c, d), BicomplexMorphism.identity(inf_e)), oplax_phi(tensor(c, d), e)))
        right = compose(compose(tensor_maps(BicomplexMorphism.identity(inf_c), oplax_phi(d, e)), oplax_phi(c, tensor(d, e))),
                        inflate_map(associator(c, d, e)))
        assert left == right

    @given(nonpositive_complexes(), nonpositive_complexes())
    def test_symmetric(self, c, d):
        left = compose(braiding(inflate(c), inflate(d)), oplax_phi(c, d))
        right = compose(oplax_phi(d, c), inflate_map(braiding(c, d)))
        assert left == right

    @given(nonpositive_complexes())
    def test_counital(self, c):
        assert oplax_phi(c, POINT) == BicomplexMorphism.identity(inflate(c))


class TestLaxPhiTilde():

    def test_unit(self):
        assert lax_phi_tilde(UNIT, UNIT) == ChainMorphism.identity(POINT)

    def test_outside_third_quadrant_is_refused(self):
        with pytest.raises(DomainRestrictionError):
            lax_phi_tilde(ele(1), UNIT)

    @given(third_quadrant_bicomplexes(), third_quadrant_bicomplexes())
    def test_is_a_chain_map(self, a, b):
        phi = lax_phi_tilde(a, b)
        assert validate(phi).is_valid
        assert phi.source == tensor(bigolin_complex(a), bigolin_complex(b))
        assert phi.target == bigolin_complex(tensor(a, b))

    def test_cross_check_on_squares(self):
        square = Bicomplex.square((-1, -1))
        report = lax_phi_cross_check(square, square)
        assert report.checked
        assert not report.mismatches

    def test_closed_formula_on_zigzags(self):
        report = lax_phi_cross_check(ele(-2), ele(-3))
        assert set(report.checked) == {(-2, -2), (-2, -3)}
        assert set(report.unchecked) == {(-1, -2), (-1, -3)}
        assert not report.mismatches

    def test_degree_minus_one_is_left_unchecked(self):
        report = lax_phi_cross_check(ele(-1), ele(-2))
        assert set(report.unchecked) == {(-1, -1), (-1, -2)}
        assert not report.checked

    def test_closed_formula_needs_negative_degrees(self):
        with pytest.raises(DomainRestrictionError):
            lax_phi_closed_formula(ele(-1), ele(-2), 0, 2)

    @given(third_quadrant_bicomplexes(max_pieces=1, low=-3), third_quadrant_bicomplexes(max_pieces=1, low=-3),
           st.integers(-3, -2), st.integers(-3, -2))
    def test_closed_formula_matches_the_composite(self, a, b, m, n):
        a, b = direct_sum([a, ele(m)]), direct_sum([b, ele(n)])
        report = lax_phi_cross_check(a, b)
        assert (m, n) in report.checked
        assert not report.mismatches

    @given(st.sampled_from([ele(-1), Bicomplex.square((-1, -1)), Bicomplex.point((-1, -1))]),
           st.sampled_from([ele(-1), Bicomplex.point()]),
           st.sampled_from([Bicomplex.square((-1, -1)), Bicomplex.point((-1, -1))]))
    def test_associative(self, a, b, c):
        ba, bb, bc = bigolin_complex(a), bigolin_complex(b), bigolin_complex(c)
        left = compose(lax_phi_tilde(tensor(a, b), c), tensor_maps(lax_phi_tilde(a, b), ChainMorphism.identity(bc)))
        left = compose(bigolin_map(associator(a, b, c)), left)
        right = compose(lax_phi_tilde(a, tensor(b, c)), tensor_maps(ChainMorphism.identity(ba), lax_phi_tilde(b, c)))
        right = compose(right, associator(ba, bb, bc))
        assert left == right
