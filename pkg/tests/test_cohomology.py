import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.polys.domains import QQ_I

from pluripotential.core.cohomology import (
    Theory, aeppli, bott_chern, comparison_maps, ddbar_lemma, dolbeault, homotopy_defect, induced_map,
    is_homotopy, is_pluripotential_acyclic, is_pluripotential_weq, solve_homotopy, total_cohomology,
)
from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, BigradedLinearMap, CochainComplex, compose, direct_sum, validate,
)
from pluripotential.core.enrichment import normalized_simplex_chains
from pluripotential.core.exactlin import Matrix
from pluripotential.core.exception import DomainRestrictionError, ShapeError
from pluripotential.core.inflation import ele, inflate
from pluripotential.core.monoidal import iota
from tests.strategies import bicomplexes, bigraded_maps, morphisms

UNIT = Bicomplex.point()
SQUARE = Bicomplex.square()


class TestTables():

    def test_unit(self):
        assert bott_chern(UNIT).dims == {(0, 0): 1}
        assert aeppli(UNIT).dims == {(0, 0): 1}
        assert dolbeault(UNIT, "row").dims == {(0, 0): 1}
        assert dolbeault(UNIT, "column").dims == {(0, 0): 1}

    def test_square_vanishes(self):
        assert bott_chern(SQUARE).is_zero()
        assert aeppli(SQUARE).is_zero()
        assert dolbeault(SQUARE, "row").is_zero()
        assert dolbeault(SQUARE, "column").is_zero()

    def test_negative_staircase(self):
        assert bott_chern(ele(-1)).dims == {(-1, 0): 1, (0, -1): 1}
        assert aeppli(ele(-1)).dims == {(-1, -1): 1}

    def test_dolbeault_of_positive_staircase(self):
        assert dolbeault(ele(1), "row").dims == {(1, 0): 1}
        assert dolbeault(ele(1), "column").dims == {(0, 1): 1}

    def test_unknown_side(self):
        with pytest.raises(ValueError):
            dolbeault(UNIT, "diagonal")

    def test_total(self):
        assert total_cohomology(normalized_simplex_chains(1)).dims == {0: 1}
        assert total_cohomology(CochainComplex.disk(2)).is_zero()
        assert total_cohomology(CochainComplex({3: 1})).dims == {3: 1}

    def test_gaussian_data_is_refused(self):
        with pytest.raises(DomainRestrictionError):
            bott_chern(UNIT.convert(QQ_I))

    @given(bicomplexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_additivity(self, a, b):
        total = direct_sum([a, b])
        for table in (bott_chern, aeppli):
            keys = set(a.support) | set(b.support)
            assert all(table(total).dim(key) == table(a).dim(key) + table(b).dim(key) for key in keys)


class TestInducedMaps():

    @given(bicomplexes())
    def test_identity(self, a):
        for theory in (Theory.BOTT_CHERN, Theory.AEPPLI, Theory.TOTAL):
            for key, matrix in induced_map(BicomplexMorphism.identity(a), theory).items():
                assert matrix == Matrix.identity(matrix.rows)

    def test_zero_endomorphism(self):
        zero = BicomplexMorphism.zero(SQUARE, SQUARE)
        assert all(matrix.is_zero() for matrix in induced_map(zero, Theory.AEPPLI).values())

    @given(st.data(), bicomplexes(max_pieces=2), bicomplexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_functoriality(self, data, a, b, c):
        f = data.draw(morphisms(a, b))
        g = data.draw(morphisms(b, c))
        for theory in (Theory.BOTT_CHERN, Theory.AEPPLI):
            gf, induced_f, induced_g = induced_map(compose(g, f), theory), induced_map(f, theory), induced_map(g, theory)
            for key, matrix in gf.items():
                if key in induced_f and key in induced_g:
                    assert matrix == induced_g[key] @ induced_f[key]
                else:
                    assert matrix.is_zero()


class TestWeakEquivalence():

    @given(bicomplexes())
    def test_identity(self, a):
        assert is_pluripotential_weq(BicomplexMorphism.identity(a)).is_weq

    def test_zero_into_square(self):
        assert is_pluripotential_weq(BicomplexMorphism.zero(Bicomplex.zero(), SQUARE)).is_weq

    def test_iota_is_a_weak_equivalence(self):
        verdict = is_pluripotential_weq(iota(-1, -1))
        assert verdict.is_weq
        assert not verdict.failures

    def test_point_into_staircase(self):
        f = BicomplexMorphism(Bicomplex.point((1, 1)), ele(1), {(1, 1): Matrix.identity(1)})
        verdict = is_pluripotential_weq(f)
        assert not verdict.is_weq
        assert {theory for _, theory in verdict.failures} == {Theory.AEPPLI}
        assert {key for key, _ in verdict.failures} == {(0, 1), (1, 0), (1, 1)}


class TestAcyclicity():

    def test_square(self):
        assert is_pluripotential_acyclic(SQUARE)

    def test_point(self):
        assert not is_pluripotential_acyclic(UNIT)

    def test_inflated_disk(self):
        assert is_pluripotential_acyclic(inflate(CochainComplex.disk(-1)))


class TestDdbarLemma():

    def test_point(self):
        assert ddbar_lemma(UNIT).holds

    def test_square_plus_point(self):
        assert ddbar_lemma(direct_sum([SQUARE, UNIT])).holds

    def test_staircase_fails_first_at_the_row(self):
        verdict = ddbar_lemma(ele(1))
        assert not verdict.holds
        assert verdict.failing == (1, 0)
        assert verdict.failures == [(1, 0), (0, 1), (1, 1)]

    @given(bicomplexes())
    def test_lemma_forces_equal_dimensions(self, a):
        if ddbar_lemma(a).holds:
            bc, ae = bott_chern(a), aeppli(a)
            assert all(bc.dim(key) == ae.dim(key) for key in a.support)

    def test_comparison_maps_of_a_point(self):
        for maps in comparison_maps(UNIT).values():
            assert maps[(0, 0)] == Matrix.identity(1)


class TestHomotopy():

    def test_equal_maps_with_zero_homotopy(self):
        f = BicomplexMorphism.identity(ele(2))
        h = BigradedLinearMap.zero(ele(2), ele(2), (-1, -1))
        assert all(defect.is_zero() for defect in homotopy_defect(f, f, h).values())

    def test_square_contracts(self):
        h = BigradedLinearMap(SQUARE, SQUARE, {(0, 0): Matrix.identity(1)}, (-1, -1))
        assert is_homotopy(BicomplexMorphism.identity(SQUARE), BicomplexMorphism.zero(SQUARE, SQUARE), h)

    def test_solver_finds_the_contraction(self):
        h = solve_homotopy(BicomplexMorphism.identity(SQUARE), BicomplexMorphism.zero(SQUARE, SQUARE))
        assert h is not None
        assert is_homotopy(BicomplexMorphism.identity(SQUARE), BicomplexMorphism.zero(SQUARE, SQUARE), h)

    def test_staircase_does_not_contract(self):
        assert solve_homotopy(BicomplexMorphism.identity(ele(1)), BicomplexMorphism.zero(ele(1), ele(1))) is None

    def test_offset_is_checked(self):
        f = BicomplexMorphism.identity(SQUARE)
        with pytest.raises(ShapeError):
            homotopy_defect(f, f, BigradedLinearMap.zero(SQUARE, SQUARE, (0, -1)))

    @given(st.data(), bicomplexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_homotopic_maps_induce_equal_maps(self, data, a, b):
        f = data.draw(morphisms(a, b))
        h = data.draw(bigraded_maps(a, b))
        defect = homotopy_defect(f, f, h)
        g = BicomplexMorphism(a, b, {key: f.block(key) + defect[key] for key in a.support})
        assert validate(g).is_valid
        assert is_homotopy(f, g, h)
        for theory in (Theory.BOTT_CHERN, Theory.AEPPLI):
            assert induced_map(f, theory) == induced_map(g, theory)
