import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from pluripotential.core.bigolin import bigolin_complex, bigolin_map
from pluripotential.core.cohomology import aeppli, bott_chern, is_pluripotential_weq
from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, ChainMorphism, CochainComplex, compose, tensor, validate,
)
from pluripotential.core.enrichment import normalized_simplex_chains
from pluripotential.core.exactlin import Matrix
from pluripotential.core.exception import ShapeError
from pluripotential.core.inflation import (
    adjunct, binomial, counit, ele, ele_cells, inflate, inflate_map, is_ele_cell, leibniz, row_complex,
    triangle_defects, unit, unit_coefficients,
)
from tests.strategies import bicomplexes, cochain_complexes, morphisms, quasi_isomorphisms, thorough


class TestZigzags():

    def test_point(self):
        assert ele(0) == Bicomplex.point()

    @pytest.mark.parametrize("n", [-3, -2, -1, 1, 2, 3])
    def test_cells(self, n):
        cells = ele_cells(n)
        assert len(cells) == 2 * abs(n) + 1
        assert all(is_ele_cell(n, *cell) for cell in cells)
        assert validate(ele(n)).is_valid

    def test_first_positive(self):
        e = ele(1)
        assert e.del_at((0, 1)) == Matrix.from_rows([[1]])
        assert e.delbar_at((1, 0)) == Matrix.from_rows([[-1]])

    def test_combinatorics(self):
        assert binomial(3, 5) == 0
        assert binomial(4, 2) == 6
        assert leibniz(3, 1) == QQ(1, 3)
        with pytest.raises(ValueError):
            leibniz(0, 0)

    @pytest.mark.parametrize("n", [2, 3])
    def test_powers_of_positive_zigzag(self, n):
        power = ele(1)
        for _ in range(n - 1):
            power = tensor(power, ele(1))
        assert bott_chern(power).dims == bott_chern(ele(n)).dims
        assert aeppli(power).dims == aeppli(ele(n)).dims

    @pytest.mark.parametrize("n", [2, 3])
    def test_powers_of_negative_zigzag(self, n):
        power = ele(-1)
        for _ in range(n - 1):
            power = tensor(power, ele(-1))
        assert bott_chern(power).dims == bott_chern(ele(-n)).dims
        assert aeppli(power).dims == aeppli(ele(-n)).dims


class TestInflate():

    def test_edge(self):
        inflated = inflate(normalized_simplex_chains(1))
        assert inflated.dims == {(-1, -1): 1, (-1, 0): 1, (0, -1): 1, (0, 0): 2}
        assert inflated.ddbar_at((-1, -1)) == Matrix.from_rows([[-1], [1]])

    def test_triangle(self):
        assert inflate(normalized_simplex_chains(2)).dims == {
            (0, 0): 3, (-1, 0): 3, (0, -1): 3, (-1, -1): 4,
            (-2, 0): 1, (0, -2): 1, (-2, -1): 1, (-1, -2): 1,
        }

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_simplices_look_like_a_point(self, n):
        inflated = inflate(normalized_simplex_chains(n))
        assert bott_chern(inflated).dims == {(0, 0): 1}
        assert aeppli(inflated).dims == {(0, 0): 1}

    def test_point_in_degree_n(self):
        assert inflate(CochainComplex({2: 1})) == ele(2)
        assert inflate(CochainComplex({-2: 1})) == ele(-2)

    @given(cochain_complexes())
    def test_output_is_valid(self, c):
        assert validate(inflate(c)).is_valid

    @given(cochain_complexes(0, 3))
    def test_row_recovers_nonnegative_complexes(self, c):
        assert row_complex(inflate(c)) == c

    @given(st.data(), cochain_complexes(max_pieces=2), cochain_complexes(max_pieces=2), cochain_complexes(max_pieces=2))
    def test_functoriality(self, data, c, d, e):
        f = data.draw(morphisms(c, d))
        g = data.draw(morphisms(d, e))
        assert validate(inflate_map(f)).is_valid
        assert inflate_map(compose(g, f)) == compose(inflate_map(g), inflate_map(f))
        assert inflate_map(ChainMorphism.identity(c)) == BicomplexMorphism.identity(inflate(c))

    @thorough
    @given(quasi_isomorphisms())
    def test_quasi_isomorphisms_become_weak_equivalences(self, f):
        assert is_pluripotential_weq(inflate_map(f)).is_weq

    @pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
    def test_conservative(self, n):
        f = ChainMorphism.zero(CochainComplex({n: 1}), CochainComplex.zero())
        assert not is_pluripotential_weq(inflate_map(f)).is_weq


class TestUnitCounit():

    def test_unit_coefficients(self):
        assert unit_coefficients(0) == [((0, 0), 1)]
        assert unit_coefficients(1) == [((0, 1), 1), ((1, 0), 1)]
        assert unit_coefficients(-2) == [((-2, -1), QQ(1, 2)), ((-1, -2), QQ(1, 2))]

    def test_counit_of_positive_zigzag(self):
        epsilon = counit(ele(1))
        assert epsilon.block((1, 1)) == Matrix.from_rows([[QQ(1, 2), QQ(1, 2), QQ(1, 2)]])
        assert epsilon.block((1, 0)) == Matrix.from_rows([[0, 1]])

    def test_counit_of_negative_zigzag(self):
        assert counit(ele(-1)).block((-1, -1)) == Matrix.from_rows([[-1]])

    @given(cochain_complexes())
    def test_unit_is_a_chain_map(self, c):
        assert validate(unit(c)).is_valid

    @given(bicomplexes())
    def test_counit_is_a_morphism(self, a):
        assert validate(counit(a)).is_valid

    @thorough
    @given(cochain_complexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_triangle_identities(self, c, a):
        assert triangle_defects(c, a).is_zero

    @given(st.data(), cochain_complexes(max_pieces=2), cochain_complexes(max_pieces=2))
    def test_unit_naturality(self, data, c, d):
        f = data.draw(morphisms(c, d))
        assert compose(bigolin_map(inflate_map(f)), unit(c)) == compose(unit(d), f)

    @given(st.data(), bicomplexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_counit_naturality(self, data, a, b):
        g = data.draw(morphisms(a, b))
        assert compose(g, counit(a)) == compose(counit(b), inflate_map(bigolin_map(g)))


class TestAdjunct():

    @given(bicomplexes())
    def test_counit_transposes_to_identity(self, a):
        b = bigolin_complex(a)
        assert adjunct(counit(a), b) == ChainMorphism.identity(b)

    @given(cochain_complexes())
    def test_unit_transposes_to_identity(self, c):
        assert adjunct(unit(c), inflate(c)) == BicomplexMorphism.identity(inflate(c))

    @given(st.data(), cochain_complexes(max_pieces=2), bicomplexes(max_pieces=2))
    def test_round_trip(self, data, c, a):
        h = data.draw(morphisms(c, bigolin_complex(a)))
        g = adjunct(h, a)
        assert validate(g).is_valid
        assert adjunct(g, c) == h

    def test_wrong_source_is_refused(self):
        with pytest.raises(ShapeError):
            adjunct(BicomplexMorphism.identity(ele(1)), CochainComplex({0: 1}))
