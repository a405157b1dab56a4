"""
Random complexes, bicomplexes and morphisms.

Objects are direct sums of small indecomposable pieces (points, disks, arrows, squares,
zigzags) seen through a random change of basis, so every draw is valid by construction.
"""
from hypothesis import settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, BigradedLinearMap, ChainMorphism, CochainComplex, add_keys, devectorize,
    direct_sum, hom_layout, morphism_space, shift,
)
from pluripotential.core.exactlin import Matrix
from pluripotential.core.inflation import ele
from pluripotential.core.realbico import RealBicomplex, direct_sum_real, ele_real, inflate_real

small_scalars = st.integers(min_value=-2, max_value=2)


def at_least(examples):
    """Settings running at least this many examples, more under a longer profile."""
    return settings(max_examples=max(examples, settings.default.max_examples))


thorough = at_least(100)


@st.composite
def matrices(draw, max_size=4):
    rows = draw(st.integers(1, max_size))
    cols = draw(st.integers(1, max_size))
    entries = draw(st.lists(st.lists(small_scalars, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return Matrix.from_rows(entries)


@st.composite
def invertible_matrices(draw, size):
    """A diagonal of ±1, ±2 followed by a few elementary row operations."""
    diagonal = draw(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=size, max_size=size))
    matrix = Matrix(size, size, {i: {i: value} for i, value in enumerate(diagonal)})
    if size < 2:
        return matrix
    steps = draw(st.lists(st.tuples(st.integers(0, size - 1), st.integers(0, size - 1), small_scalars), max_size=2 * size))
    for i, j, c in steps:
        if i == j or not c:
            continue
        entries = {k: {k: 1} for k in range(size)}
        entries[i][j] = c
        matrix = Matrix(size, size, entries) @ matrix
    return matrix


def _rebase(space, bases):
    arrows = {}
    for name, step in space.DIRECTIONS:
        arrows[name] = {key: bases[add_keys(key, step)] @ block @ bases[key].inverse()
                        for key, block in space.arrow_blocks(name).items()}
    return type(space).from_arrows(space.dims, arrows, space.domain)


@st.composite
def rebased(draw, space):
    """The same graded space written in a random basis of every (bi)degree."""
    bases = {key: draw(invertible_matrices(space.dim(key))) for key in space.support}
    return _rebase(space, bases)


def cochain_pieces(low, high):
    points = st.integers(low, high).map(lambda n: CochainComplex({n: 1}))
    disks = st.integers(low, high - 1).map(CochainComplex.disk)
    return st.one_of(points, disks)


@st.composite
def cochain_complexes(draw, low=-4, high=4, max_pieces=3):
    pieces = draw(st.lists(cochain_pieces(low, high), min_size=1, max_size=max_pieces))
    return draw(rebased(direct_sum(pieces)))


def nonpositive_complexes(max_pieces=2):
    return cochain_complexes(-2, 0, max_pieces)


def bicomplex_pieces(low, high):
    one = Matrix.identity(1)
    cells = st.tuples(st.integers(low, high), st.integers(low, high))
    corners = st.tuples(st.integers(low, high - 1), st.integers(low, high - 1))
    return st.one_of(
        cells.map(Bicomplex.point),
        corners.map(lambda key: Bicomplex({key: 1, (key[0] + 1, key[1]): 1}, {key: one})),
        corners.map(lambda key: Bicomplex({key: 1, (key[0], key[1] + 1): 1}, None, {key: one})),
        corners.map(Bicomplex.square),
        corners.map(lambda key: shift(ele(1), key[0], key[1])),
        corners.map(lambda key: shift(ele(-1), key[0] + 1, key[1] + 1)),
    )


@st.composite
def bicomplexes(draw, low=-3, high=3, max_pieces=3):
    pieces = draw(st.lists(bicomplex_pieces(low, high), min_size=1, max_size=max_pieces))
    return draw(rebased(direct_sum(pieces)))


def third_quadrant_bicomplexes(max_pieces=2, low=-2):
    return bicomplexes(low, 0, max_pieces)


@st.composite
def real_bicomplexes(draw, low=-3, high=3, max_pieces=2):
    """
    Sums of real zigzags and real inflated disks in a random rational basis; a rational change
    of basis B turns σ into B σ B⁻¹ and keeps the structure real.
    """
    zigzags = st.integers(low, high).map(ele_real)
    disks = st.integers(low, high - 1).map(lambda n: inflate_real(CochainComplex.disk(n)))
    a = direct_sum_real(draw(st.lists(st.one_of(zigzags, disks), min_size=1, max_size=max_pieces)))
    bases = {key: draw(invertible_matrices(a.bicomplex.dim(key))) for key in a.support}
    sigma = {key: bases[(key[1], key[0])] @ a.sigma_at(key) @ bases[key].inverse() for key in a.support}
    return RealBicomplex(_rebase(a.bicomplex, bases), sigma)


@st.composite
def morphisms(draw, source, target):
    """A random integer combination of the echelon basis of the morphism space."""
    space = morphism_space(source, target)
    coefficients = draw(st.lists(small_scalars, min_size=space.dim, max_size=space.dim))
    vector = [sum((c * v[index] for c, v in zip(coefficients, space.basis)), QQ.zero) for index in range(space.ambient)]
    cls = BicomplexMorphism if isinstance(source, Bicomplex) else ChainMorphism
    return devectorize(source, target, source.ZERO_KEY, vector, cls)


@st.composite
def bigraded_maps(draw, source, target, offset=(-1, -1)):
    size = hom_layout(source, target, offset).dim
    vector = draw(st.lists(small_scalars, min_size=size, max_size=size))
    return devectorize(source, target, offset, vector, BigradedLinearMap)


@st.composite
def quasi_isomorphisms(draw, low=-2, high=2):
    """Projections C ⊕ D → C with D a sum of disks."""
    c = draw(cochain_complexes(low, high))
    disks = draw(st.lists(st.integers(low, high - 1).map(CochainComplex.disk), min_size=1, max_size=2))
    return direct_sum([ChainMorphism.identity(c)] + [ChainMorphism.zero(d, CochainComplex.zero()) for d in disks])
