"""
Real bicomplexes: bicomplexes over the Gaussian rationals with an antilinear involution σ
sending bidegree (p,q) to (q,p).

σ is stored by its linear part S, so σ(v) = S·conj(v). The real Bigolin complex is computed
as an honest rational complex: its degree-k space is the fixed space of σ for k ≥ 0 and the
anti-fixed space (fixed points twisted by −i) for k < 0, found by splitting real and
imaginary parts.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I

from pluripotential.core.bigolin import bigolin_complex, bigolin_layouts, bigolin_map
from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, BigradedLinearMap, Bidegree, ChainMorphism, CochainComplex, Defect, Layout,
    ValidationReport, assemble, compose, direct_sum, tensor, tensor_layout, validate,
)
from pluripotential.core.cohomology import homotopy_defect
from pluripotential.core.exactlin import Matrix, Subspace, conjugate_scalar, kernel
from pluripotential.core.exception import MembershipError, ShapeError
from pluripotential.core.inflation import counit, ele, inflate, inflate_map, inflation_layout, unit
from pluripotential.core.monoidal import iota, oplax_phi

logger = logging.getLogger(__name__)


def _swap(key: Bidegree) -> Bidegree:
    return (key[1], key[0])


class RealBicomplex:
    """
    A bicomplex over QQ_I with an antilinear involution.

    Attributes:
        bicomplex: The underlying complex bicomplex.
        sigma: Linear part of σ per bidegree, mapping (p,q) to (q,p).
    """

    def __init__(self, bicomplex: Bicomplex, sigma: Optional[Mapping[Bidegree, Matrix]] = None) -> None:
        self.bicomplex = bicomplex.convert(QQ_I)
        self._sigma: Dict[Bidegree, Matrix] = {}
        for key, matrix in (sigma or {}).items():
            key = tuple(key)
            expected = (self.bicomplex.dim(_swap(key)), self.bicomplex.dim(key))
            if matrix.shape != expected:
                raise ShapeError(f"sigma{key}", expected, matrix.shape)
            if not matrix.is_zero():
                self._sigma[key] = matrix.convert(QQ_I)

    def sigma_at(self, key: Bidegree) -> Matrix:
        found = self._sigma.get(tuple(key))
        if found is not None:
            return found
        return Matrix.zeros(self.bicomplex.dim(_swap(key)), self.bicomplex.dim(key), QQ_I)

    @property
    def sigma(self) -> Dict[Bidegree, Matrix]:
        return dict(sorted(self._sigma.items()))

    @property
    def support(self):
        return self.bicomplex.support

    def apply_sigma(self, key: Bidegree, vector) -> Tuple:
        return self.sigma_at(key).apply(tuple(conjugate_scalar(v) for v in vector))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealBicomplex):
            return NotImplemented
        return self.bicomplex == other.bicomplex and self._sigma == other._sigma

    def __repr__(self) -> str:
        return f"RealBicomplex({self.bicomplex!r}, sigma={len(self._sigma)} blocks)"

    @classmethod
    def conjugation(cls, bicomplex: Bicomplex) -> "RealBicomplex":
        """Coordinate conjugation as σ; only meaningful when the bicomplex is symmetric."""
        return cls(bicomplex, {key: Matrix.identity(bicomplex.dim(key), QQ_I) for key in bicomplex.support})


def validate_real(a: RealBicomplex) -> ValidationReport:
    """
    Checks the bicomplex identities, σσ = id and σ∂σ = ∂̄; antilinearity holds by construction.
    """
    report = validate(a.bicomplex)
    report.kind = "real bicomplex"
    x = a.bicomplex
    for key in x.support:
        p, q = key
        square = a.sigma_at(_swap(key)) @ a.sigma_at(key).conjugate() - Matrix.identity(x.dim(key), QQ_I)
        if not square.is_zero():
            report.defects.append(Defect(key, "σ∘σ − id", square))
        conjugated = (a.sigma_at((q + 1, p)) @ x.del_at((q, p)).conjugate() @ a.sigma_at(key).conjugate()
                      - x.delbar_at(key))
        if not conjugated.is_zero():
            report.defects.append(Defect(key, "σ∂σ − ∂̄", conjugated))
    return report


def ele_real(n: int) -> RealBicomplex:
    """E_n with σ(i,j)_n = (j,i)_n when i+j = n and −(j,i)_n otherwise."""
    e = ele(n)
    return RealBicomplex(e, {(i, j): Matrix(1, 1, {0: {0: 1 if i + j == n else -1}}, QQ_I) for i, j in e.support})


def tensor_real(a: RealBicomplex, b: RealBicomplex) -> RealBicomplex:
    """a ⊗ b with σ(x⊗y) = σx ⊗ σy."""
    x, y = a.bicomplex, b.bicomplex
    product = tensor(x, y)
    sigma = {}
    for key in product.support:
        source, target = tensor_layout(x, y, key), tensor_layout(x, y, _swap(key))
        blocks = []
        for left in source.labels:
            right = (key[0] - left[0], key[1] - left[1])
            blocks.append((_swap(left), left, a.sigma_at(left).kron(b.sigma_at(right))))
        sigma[key] = assemble(target, source, blocks, QQ_I)
    return RealBicomplex(product, sigma)


def direct_sum_real(pieces: Sequence[RealBicomplex]) -> RealBicomplex:
    """Blockwise sum, σ acting on each summand separately."""
    total = direct_sum([a.bicomplex for a in pieces])
    sigma = {}
    for key in total.support:
        source = Layout((index, a.bicomplex.dim(key)) for index, a in enumerate(pieces))
        target = Layout((index, a.bicomplex.dim(_swap(key))) for index, a in enumerate(pieces))
        sigma[key] = assemble(target, source, [(index, index, a.sigma_at(key)) for index, a in enumerate(pieces)], QQ_I)
    return RealBicomplex(total, sigma)


def inflate_real(c: CochainComplex) -> RealBicomplex:
    """
    Inf_ℝ(C) for a rational complex C: the inflation of C ⊗ ℂ with σ((i,j)_n⊗x) = σ(i,j)_n ⊗ conj(x).
    """
    complexified = c.convert(QQ_I)
    inflated = inflate(complexified)
    sigma = {}
    for i, j in inflated.support:
        source, target = inflation_layout(c, (i, j)), inflation_layout(c, (j, i))
        blocks = [(n, n, Matrix.identity(c.dim(n), QQ_I).scale(1 if i + j == n else -1)) for n in source.labels]
        sigma[(i, j)] = assemble(target, source, blocks, QQ_I)
    return RealBicomplex(inflated, sigma)


def _fixed_space(sigma: Matrix, twist: int) -> Subspace:
    """
    Rational subspace of realified vectors (x; y) with σ(x+iy) = twist·(x+iy).
    """
    real = sigma.realify()
    size = sigma.cols
    # realified conjugation is diag(I, −I)
    conjugation = Matrix(2 * size, 2 * size, {i: {i: 1 if i < size else -1} for i in range(2 * size)})
    return kernel(real @ conjugation - Matrix.identity(2 * size).scale(twist))


def _complex_vector(realified) -> Tuple:
    size = len(realified) // 2
    return tuple(QQ_I(realified[i], realified[i + size]) for i in range(size))


def _realified_vector(vector) -> Tuple:
    values = [QQ_I.convert(v) for v in vector]
    return tuple(v.x for v in values) + tuple(v.y for v in values)


@dataclass
class RealBigolin:
    """
    𝓑_ℝ of a real bicomplex.

    Attributes:
        complex: The rational cochain complex.
        bases: Per degree, the real subspace of the realified degree-k space of 𝓑.
        ambient: 𝓑 of the underlying bicomplex.
    """
    complex: CochainComplex
    bases: Dict[int, Subspace]
    ambient: CochainComplex

    def coordinates(self, k: int, vector) -> Tuple:
        """Rational coordinates of a vector of 𝓑^k lying in the real subspace."""
        return _real_coordinates(self.bases, k, vector)

    def inclusion(self) -> ChainMorphism:
        """The complexified inclusion 𝓑_ℝ ⊗ ℂ → 𝓑 of the underlying bicomplex."""
        blocks = {}
        for k, space in self.bases.items():
            columns = [_complex_vector(vector) for vector in space.basis]
            blocks[k] = Matrix.from_columns(columns, self.ambient.dim(k), QQ_I)
        return ChainMorphism(self.complex.convert(QQ_I), self.ambient, blocks)


def _real_coordinates(bases: Dict[int, Subspace], k: int, vector) -> Tuple:
    realified = _realified_vector(vector)
    space = bases.get(k) or Subspace.zero(len(realified))
    if not space.contains(realified):
        raise MembershipError(k, tuple(vector))
    return space.coordinates(realified)


def bigolin_sigma(a: RealBicomplex) -> Dict[int, Matrix]:
    """σ on each degree of 𝓑(a), assembled from its blocks."""
    layouts = bigolin_layouts(a.bicomplex)
    sigma = {}
    for k, layout in layouts.items():
        sigma[k] = assemble(layout, layout, [(_swap(cell), cell, a.sigma_at(cell)) for cell in layout.labels], QQ_I)
    return sigma


def bigolin_real(a: RealBicomplex) -> RealBigolin:
    """
    𝓑_ℝ(a): σ-fixed vectors of 𝓑(a) in degrees k ≥ 0 and σ-anti-fixed vectors in degrees k < 0.
    """
    ambient = bigolin_complex(a.bicomplex)
    bases = {}
    for k, sigma in bigolin_sigma(a).items():
        space = _fixed_space(sigma, 1 if k >= 0 else -1)
        if space.dim:
            bases[k] = space
    differential = {}
    for k, space in bases.items():
        target = bases.get(k + 1)
        if target is None:
            continue
        images = [ambient.d(k).apply(_complex_vector(vector)) for vector in space.basis]
        differential[k] = Matrix.from_columns([_real_coordinates(bases, k + 1, v) for v in images], target.dim)
    real = CochainComplex({k: space.dim for k, space in bases.items()}, differential)
    logger.debug(f"{real.dims=}")
    return RealBigolin(real, bases, ambient)


@dataclass
class RealMorphism:
    """A bicomplex morphism between real bicomplexes, expected to commute with σ."""
    source: RealBicomplex
    target: RealBicomplex
    morphism: BicomplexMorphism


def sigma_equivariance_defect(f: BicomplexMorphism, source: RealBicomplex, target: RealBicomplex) -> Dict[Bidegree, Matrix]:
    """Per bidegree, σ_target ∘ f − f ∘ σ_source on the linear parts: S'·conj(f) − f_swapped·S."""
    defects = {}
    for key in source.support:
        defect = target.sigma_at(key) @ f.block(key).conjugate() - f.block(_swap(key)) @ source.sigma_at(key)
        if not defect.is_zero():
            defects[key] = defect
    return defects


def is_real_morphism(morphism: RealMorphism) -> bool:
    return not sigma_equivariance_defect(morphism.morphism, morphism.source, morphism.target)


def real_unit(c: CochainComplex) -> ChainMorphism:
    """
    η_ℝ: C → 𝓑_ℝ(Inf_ℝ C), the complex unit written in the real basis.

    Raises:
        MembershipError: If a unit image misses the real subspace.
    """
    inflated = inflate_real(c)
    target = bigolin_real(inflated)
    eta = unit(c.convert(QQ_I))
    blocks = {}
    for n in c.support:
        columns = [target.coordinates(n, column) for column in eta.block(n).columns()]
        blocks[n] = Matrix.from_columns(columns, target.complex.dim(n))
    return ChainMorphism(c, target.complex, blocks)


def real_counit(a: RealBicomplex) -> RealMorphism:
    """ε_ℝ = ε ∘ Inf(j), j the complexified inclusion of 𝓑_ℝ(a) into 𝓑(a)."""
    real = bigolin_real(a)
    morphism = compose(counit(a.bicomplex), inflate_map(real.inclusion()))
    return RealMorphism(inflate_real(real.complex), a, morphism)


def bigolin_real_map(f: RealMorphism) -> ChainMorphism:
    """𝓑_ℝ(f), written in the real bases of both sides."""
    source, target = bigolin_real(f.source), bigolin_real(f.target)
    complex_map = bigolin_map(f.morphism)
    blocks = {}
    for k, space in source.bases.items():
        images = [complex_map.block(k).apply(_complex_vector(vector)) for vector in space.basis]
        if k in target.bases:
            blocks[k] = Matrix.from_columns([target.coordinates(k, v) for v in images], target.complex.dim(k))
    return ChainMorphism(source.complex, target.complex, blocks)


def inflate_real_map(f: ChainMorphism) -> RealMorphism:
    return RealMorphism(inflate_real(f.source), inflate_real(f.target), inflate_map(_complexify_map(f)))


def _complexify_map(f: ChainMorphism) -> ChainMorphism:
    return ChainMorphism(f.source.convert(QQ_I), f.target.convert(QQ_I), {n: block.convert(QQ_I) for n, block in f.blocks.items()})


@dataclass
class RealTriangleDefects:
    inflation_side: Dict[Bidegree, Matrix]
    bigolin_side: Dict[int, Matrix]

    @property
    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.inflation_side.values()) and all(m.is_zero() for m in self.bigolin_side.values())


def real_triangle_defects(c: CochainComplex, a: RealBicomplex) -> RealTriangleDefects:
    """
    (ε_ℝ Inf_ℝ)∘(Inf_ℝ η_ℝ) − id on Inf_ℝ(c) and 𝓑_ℝ(ε_ℝ)∘η_ℝ − id on 𝓑_ℝ(a).
    """
    eta = real_unit(c)
    first = compose(real_counit(inflate_real(c)).morphism, inflate_real_map(eta).morphism)
    inflation_side = {key: first.block(key) - Matrix.identity(first.source.dim(key), QQ_I) for key in first.source.support}
    real = bigolin_real(a)
    second = compose(bigolin_real_map(real_counit(a)), real_unit(real.complex))
    bigolin_side = {k: second.block(k) - Matrix.identity(second.source.dim(k)) for k in second.source.support}
    return RealTriangleDefects(inflation_side, bigolin_side)


def oplax_phi_real(c: CochainComplex, d: CochainComplex) -> RealMorphism:
    """φ_{C,D} between the real inflations Inf_ℝ(C⊗D) and Inf_ℝ(C) ⊗ Inf_ℝ(D)."""
    phi = oplax_phi(c.convert(QQ_I), d.convert(QQ_I))
    return RealMorphism(inflate_real(tensor(c, d)), tensor_real(inflate_real(c), inflate_real(d)), phi)


def iota_real(k: int, l: int) -> RealMorphism:
    return RealMorphism(ele_real(k + l), tensor_real(ele_real(k), ele_real(l)), _complexify_bicomplex_map(iota(k, l)))


def _complexify_bicomplex_map(f: BicomplexMorphism) -> BicomplexMorphism:
    return BicomplexMorphism(f.source.convert(QQ_I), f.target.convert(QQ_I), {key: block.convert(QQ_I) for key, block in f.blocks.items()})


def is_real_homotopy(f: RealMorphism, g: RealMorphism, h: BigradedLinearMap) -> bool:
    """h is a real pluripotential homotopy from f to g: a homotopy with σhσ = −h."""
    source, target = f.source, f.target
    for key in source.support:
        p, q = key
        conjugated = target.sigma_at((q - 1, p - 1)) @ h.block((q, p)).conjugate() @ source.sigma_at(key).conjugate()
        if conjugated != -h.block(key):
            return False
    return all(defect.is_zero() for defect in homotopy_defect(f.morphism, g.morphism, h).values())


def forget(a: RealBicomplex) -> Bicomplex:
    """The underlying complex bicomplex."""
    return a.bicomplex


def realify_bicomplex(a: Bicomplex) -> Bicomplex:
    """The rational bicomplex of realified coordinates; every space doubles in dimension."""
    return Bicomplex(
        {key: 2 * dim for key, dim in a.dims.items()},
        {key: block.realify() for key, block in a.arrow_blocks("del").items()},
        {key: block.realify() for key, block in a.arrow_blocks("delbar").items()},
        QQ,
    )


def realify_cochain(c: CochainComplex) -> CochainComplex:
    return CochainComplex({n: 2 * dim for n, dim in c.dims.items()},
                          {n: block.realify() for n, block in c.arrow_blocks("d").items()}, QQ)


def realify_morphism(f: BicomplexMorphism) -> BicomplexMorphism:
    return BicomplexMorphism(realify_bicomplex(f.source), realify_bicomplex(f.target),
                             {key: block.realify() for key, block in f.blocks.items()})
