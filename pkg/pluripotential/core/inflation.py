"""
The zigzag bicomplexes E_n, inflation of cochain complexes, and the unit and counit
exhibiting inflation as left adjoint to the Bigolin complex 𝓑 = 𝓑_{0,0}.
"""
import logging
from math import comb
from typing import Dict, List, NamedTuple, Tuple

from sympy.polys.domains import QQ

from pluripotential.core.bigolin import bigolin_complex, bigolin_layouts, bigolin_map
from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, Bidegree, ChainMorphism, CochainComplex, Layout, assemble, compose, sign,
)
from pluripotential.core.exactlin import Matrix
from pluripotential.core.exception import ShapeError

logger = logging.getLogger(__name__)


def binomial(k: int, l: int) -> int:
    if l < 0 or k < 0 or l > k:
        return 0
    return comb(k, l)


def leibniz(k: int, l: int):
    """Leibniz harmonic triangle entry 1/(l·binom(k,l)), for 1 ≤ l ≤ k."""
    if not 1 <= l <= k:
        raise ValueError(f"Leibniz entry undefined for {k=} {l=}")
    return QQ(1, l * comb(k, l))


def is_ele_cell(n: int, i: int, j: int) -> bool:
    if n >= 0:
        return (i >= 0 and j >= 0 and i + j == n) or (i > 0 and j > 0 and i + j == n + 1)
    return (i <= 0 and j <= 0 and i + j == n) or (i < 0 and j < 0 and i + j == n - 1)


def ele_cells(n: int) -> List[Bidegree]:
    """The 2|n|+1 generators (i,j)_n of E_n, sorted lexicographically."""
    if n >= 0:
        cells = [(i, n - i) for i in range(n + 1)] + [(i, n + 1 - i) for i in range(1, n + 1)]
    else:
        cells = [(i, n - i) for i in range(n, 1)] + [(i, n - 1 - i) for i in range(n, 0)]
    return sorted(cells)


def ele(n: int) -> Bicomplex:
    """E_n with ∂(i,j)_n = j·(i+1,j)_n and ∂̄(i,j)_n = −i·(i,j+1)_n."""
    cells = ele_cells(n)
    dels, delbars = {}, {}
    for i, j in cells:
        if is_ele_cell(n, i + 1, j):
            dels[(i, j)] = Matrix(1, 1, {0: {0: j}})
        if is_ele_cell(n, i, j + 1):
            delbars[(i, j)] = Matrix(1, 1, {0: {0: -i}})
    return Bicomplex({cell: 1 for cell in cells}, dels, delbars)


def inflation_layout(c: CochainComplex, cell: Bidegree) -> Layout:
    """Summands E_n ⊗ C^n of Inf(C) at a bidegree, labelled by n."""
    return Layout((n, c.dim(n)) for n in c.support if is_ele_cell(n, *cell))


def inflate(c: CochainComplex) -> Bicomplex:
    """
    Inf(C) = ⊕ₙ E_n ⊗ Cⁿ.

    ∂((i,j)_n⊗x) = j·(i+1,j)_n⊗x + (−1)^{i+j+n}(i+1,j)_{n+1}⊗dx and
    ∂̄((i,j)_n⊗x) = −i·(i,j+1)_n⊗x + (−1)^{i+j+n}(i,j+1)_{n+1}⊗dx, each term kept only
    when its generator is a cell.
    """
    cells = sorted({cell for n in c.support for cell in ele_cells(n)})
    layouts = {cell: inflation_layout(c, cell) for cell in cells}
    layouts = {cell: layout for cell, layout in layouts.items() if layout.dim}
    arrows: Dict[str, Dict[Bidegree, Matrix]] = {"del": {}, "delbar": {}}
    for name, step in (("del", (1, 0)), ("delbar", (0, 1))):
        for (i, j), source in layouts.items():
            cell = (i + step[0], j + step[1])
            target = layouts.get(cell)
            if target is None:
                continue
            coefficient = j if name == "del" else -i
            blocks = []
            for n in source.labels:
                blocks.append((n, n, Matrix.identity(c.dim(n), c.domain).scale(coefficient)))
                if is_ele_cell(n + 1, *cell):
                    blocks.append((n + 1, n, c.d(n).scale(sign(i + j + n))))
            arrows[name][(i, j)] = assemble(target, source, blocks, c.domain)
    return Bicomplex.from_arrows({cell: layout.dim for cell, layout in layouts.items()}, arrows, c.domain)


def inflate_map(f: ChainMorphism) -> BicomplexMorphism:
    """(i,j)_n⊗x ↦ (i,j)_n⊗f(x)."""
    source, target = inflate(f.source), inflate(f.target)
    blocks = {}
    for cell in source.support:
        source_layout, target_layout = inflation_layout(f.source, cell), inflation_layout(f.target, cell)
        blocks[cell] = assemble(target_layout, source_layout, [(n, n, f.block(n)) for n in source_layout.labels], f.domain)
    return BicomplexMorphism(source, target, blocks)


def unit_coefficients(n: int) -> List[Tuple[Bidegree, object]]:
    """The generators (p,q)_n and coefficients making up η(x) for x of degree n."""
    if n >= 0:
        return [((p, n - p), QQ(binomial(n, p))) for p in range(n + 1)]
    return [((p, n - 1 - p), sign(n) * leibniz(-n, -p)) for p in range(n, 0)]


def unit(c: CochainComplex) -> ChainMorphism:
    """
    η_C: C → 𝓑(Inf C).

    Degree n ≥ 0: x ↦ Σ_{p+q=n} binom(n,p)(p,q)_n⊗x; degree n < 0: x ↦ Σ (−1)^n L(−n,−p)(p,q)_n⊗x
    over p+q = n−1 with p,q ≤ −1, L being the Leibniz harmonic triangle.
    """
    inflated = inflate(c)
    target = bigolin_complex(inflated)
    layouts = bigolin_layouts(inflated)
    blocks = {}
    for n in c.support:
        layout = layouts[n]
        entries: Dict[int, Dict[int, object]] = {}
        for cell, coefficient in unit_coefficients(n):
            offset = layout.offset(cell) + inflation_layout(c, cell).offset(n)
            for k in range(c.dim(n)):
                entries.setdefault(offset + k, {})[k] = coefficient
        blocks[n] = Matrix(layout.dim, c.dim(n), entries, c.domain)
    return ChainMorphism(c, target, blocks)


def _counit_block(a: Bicomplex, layouts: Dict[int, Layout], cell: Bidegree, n: int) -> Matrix:
    """Counit on the summand (p,q)_n ⊗ 𝓑(a)^n of Inf(𝓑 a) at bidegree (p,q) = cell."""
    p, q = cell
    source = layouts[n]
    target = Layout([(cell, a.dim(cell))])
    blocks = []
    if p >= 0 and q >= 0:
        if n == p + q:
            blocks.append((cell, cell, Matrix.identity(a.dim(cell), a.domain).scale(QQ(1, comb(p + q, p)))))
        else:
            blocks.append((cell, (p - 1, q), a.del_at((p - 1, q)).scale(leibniz(p + q, p))))
            blocks.append((cell, (p, q - 1), a.delbar_at((p, q - 1)).scale(-leibniz(p + q, q))))
    else:
        overall = sign(p + q + 1)
        k = -p - q - 1
        if n == p + q + 1:
            blocks.append((cell, cell, Matrix.identity(a.dim(cell), a.domain).scale(overall * -p * comb(k, -p))))
        else:
            blocks.append((cell, (p - 1, q), a.del_at((p - 1, q)).scale(overall * binomial(k, -q - 1))))
            blocks.append((cell, (p, q - 1), a.delbar_at((p, q - 1)).scale(-overall * binomial(k, -p - 1))))
    return assemble(target, source, blocks, a.domain)


def counit(a: Bicomplex) -> BicomplexMorphism:
    """
    ε_A: Inf(𝓑 A) → A.

    For p,q ≥ 0: (p,q)_{p+q}⊗x ↦ x^{p,q}/binom(p+q,p) and
    (p,q)_{p+q−1}⊗y ↦ L(p+q,p)∂y^{p−1,q} − L(p+q,q)∂̄y^{p,q−1}.
    For p,q ≤ 0 off the origin, with k = −p−q−1: (p,q)_{p+q+1}⊗x ↦ (−1)^{p+q+1}(−p)binom(k,−p)x^{p,q} and
    (p,q)_{p+q}⊗y ↦ (−1)^{p+q+1}(binom(k,−q−1)∂y^{p−1,q} − binom(k,−p−1)∂̄y^{p,q−1}).
    """
    bigolin = bigolin_complex(a)
    layouts = bigolin_layouts(a)
    source = inflate(bigolin)
    blocks = {}
    for cell in source.support:
        inflation = inflation_layout(bigolin, cell)
        target = Layout([(cell, a.dim(cell))])
        pieces = [(cell, n, _counit_block(a, layouts, cell, n)) for n in inflation.labels]
        blocks[cell] = assemble(target, inflation, pieces, a.domain)
    return BicomplexMorphism(source, a, blocks)


def adjunct_to_chain(g: BicomplexMorphism, c: CochainComplex) -> ChainMorphism:
    """Transposes g: Inf(C) → A into 𝓑(g) ∘ η_C: C → 𝓑(A)."""
    if g.source != inflate(c):
        raise ShapeError("adjunct source", "Inf(C)", "another bicomplex")
    return compose(bigolin_map(g), unit(c))


def adjunct_to_bicomplex(h: ChainMorphism, a: Bicomplex) -> BicomplexMorphism:
    """Transposes h: C → 𝓑(A) into ε_A ∘ Inf(h): Inf(C) → A."""
    if h.target != bigolin_complex(a):
        raise ShapeError("adjunct target", "𝓑(A)", "another cochain complex")
    return compose(counit(a), inflate_map(h))


def adjunct(morphism, obj):
    """
    Adjunct transposition in either direction.

    Args:
        morphism: A bicomplex morphism Inf(C) → A, or a chain morphism C → 𝓑(A).
        obj: C in the first case, A in the second.
    """
    if isinstance(morphism, BicomplexMorphism):
        return adjunct_to_chain(morphism, obj)
    return adjunct_to_bicomplex(morphism, obj)


def row_complex(a: Bicomplex) -> CochainComplex:
    """The nonnegative part of the q = 0 row of a, with ∂ as differential."""
    dims = {p: dim for (p, q), dim in a.dims.items() if q == 0 and p >= 0}
    return CochainComplex(dims, {p: a.del_at((p, 0)) for p in dims if p + 1 in dims}, a.domain)


class TriangleDefects(NamedTuple):
    """
    Deviations of the two triangle composites from the identity.

    Attributes:
        inflation_side: Per bidegree, ε_{Inf C} ∘ Inf(η_C) − id on Inf(C).
        bigolin_side: Per degree, 𝓑(ε_A) ∘ η_{𝓑 A} − id on 𝓑(A).
    """
    inflation_side: Dict[Bidegree, Matrix]
    bigolin_side: Dict[int, Matrix]

    @property
    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.inflation_side.values()) and all(m.is_zero() for m in self.bigolin_side.values())


def _identity_defects(f) -> Dict:
    return {key: f.block(key) - Matrix.identity(f.source.dim(key), f.domain) for key in f.source.support}


def triangle_defects(c: CochainComplex, a: Bicomplex) -> TriangleDefects:
    inflation_side = compose(counit(inflate(c)), inflate_map(unit(c)))
    bigolin_side = compose(bigolin_map(counit(a)), unit(bigolin_complex(a)))
    defects = TriangleDefects(_identity_defects(inflation_side), _identity_defects(bigolin_side))
    logger.debug(f"{defects.is_zero=}")
    return defects
