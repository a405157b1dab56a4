"""
The Bigolin complex 𝓑_{p,q} of a bicomplex and its action on morphisms.

Below the junction degree p+q−1 the complex collects the cells (r,s) with r+s = k−1,
r < p and s < q; from degree p+q on it collects the cells with r+s = k, r ≥ p and s ≥ q.
The differential is the projected total differential below, −∂∂̄ across the junction
(p−1,q−1) → (p,q), and ∂+∂̄ above.
"""
import logging
from typing import Dict, NamedTuple

from pluripotential.core.cohomology import aeppli, bott_chern, total_cohomology
from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, Bidegree, ChainMorphism, CochainComplex, Layout, assemble,
)
from pluripotential.core.exactlin import Matrix

logger = logging.getLogger(__name__)


def _is_upper(cell: Bidegree, p: int, q: int) -> bool:
    return cell[0] >= p and cell[1] >= q


def _is_lower(cell: Bidegree, p: int, q: int) -> bool:
    return cell[0] < p and cell[1] < q


def bigolin_degree(cell: Bidegree, p: int, q: int):
    """Degree in which a cell of the bicomplex appears in 𝓑_{p,q}, or None when it is dropped."""
    if _is_upper(cell, p, q):
        return cell[0] + cell[1]
    if _is_lower(cell, p, q):
        return cell[0] + cell[1] + 1
    return None


def bigolin_layouts(a: Bicomplex, p: int = 0, q: int = 0) -> Dict[int, Layout]:
    """Per degree, the cells of a making up 𝓑_{p,q}(a), in lexicographic order."""
    degrees: Dict[int, list] = {}
    for cell in a.support:
        k = bigolin_degree(cell, p, q)
        if k is not None:
            degrees.setdefault(k, []).append(cell)
    return {k: Layout((cell, a.dim(cell)) for cell in sorted(cells)) for k, cells in sorted(degrees.items())}


def bigolin_complex(a: Bicomplex, p: int = 0, q: int = 0) -> CochainComplex:
    """
    Builds 𝓑_{p,q}(a).

    Args:
        a (Bicomplex): A valid bicomplex.
        p (int): First junction index.
        q (int): Second junction index.

    Returns:
        CochainComplex: The Bigolin complex, with summands ordered lexicographically inside each degree.
    """
    layouts = bigolin_layouts(a, p, q)
    differential = {}
    for k, source in layouts.items():
        target = layouts.get(k + 1)
        if target is None:
            continue
        if k == p + q - 1:
            corner = (p - 1, q - 1)
            # −∂∂̄ rather than ∂∂̄: with the unit coefficients of inflation this keeps η a chain map.
            blocks = [((p, q), corner, -a.ddbar_at(corner))]
        else:
            blocks = []
            for r, s in source.labels:
                blocks.append(((r + 1, s), (r, s), a.del_at((r, s))))
                blocks.append(((r, s + 1), (r, s), a.delbar_at((r, s))))
        differential[k] = assemble(target, source, blocks, a.domain)
    logger.debug(f"{p=} {q=} {sorted(layouts)=}")
    return CochainComplex({k: layout.dim for k, layout in layouts.items()}, differential, a.domain)


def bigolin_map(f: BicomplexMorphism, p: int = 0, q: int = 0) -> ChainMorphism:
    """𝓑_{p,q}(f): f restricted cell by cell to the cells 𝓑_{p,q} keeps."""
    source_layouts, target_layouts = bigolin_layouts(f.source, p, q), bigolin_layouts(f.target, p, q)
    blocks = {}
    for k, source in source_layouts.items():
        target = target_layouts.get(k)
        if target is None:
            continue
        blocks[k] = assemble(target, source, [(cell, cell, f.block(cell)) for cell in source.labels], f.domain)
    return ChainMorphism(bigolin_complex(f.source, p, q), bigolin_complex(f.target, p, q), blocks)


def bigolin_cell_inclusion(a: Bicomplex, cell: Bidegree, p: int = 0, q: int = 0) -> Matrix:
    """Inclusion of a^{cell} into the degree of 𝓑_{p,q}(a) it belongs to."""
    k = bigolin_degree(cell, p, q)
    return bigolin_layouts(a, p, q)[k].inclusion(cell, a.domain)


class BigolinIdentification(NamedTuple):
    """Dimensions that the Bigolin complex identifies with Bott-Chern and Aeppli groups."""
    top_degree: int
    top_cohomology: int
    bott_chern: int
    junction_degree: int
    junction_cohomology: int
    aeppli: int

    @property
    def holds(self) -> bool:
        return self.top_cohomology == self.bott_chern and self.junction_cohomology == self.aeppli


def bigolin_identification(a: Bicomplex, p: int, q: int) -> BigolinIdentification:
    """
    H^{p+q}(𝓑_{p,q} a) against H_BC^{p,q}(a) and H^{p+q−1}(𝓑_{p,q} a) against H_A^{p−1,q−1}(a).
    """
    table = total_cohomology(bigolin_complex(a, p, q))
    return BigolinIdentification(
        p + q, table.dim(p + q), bott_chern(a).dim((p, q)),
        p + q - 1, table.dim(p + q - 1), aeppli(a).dim((p - 1, q - 1)),
    )
