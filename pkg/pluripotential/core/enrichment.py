"""
Enrichment of bicomplexes over cochain complexes through 𝓔 = 𝓑 ∘ τ, and the
normalized chains of standard simplices that represent its simplicial Hom.
"""
import logging
from itertools import combinations
from typing import Dict, List, NamedTuple, Tuple

from pluripotential.core.bigolin import bigolin_complex, bigolin_map
from pluripotential.core.complexes import (
    Bicomplex, ChainMorphism, CochainComplex, compose, corestrict_to_truncation, hom_composition, internal_hom,
    morphism_space, sign, tensor, tensor_maps, truncate_third_quadrant, truncation_inclusion,
)
from pluripotential.core.exactlin import Matrix, image, subquotient_dim
from pluripotential.core.exception import DomainRestrictionError
from pluripotential.core.inflation import inflate
from pluripotential.core.monoidal import lax_phi_tilde

logger = logging.getLogger(__name__)


def script_e(a: Bicomplex) -> CochainComplex:
    """𝓔(a) = 𝓑(τ a), a nonpositively graded cochain complex."""
    return bigolin_complex(truncate_third_quadrant(a))


def dg_hom(a: Bicomplex, b: Bicomplex) -> CochainComplex:
    """The mapping complex [a, b] = 𝓔(Hom(a, b)); its degree-0 cocycles are the morphisms a → b."""
    return script_e(internal_hom(a, b))


def dg_compose(a: Bicomplex, b: Bicomplex, c: Bicomplex) -> ChainMorphism:
    """
    Composition [b,c] ⊗ [a,b] → [a,c].

    The lax map φ̃ of 𝓑 on the truncated Hom bicomplexes is followed by 𝓑 of internal-Hom
    composition, restricted to τHom(b,c) ⊗ τHom(a,b) and factored through τHom(a,c).
    """
    hom_bc, hom_ab = internal_hom(b, c), internal_hom(a, b)
    inclusion_bc, inclusion_ab = truncation_inclusion(hom_bc), truncation_inclusion(hom_ab)
    composition = compose(hom_composition(a, b, c), tensor_maps(inclusion_bc, inclusion_ab))
    truncated = corestrict_to_truncation(composition)
    lax = lax_phi_tilde(inclusion_bc.source, inclusion_ab.source)
    return compose(bigolin_map(truncated), lax)


def morphisms_modulo_homotopy(a: Bicomplex, b: Bicomplex) -> int:
    """Dimension of Hom(a, b) modulo the morphisms ∂∂̄h with h of bidegree (−1,−1)."""
    hom = internal_hom(a, b)
    boundaries = image(hom.del_at((-1, 0)) @ hom.delbar_at((-1, -1)))
    return subquotient_dim(morphism_space(a, b), boundaries)


def simplices(n: int, j: int) -> List[Tuple[int, ...]]:
    """Nondegenerate j-simplices of Δⁿ, as increasing vertex tuples in lexicographic order."""
    return list(combinations(range(n + 1), j + 1))


def normalized_simplex_chains(n: int) -> CochainComplex:
    """
    Normalized chains of Δⁿ in cochain degrees −n..0: degree −j is spanned by the j-simplices and
    d(σ) = Σ_i (−1)^i ∂_i σ.
    """
    if n < 0:
        raise DomainRestrictionError("normalized_simplex_chains", f"simplex dimension must be nonnegative, got {n=}")
    differential = {}
    for j in range(1, n + 1):
        faces = {face: index for index, face in enumerate(simplices(n, j - 1))}
        entries: Dict[int, Dict[int, object]] = {}
        for column, simplex in enumerate(simplices(n, j)):
            for i in range(j + 1):
                face = simplex[:i] + simplex[i + 1:]
                entries.setdefault(faces[face], {})[column] = sign(i)
        differential[-j] = Matrix(len(faces), len(simplices(n, j)), entries)
    return CochainComplex({-j: len(simplices(n, j)) for j in range(n + 1)}, differential)


class SimplicialHomDims(NamedTuple):
    chain_maps: int
    bicomplex_maps: int

    @property
    def agree(self) -> bool:
        return self.chain_maps == self.bicomplex_maps


def simplicial_hom_dim(a: Bicomplex, b: Bicomplex, n: int) -> SimplicialHomDims:
    """
    Dimensions of Hom_Ch(N(Δⁿ), 𝓔 Hom(a, b)) and Hom_BiCo(Inf N(Δⁿ) ⊗ a, b).
    """
    chains = normalized_simplex_chains(n)
    dims = SimplicialHomDims(
        morphism_space(chains, dg_hom(a, b)).dim,
        morphism_space(tensor(inflate(chains), a), b).dim,
    )
    logger.debug(f"{n=} {dims=}")
    return dims
