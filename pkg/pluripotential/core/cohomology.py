"""
Bott-Chern, Aeppli, Dolbeault and total cohomology of finite bicomplexes, the maps they
induce, and the decisions built on them: pluripotential weak equivalence, acyclicity,
the ∂∂̄-lemma and homotopy.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from sympy.polys.domains import QQ

from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, BigradedLinearMap, CochainComplex, GradedMap, Key, Layout,
    devectorize, internal_hom, total_degree, totalize, totalize_map, vectorize,
)
from pluripotential.core.exactlin import (
    Matrix, Subquotient, image, induced_subquotient_map, is_isomorphism, kernel, solve,
)
from pluripotential.core.exception import DomainRestrictionError, ShapeError

logger = logging.getLogger(__name__)


class Theory(Enum):
    BOTT_CHERN = "bc"
    AEPPLI = "aeppli"
    DEL = "del"
    DELBAR = "delbar"
    TOTAL = "total"


@dataclass
class CohomologyTable:
    """
    Cohomology of one theory, (bi)degree by (bi)degree.

    Attributes:
        theory: Which cohomology this is.
        entries: Subquotient per (bi)degree of the support, including zero-dimensional ones.
    """
    theory: Theory
    entries: Dict[Key, Subquotient] = field(default_factory=dict)

    def __getitem__(self, key: Key) -> Subquotient:
        return self.entries[key]

    def dim(self, key: Key) -> int:
        entry = self.entries.get(key)
        return entry.dim if entry is not None else 0

    @property
    def dims(self) -> Dict[Key, int]:
        """Nonzero dimensions only."""
        return {key: entry.dim for key, entry in self.entries.items() if entry.dim}

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return not self.dims


def _require_rational(x) -> None:
    if x.domain != QQ:
        raise DomainRestrictionError("cohomology", "Gaussian data must be realified before computing cohomology")


def _table(theory: Theory, keys, numerator, denominator) -> CohomologyTable:
    table = CohomologyTable(theory)
    for key in keys:
        table.entries[key] = Subquotient.of(kernel(numerator(key)), image(denominator(key)))
    logger.debug(f"{theory=} {table.dims=}")
    return table


def bott_chern(a: Bicomplex) -> CohomologyTable:
    """H_BC = (ker ∂ ∩ ker ∂̄) / im ∂∂̄."""
    _require_rational(a)
    return _table(
        Theory.BOTT_CHERN, a.support,
        lambda key: Matrix.vstack([a.del_at(key), a.delbar_at(key)], a.dim(key)),
        lambda key: a.ddbar_at((key[0] - 1, key[1] - 1)),
    )


def aeppli(a: Bicomplex) -> CohomologyTable:
    """H_A = ker ∂∂̄ / (im ∂ + im ∂̄)."""
    _require_rational(a)
    return _table(
        Theory.AEPPLI, a.support,
        a.ddbar_at,
        lambda key: Matrix.hstack([a.del_at((key[0] - 1, key[1])), a.delbar_at((key[0], key[1] - 1))], a.dim(key)),
    )


def dolbeault(a: Bicomplex, side: str = "column") -> CohomologyTable:
    """
    Cohomology of a single differential: side "row" uses ∂, side "column" uses ∂̄.
    """
    _require_rational(a)
    if side not in ("row", "column"):
        raise ValueError(f"Unknown Dolbeault {side=}")
    name = "del" if side == "row" else "delbar"
    step = a.step(name)
    return _table(
        Theory.DEL if side == "row" else Theory.DELBAR, a.support,
        lambda key: a.arrow(name, key),
        lambda key: a.arrow(name, (key[0] - step[0], key[1] - step[1])),
    )


def total_cohomology(a: Union[Bicomplex, CochainComplex]) -> CohomologyTable:
    if isinstance(a, Bicomplex):
        a = totalize(a)
    _require_rational(a)
    return _table(Theory.TOTAL, a.support, a.d, lambda n: a.d(n - 1))


def cohomology(a: Union[Bicomplex, CochainComplex], theory: Theory) -> CohomologyTable:
    if theory is Theory.TOTAL:
        return total_cohomology(a)
    if not isinstance(a, Bicomplex):
        raise DomainRestrictionError(f"{theory.value} cohomology", "needs a bicomplex")
    if theory is Theory.BOTT_CHERN:
        return bott_chern(a)
    if theory is Theory.AEPPLI:
        return aeppli(a)
    return dolbeault(a, "row" if theory is Theory.DEL else "column")


def induced_map(f: GradedMap, theory: Theory) -> Dict[Key, Matrix]:
    """
    Matrices of the map f induces on cohomology, on the representative bases of both tables.

    Raises:
        InclusionError: If f is not a morphism, so it fails to respect cycles or boundaries.
    """
    if theory is Theory.TOTAL and isinstance(f, BicomplexMorphism):
        f = totalize_map(f)
    source, target = cohomology(f.source, theory), cohomology(f.target, theory)
    keys = sorted(set(source.entries) | set(target.entries))
    maps = {}
    for key in keys:
        source_entry = source.entries.get(key) or _empty(f.source.dim(key))
        target_entry = target.entries.get(key) or _empty(f.target.dim(key))
        maps[key] = induced_subquotient_map(f.block(key), source_entry, target_entry)
    return maps


def _empty(ambient: int) -> Subquotient:
    return Subquotient.of(kernel(Matrix.identity(ambient)), image(Matrix.zeros(ambient, 0)))


@dataclass
class WeqVerdict:
    """
    Outcome of a weak-equivalence test.

    Attributes:
        is_weq: Whether every induced map is an isomorphism.
        failures: (bidegree, theory) pairs where the induced map is not invertible.
    """
    is_weq: bool
    failures: List[Tuple[Key, Theory]] = field(default_factory=list)
    source_tables: Dict[Theory, CohomologyTable] = field(default_factory=dict)
    target_tables: Dict[Theory, CohomologyTable] = field(default_factory=dict)


def is_pluripotential_weq(f: BicomplexMorphism) -> WeqVerdict:
    """A morphism is a pluripotential weak equivalence when it is invertible on H_BC and H_A."""
    verdict = WeqVerdict(True)
    for theory in (Theory.BOTT_CHERN, Theory.AEPPLI):
        verdict.source_tables[theory] = cohomology(f.source, theory)
        verdict.target_tables[theory] = cohomology(f.target, theory)
        for key, matrix in induced_map(f, theory).items():
            if not is_isomorphism(matrix):
                verdict.failures.append((key, theory))
    verdict.is_weq = not verdict.failures
    logger.info(f"{verdict.is_weq=} {verdict.failures=}")
    return verdict


def is_pluripotential_acyclic(a: Bicomplex) -> bool:
    return bott_chern(a).is_zero() and aeppli(a).is_zero()


@dataclass
class DdbarVerdict:
    holds: bool
    failing: Optional[Key] = None
    failures: List[Key] = field(default_factory=list)


def ddbar_lemma(a: Bicomplex) -> DdbarVerdict:
    """
    Decides the ∂∂̄-lemma by checking that the identity induces isomorphisms H_BC → H_A.

    Failing bidegrees are ordered by total degree, then by q.
    """
    bc, ae = bott_chern(a), aeppli(a)
    failures = []
    for key in sorted(a.support, key=lambda key: (total_degree(key), key[1])):
        induced = induced_subquotient_map(Matrix.identity(a.dim(key)), bc[key], ae[key])
        if not is_isomorphism(induced):
            failures.append(key)
    return DdbarVerdict(not failures, failures[0] if failures else None, failures)


def comparison_maps(a: Bicomplex) -> Dict[str, Dict[Key, Matrix]]:
    """
    The natural maps between the cohomologies of a bicomplex.

    Maps into or out of total cohomology are given per bidegree (p,q): H_BC^{p,q} → H^{p+q}
    through the inclusion of a^{p,q}, and H^{p+q} → H_A^{p,q} through the projection onto it.
    """
    tables = {theory: cohomology(a, theory) for theory in (Theory.BOTT_CHERN, Theory.AEPPLI, Theory.DEL, Theory.DELBAR)}
    total = total_cohomology(a)
    maps: Dict[str, Dict[Key, Matrix]] = {}
    pairs = [
        ("bc->del", Theory.BOTT_CHERN, Theory.DEL),
        ("bc->delbar", Theory.BOTT_CHERN, Theory.DELBAR),
        ("bc->aeppli", Theory.BOTT_CHERN, Theory.AEPPLI),
        ("del->aeppli", Theory.DEL, Theory.AEPPLI),
        ("delbar->aeppli", Theory.DELBAR, Theory.AEPPLI),
    ]
    for name, source, target in pairs:
        maps[name] = {
            key: induced_subquotient_map(Matrix.identity(a.dim(key)), tables[source][key], tables[target][key])
            for key in a.support
        }
    maps["bc->total"], maps["total->aeppli"] = {}, {}
    for key in a.support:
        n = total_degree(key)
        layout = Layout((cell, a.dim(cell)) for cell in a.support if total_degree(cell) == n)
        maps["bc->total"][key] = induced_subquotient_map(layout.inclusion(key), tables[Theory.BOTT_CHERN][key], total[n])
        maps["total->aeppli"][key] = induced_subquotient_map(layout.projection(key), total[n], tables[Theory.AEPPLI][key])
    return maps


def homotopy_defect(f: BicomplexMorphism, g: BicomplexMorphism, h: BigradedLinearMap) -> Dict[Key, Matrix]:
    """
    f − g − (∂∂̄h − ∂h∂̄ + ∂̄h∂ + h∂∂̄), bidegree by bidegree of the source.

    Args:
        f (BicomplexMorphism): Morphism a → b.
        g (BicomplexMorphism): Morphism a → b.
        h (BigradedLinearMap): Map a → b of bidegree (−1,−1).

    Returns:
        Dict[Key, Matrix]: Defect blocks a^{p,q} → b^{p,q}; all zero exactly when h is a homotopy from f to g.
    """
    if f.source != g.source or f.target != g.target or h.source != f.source or h.target != f.target:
        raise ShapeError("homotopy_defect", "f, g, h sharing source and target", "mismatched spaces")
    if h.offset != (-1, -1):
        raise ShapeError("homotopy offset", (-1, -1), h.offset)
    a, b = f.source, f.target
    defects = {}
    for p, q in a.support:
        expansion = (
            b.del_at((p - 1, q)) @ b.delbar_at((p - 1, q - 1)) @ h.block((p, q))
            - b.del_at((p - 1, q)) @ h.block((p, q + 1)) @ a.delbar_at((p, q))
            + b.delbar_at((p, q - 1)) @ h.block((p + 1, q)) @ a.del_at((p, q))
            + h.block((p + 1, q + 1)) @ a.del_at((p, q + 1)) @ a.delbar_at((p, q))
        )
        defects[(p, q)] = f.block((p, q)) - g.block((p, q)) - expansion
    return defects


def is_homotopy(f: BicomplexMorphism, g: BicomplexMorphism, h: BigradedLinearMap) -> bool:
    return all(defect.is_zero() for defect in homotopy_defect(f, g, h).values())


def solve_homotopy(f: BicomplexMorphism, g: BicomplexMorphism) -> Optional[BigradedLinearMap]:
    """
    Finds a pluripotential homotopy from f to g, or None when none exists.

    The homotopies are the solutions h ∈ Hom^{−1,−1} of ∂∂̄h = f − g in the internal Hom.
    """
    hom = internal_hom(f.source, f.target)
    operator = hom.del_at((-1, 0)) @ hom.delbar_at((-1, -1))
    solution = solve(operator, vectorize(f - g))
    logger.debug(f"{operator.shape=} {solution is not None=}")
    if solution is None:
        return None
    return devectorize(f.source, f.target, (-1, -1), solution, BigradedLinearMap)
