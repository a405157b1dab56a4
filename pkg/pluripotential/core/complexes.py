"""
Cochain complexes, bicomplexes and their morphisms, with tensor, internal Hom,
shift, truncation, totalization and direct sums.

Both kinds of object are graded spaces with a fixed set of arrow directions:
a cochain complex has the single direction "d" of degree +1, a bicomplex has
"del" of bidegree (1,0) and "delbar" of bidegree (0,1). Every construction
below is written once against that description.

Basis ordering inside a direct sum follows the order of the summand keys:
lexicographic in the (bi)degree of the left factor for tensor products, in the
source (bi)degree for internal Hom. Inside a tensor summand the left index is
major, so the pair (i, k) sits at i * dim(right) + k.
"""
from functools import singledispatch
import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ

from pluripotential.core.exactlin import Matrix, Subspace, kernel, to_scalar, unify_domains
from pluripotential.core.exception import DomainRestrictionError, InclusionError, ShapeError

logger = logging.getLogger(__name__)

Bidegree = Tuple[int, int]
Key = Union[int, Bidegree]


def add_keys(key: Key, step: Key) -> Key:
    if isinstance(key, int):
        return key + step
    return (key[0] + step[0], key[1] + step[1])


def subtract_keys(key: Key, step: Key) -> Key:
    if isinstance(key, int):
        return key - step
    return (key[0] - step[0], key[1] - step[1])


def total_degree(key: Key) -> int:
    return key if isinstance(key, int) else key[0] + key[1]


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _normalize_key(key) -> Key:
    if isinstance(key, int):
        return key
    return tuple(int(x) for x in key)


class Layout:
    """Ordered decomposition of a vector space into labelled summands; empty summands are skipped."""

    def __init__(self, parts: Iterable[Tuple[Hashable, int]]) -> None:
        self._offsets: Dict[Hashable, int] = {}
        self._sizes: Dict[Hashable, int] = {}
        offset = 0
        for label, size in parts:
            if size <= 0:
                continue
            self._offsets[label] = offset
            self._sizes[label] = size
            offset += size
        self.dim = offset

    @property
    def labels(self) -> List[Hashable]:
        return list(self._offsets)

    def __contains__(self, label) -> bool:
        return label in self._offsets

    def offset(self, label) -> int:
        return self._offsets[label]

    def size(self, label) -> int:
        return self._sizes[label]

    def items(self) -> Iterable[Tuple[Hashable, int, int]]:
        for label, offset in self._offsets.items():
            yield label, offset, self._sizes[label]

    def inclusion(self, label, domain=QQ) -> Matrix:
        offset = self._offsets[label]
        return Matrix(self.dim, self._sizes[label], {offset + i: {i: 1} for i in range(self._sizes[label])}, domain)

    def projection(self, label, domain=QQ) -> Matrix:
        return self.inclusion(label, domain).transpose()


def assemble(target: Layout, source: Layout, blocks: Iterable[Tuple[Hashable, Hashable, Matrix]], domain=QQ) -> Matrix:
    """
    Builds a matrix from (target label, source label, block) triples; blocks landing on the same
    position are summed and labels missing from a layout are ignored.
    """
    entries: Dict[int, Dict[int, object]] = {}
    for target_label, source_label, block in blocks:
        if target_label not in target or source_label not in source:
            continue
        expected = (target.size(target_label), source.size(source_label))
        if block.shape != expected:
            raise ShapeError(f"block {target_label}<-{source_label}", expected, block.shape)
        row_offset, col_offset = target.offset(target_label), source.offset(source_label)
        for i, j, value in block.items():
            row = entries.setdefault(row_offset + i, {})
            position = col_offset + j
            row[position] = row.get(position, 0) + to_scalar(value, domain)
    return Matrix(target.dim, source.dim, entries, domain)


class GradedSpace:
    """
    Finite-support graded vector space with arrows of fixed (bi)degree.

    Attributes:
        domain: QQ or QQ_I.
        DIRECTIONS: (name, step) pairs of the arrows.
    """
    DIRECTIONS: Tuple[Tuple[str, Key], ...] = ()
    ZERO_KEY: Key = 0
    KIND = "graded"

    def __init__(self, dims: Mapping[Key, int], arrows: Optional[Mapping[str, Mapping[Key, Matrix]]] = None, domain=QQ) -> None:
        self.domain = domain
        self._dims: Dict[Key, int] = {}
        for key, dim in sorted((_normalize_key(k), int(v)) for k, v in dims.items()):
            if dim < 0:
                raise ShapeError(f"space {key}", "nonnegative", dim)
            if dim:
                self._dims[key] = dim
        arrows = arrows or {}
        names = {name for name, _ in self.DIRECTIONS}
        unknown = set(arrows) - names
        if unknown:
            raise ValueError(f"Unknown arrow directions {sorted(unknown)} for {self.KIND}")
        self._arrows: Dict[str, Dict[Key, Matrix]] = {}
        for name, step in self.DIRECTIONS:
            blocks: Dict[Key, Matrix] = {}
            for key, matrix in (arrows.get(name) or {}).items():
                key = _normalize_key(key)
                expected = (self.dim(add_keys(key, step)), self.dim(key))
                if matrix.shape != expected:
                    raise ShapeError(f"{name}{key}", expected, matrix.shape)
                matrix = matrix.convert(domain)
                if not matrix.is_zero():
                    blocks[key] = matrix
            self._arrows[name] = dict(sorted(blocks.items()))

    @classmethod
    def from_arrows(cls, dims: Mapping[Key, int], arrows: Mapping[str, Mapping[Key, Matrix]], domain=QQ) -> "GradedSpace":
        obj = cls.__new__(cls)
        GradedSpace.__init__(obj, dims, arrows, domain)
        return obj

    @classmethod
    def zero(cls, domain=QQ) -> "GradedSpace":
        return cls.from_arrows({}, {}, domain)

    @classmethod
    def point(cls, key: Optional[Key] = None, dim: int = 1, domain=QQ) -> "GradedSpace":
        return cls.from_arrows({cls.ZERO_KEY if key is None else key: dim}, {}, domain)

    def dim(self, key: Key) -> int:
        return self._dims.get(_normalize_key(key), 0)

    @property
    def dims(self) -> Dict[Key, int]:
        return dict(self._dims)

    @property
    def support(self) -> Tuple[Key, ...]:
        return tuple(self._dims)

    @property
    def total_dim(self) -> int:
        return sum(self._dims.values())

    def step(self, name: str) -> Key:
        return dict(self.DIRECTIONS)[name]

    def arrow(self, name: str, key: Key) -> Matrix:
        key = _normalize_key(key)
        block = self._arrows[name].get(key)
        if block is not None:
            return block
        return Matrix.zeros(self.dim(add_keys(key, self.step(name))), self.dim(key), self.domain)

    def arrow_blocks(self, name: str) -> Dict[Key, Matrix]:
        return dict(self._arrows[name])

    @property
    def arrows(self) -> Dict[str, Dict[Key, Matrix]]:
        return {name: dict(blocks) for name, blocks in self._arrows.items()}

    def convert(self, domain) -> "GradedSpace":
        if domain == self.domain:
            return self
        return type(self).from_arrows(self._dims, self._arrows, domain)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.domain == other.domain and self._dims == other._dims and self._arrows == other._arrows

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dims={self._dims}, arrows={ {n: len(b) for n, b in self._arrows.items()} })"


class CochainComplex(GradedSpace):
    DIRECTIONS = (("d", 1),)
    ZERO_KEY = 0
    KIND = "cochain"

    def __init__(self, dims: Mapping[int, int], differential: Optional[Mapping[int, Matrix]] = None, domain=QQ) -> None:
        super().__init__(dims, {"d": differential or {}}, domain)

    def d(self, n: int) -> Matrix:
        return self.arrow("d", n)

    @classmethod
    def disk(cls, n: int, domain=QQ) -> "CochainComplex":
        """𝐤 in degree n mapping identically onto 𝐤 in degree n+1."""
        return cls({n: 1, n + 1: 1}, {n: Matrix.identity(1, domain)}, domain)


class Bicomplex(GradedSpace):
    DIRECTIONS = (("del", (1, 0)), ("delbar", (0, 1)))
    ZERO_KEY = (0, 0)
    KIND = "bicomplex"

    def __init__(self, dims: Mapping[Bidegree, int], dels: Optional[Mapping[Bidegree, Matrix]] = None,
                 delbars: Optional[Mapping[Bidegree, Matrix]] = None, domain=QQ) -> None:
        super().__init__(dims, {"del": dels or {}, "delbar": delbars or {}}, domain)

    def del_at(self, bidegree: Bidegree) -> Matrix:
        return self.arrow("del", bidegree)

    def delbar_at(self, bidegree: Bidegree) -> Matrix:
        return self.arrow("delbar", bidegree)

    def ddbar_at(self, bidegree: Bidegree) -> Matrix:
        """∂∂̄ out of (p,q), landing in (p+1,q+1)."""
        p, q = bidegree
        return self.del_at((p, q + 1)) @ self.delbar_at((p, q))

    @classmethod
    def square(cls, corner: Bidegree = (-1, -1), domain=QQ) -> "Bicomplex":
        """Four one-dimensional cells with lower-left corner `corner` and invertible arrows."""
        p, q = corner
        one = Matrix.identity(1, domain)
        return cls(
            {(p, q): 1, (p + 1, q): 1, (p, q + 1): 1, (p + 1, q + 1): 1},
            {(p, q): one, (p, q + 1): one},
            {(p, q): one, (p + 1, q): -one},
            domain,
        )


class GradedMap:
    """
    Degree-`offset` linear map between graded spaces of the same kind, stored blockwise.

    block(key) maps source(key) to target(key + offset).
    """
    DEFAULT_OFFSET: Key = 0

    def __init__(self, source: GradedSpace, target: GradedSpace, blocks: Optional[Mapping[Key, Matrix]] = None,
                 offset: Optional[Key] = None) -> None:
        if type(source) is not type(target):
            raise TypeError(f"Source and target kinds differ: {type(source).__name__} vs {type(target).__name__}")
        self.source = source
        self.target = target
        self.offset = _normalize_key(self.DEFAULT_OFFSET if offset is None else offset)
        self.domain = unify_domains(source.domain, target.domain)
        self._blocks: Dict[Key, Matrix] = {}
        for key, matrix in (blocks or {}).items():
            key = _normalize_key(key)
            expected = (target.dim(add_keys(key, self.offset)), source.dim(key))
            if matrix.shape != expected:
                raise ShapeError(f"block{key}", expected, matrix.shape)
            if not matrix.is_zero():
                self._blocks[key] = matrix.convert(self.domain)

    def block(self, key: Key) -> Matrix:
        key = _normalize_key(key)
        found = self._blocks.get(key)
        if found is not None:
            return found
        return Matrix.zeros(self.target.dim(add_keys(key, self.offset)), self.source.dim(key), self.domain)

    @property
    def blocks(self) -> Dict[Key, Matrix]:
        return dict(sorted(self._blocks.items()))

    def _rebuild(self, blocks: Mapping[Key, Matrix], source=None, target=None, offset=None) -> "GradedMap":
        return type(self)(source or self.source, target or self.target, blocks, self.offset if offset is None else offset)

    def is_zero(self) -> bool:
        return not self._blocks

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.offset == other.offset and self._blocks == other._blocks)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        keys = set(self._blocks) | set(other._blocks)
        return self._rebuild({key: self.block(key) + other.block(key) for key in keys})

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        keys = set(self._blocks) | set(other._blocks)
        return self._rebuild({key: self.block(key) - other.block(key) for key in keys})

    def __neg__(self) -> "GradedMap":
        return self.scale(-1)

    def scale(self, factor) -> "GradedMap":
        return self._rebuild({key: block.scale(factor) for key, block in self._blocks.items()})

    def __repr__(self) -> str:
        return f"{type(self).__name__}(offset={self.offset}, blocks={self.blocks})"

    @classmethod
    def identity(cls, space: GradedSpace) -> "GradedMap":
        return cls(space, space, {key: Matrix.identity(space.dim(key), space.domain) for key in space.support})

    @classmethod
    def zero(cls, source: GradedSpace, target: GradedSpace, offset: Optional[Key] = None) -> "GradedMap":
        return cls(source, target, {}, offset)


class GradedLinearMap(GradedMap):
    DEFAULT_OFFSET = 0


class ChainMorphism(GradedLinearMap):
    pass


class BigradedLinearMap(GradedMap):
    DEFAULT_OFFSET = (0, 0)


class BicomplexMorphism(BigradedLinearMap):
    pass


MORPHISM_CLASSES = {CochainComplex: ChainMorphism, Bicomplex: BicomplexMorphism}


def morphism_class(space: GradedSpace):
    return MORPHISM_CLASSES[type(space)]


def compose(g: GradedMap, f: GradedMap) -> GradedMap:
    """g ∘ f."""
    if f.target != g.source:
        raise ShapeError("compose", "f.target == g.source", "mismatched spaces")
    offset = add_keys(f.offset, g.offset)
    blocks = {key: g.block(add_keys(key, f.offset)) @ f.block(key) for key in f.source.support}
    if isinstance(f, (ChainMorphism, BicomplexMorphism)) and isinstance(g, (ChainMorphism, BicomplexMorphism)):
        cls = morphism_class(f.source)
    else:
        cls = GradedLinearMap if isinstance(f.source, CochainComplex) else BigradedLinearMap
    return cls(f.source, g.target, blocks, offset)


@dataclass
class Defect:
    location: Key
    relation: str
    matrix: Matrix


@dataclass
class ValidationReport:
    kind: str
    defects: List[Defect] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.defects

    def summary(self) -> str:
        if self.is_valid:
            return "valid"
        return "; ".join(f"{defect.relation} at {defect.location}" for defect in self.defects)


_RELATION_NAMES = {
    ("d", "d"): "d∘d",
    ("del", "del"): "∂∘∂",
    ("delbar", "delbar"): "∂̄∘∂̄",
    ("del", "delbar"): "∂∂̄+∂̄∂",
}


@singledispatch
def validate(x) -> ValidationReport:
    """
    Checks the defining identities of a complex, bicomplex or morphism.

    Every violated (bi)degree is listed with its nonzero defect matrix. Shape mismatches never
    reach this point; they raise ShapeError when the object is built.
    """
    raise TypeError(f"Cannot validate {type(x).__name__}")


@validate.register
def _(x: GradedSpace) -> ValidationReport:
    report = ValidationReport(x.KIND)
    directions = x.DIRECTIONS
    for key in x.support:
        for index, (first, first_step) in enumerate(directions):
            for second, second_step in directions[index:]:
                composite = x.arrow(second, add_keys(key, first_step)) @ x.arrow(first, key)
                if first != second:
                    composite = composite + x.arrow(first, add_keys(key, second_step)) @ x.arrow(second, key)
                if not composite.is_zero():
                    report.defects.append(Defect(key, _RELATION_NAMES[(first, second)], composite))
    logger.debug(f"{report.kind=} {len(report.defects)=}")
    return report


@validate.register
def _(f: GradedMap) -> ValidationReport:
    report = ValidationReport(f"{f.source.KIND} morphism")
    if f.offset != f.source.ZERO_KEY:
        return report
    for key in f.source.support:
        for name, step in f.source.DIRECTIONS:
            defect = f.target.arrow(name, key) @ f.block(key) - f.block(add_keys(key, step)) @ f.source.arrow(name, key)
            if not defect.is_zero():
                report.defects.append(Defect(key, f"{name}∘f − f∘{name}", defect))
    return report


def tensor_layout(a: GradedSpace, b: GradedSpace, key: Key) -> Layout:
    """Summands of (a ⊗ b)^key labelled by the left (bi)degree."""
    return Layout((left, a.dim(left) * b.dim(subtract_keys(key, left))) for left in a.support)


def tensor(a: GradedSpace, b: GradedSpace) -> GradedSpace:
    """
    Tensor product with ∂(x⊗y) = ∂x⊗y + (−1)^{|x|} x⊗∂y, |x| the total degree of x.

    Args:
        a (GradedSpace): Left factor.
        b (GradedSpace): Right factor of the same kind.

    Returns:
        GradedSpace: a ⊗ b, of the same kind as the factors.
    """
    if type(a) is not type(b):
        raise TypeError("tensor factors must be of the same kind")
    domain = unify_domains(a.domain, b.domain)
    keys = sorted({add_keys(x, y) for x in a.support for y in b.support})
    layouts = {key: tensor_layout(a, b, key) for key in keys}
    arrows: Dict[str, Dict[Key, Matrix]] = {}
    for name, step in a.DIRECTIONS:
        arrows[name] = {}
        for key, source in layouts.items():
            target = layouts.get(add_keys(key, step))
            if target is None:
                continue
            blocks = []
            for left in source.labels:
                right = subtract_keys(key, left)
                blocks.append((add_keys(left, step), left, a.arrow(name, left).kron(Matrix.identity(b.dim(right), domain))))
                blocks.append((left, left, Matrix.identity(a.dim(left), domain).kron(b.arrow(name, right)).scale(sign(total_degree(left)))))
            arrows[name][key] = assemble(target, source, blocks, domain)
    return type(a).from_arrows({key: layout.dim for key, layout in layouts.items()}, arrows, domain)


def tensor_maps(f: GradedMap, g: GradedMap) -> GradedMap:
    """f ⊗ g for degree-zero maps (no Koszul sign arises)."""
    source, target = tensor(f.source, g.source), tensor(f.target, g.target)
    blocks = {}
    for key in source.support:
        source_layout = tensor_layout(f.source, g.source, key)
        target_layout = tensor_layout(f.target, g.target, key)
        pieces = [(left, left, f.block(left).kron(g.block(subtract_keys(key, left)))) for left in source_layout.labels]
        blocks[key] = assemble(target_layout, source_layout, pieces, source.domain)
    return type(f)(source, target, blocks)


def tensor_vector(a: GradedSpace, b: GradedSpace, left: Key, x: Sequence, right: Key, y: Sequence) -> Tuple[Key, tuple]:
    """Coordinates of x ⊗ y in (a ⊗ b)^{left+right}."""
    key = add_keys(left, right)
    layout = tensor_layout(a, b, key)
    vector = [0] * layout.dim
    offset = layout.offset(left)
    for i, xi in enumerate(x):
        for k, yk in enumerate(y):
            vector[offset + i * len(y) + k] = to_scalar(xi, a.domain) * to_scalar(yk, a.domain)
    return key, tuple(to_scalar(v, a.domain) for v in vector)


def braiding(a: GradedSpace, b: GradedSpace) -> GradedMap:
    """x⊗y ↦ (−1)^{|x||y|} y⊗x."""
    source, target = tensor(a, b), tensor(b, a)
    blocks = {}
    for key in source.support:
        source_layout, target_layout = tensor_layout(a, b, key), tensor_layout(b, a, key)
        pieces = []
        for left in source_layout.labels:
            right = subtract_keys(key, left)
            dim_a, dim_b = a.dim(left), b.dim(right)
            factor = sign(total_degree(left) * total_degree(right))
            swap = {k * dim_a + i: {i * dim_b + k: factor} for i in range(dim_a) for k in range(dim_b)}
            pieces.append((right, left, Matrix(dim_a * dim_b, dim_a * dim_b, swap, source.domain)))
        blocks[key] = assemble(target_layout, source_layout, pieces, source.domain)
    return morphism_class(a)(source, target, blocks)


def hom_layout(a: GradedSpace, b: GradedSpace, key: Key) -> Layout:
    """Summands of Hom(a, b)^key labelled by the source (bi)degree r, each Hom(a^r, b^{r+key})."""
    return Layout((r, b.dim(add_keys(r, key)) * a.dim(r)) for r in a.support)


def internal_hom(a: GradedSpace, b: GradedSpace) -> GradedSpace:
    """
    Internal Hom with Hom^{p,q} = ∏_{r,s} Hom(a^{r,s}, b^{r+p,s+q}) and
    ∂f = ∂_b f − (−1)^{|f|} f ∂_a (likewise for ∂̄, or d for cochain complexes).

    A component f_r is stored row-major: entry (k, i) sits at k * dim(a^r) + i.
    """
    if type(a) is not type(b):
        raise TypeError("internal_hom arguments must be of the same kind")
    domain = unify_domains(a.domain, b.domain)
    keys = sorted({subtract_keys(y, x) for x in a.support for y in b.support})
    layouts = {key: hom_layout(a, b, key) for key in keys}
    arrows: Dict[str, Dict[Key, Matrix]] = {}
    for name, step in a.DIRECTIONS:
        arrows[name] = {}
        for key, source in layouts.items():
            target = layouts.get(add_keys(key, step))
            if target is None:
                continue
            blocks = []
            factor = -sign(total_degree(key))
            for r in source.labels:
                blocks.append((r, r, b.arrow(name, add_keys(r, key)).kron(Matrix.identity(a.dim(r), domain))))
                earlier = subtract_keys(r, step)
                blocks.append((earlier, r, Matrix.identity(b.dim(add_keys(r, key)), domain)
                               .kron(a.arrow(name, earlier).transpose()).scale(factor)))
            arrows[name][key] = assemble(target, source, blocks, domain)
    return type(a).from_arrows({key: layout.dim for key, layout in layouts.items()}, arrows, domain)


def vectorize(f: GradedMap) -> tuple:
    """Coordinates of a graded map in internal_hom(f.source, f.target)^{f.offset}."""
    layout = hom_layout(f.source, f.target, f.offset)
    vector = [0] * layout.dim
    for r, offset, _ in layout.items():
        block = f.block(r)
        for k, i, value in block.items():
            vector[offset + k * block.cols + i] = value
    return tuple(to_scalar(v, f.domain) for v in vector)


def devectorize(source: GradedSpace, target: GradedSpace, offset: Key, vector: Sequence, cls=None) -> GradedMap:
    """Inverse of vectorize."""
    if cls is None:
        cls = BigradedLinearMap if isinstance(source, Bicomplex) else GradedLinearMap
    layout = hom_layout(source, target, offset)
    if len(vector) != layout.dim:
        raise ShapeError("devectorize", layout.dim, len(vector))
    domain = unify_domains(source.domain, target.domain)
    blocks = {}
    for r, start, _ in layout.items():
        rows, cols = target.dim(add_keys(r, offset)), source.dim(r)
        blocks[r] = Matrix(rows, cols, {k: {i: vector[start + k * cols + i] for i in range(cols)} for k in range(rows)}, domain)
    return cls(source, target, blocks, offset)


def morphism_space(a: GradedSpace, b: GradedSpace) -> Subspace:
    """
    The space of morphisms a → b as a subspace of internal_hom(a, b)^0: the cycles of every arrow.
    """
    hom = internal_hom(a, b)
    zero = a.ZERO_KEY
    stacked = Matrix.vstack([hom.arrow(name, zero) for name, _ in hom.DIRECTIONS], hom.dim(zero))
    if stacked.domain != QQ:
        raise ValueError("morphism_space is computed over QQ; realify Gaussian data first")
    return kernel(stacked)


def chain_morphism_space(c: CochainComplex, d: CochainComplex) -> Subspace:
    return morphism_space(c, d)


def hom_composition(a: GradedSpace, b: GradedSpace, c: GradedSpace) -> GradedMap:
    """
    Composition Hom(b, c) ⊗ Hom(a, b) → Hom(a, c), g ⊗ f ↦ g ∘ f.

    No sign is needed: ∂(g∘f) = (∂g)∘f + (−1)^{|g|} g∘(∂f) with the internal Hom differentials.
    """
    hom_bc, hom_ab, hom_ac = internal_hom(b, c), internal_hom(a, b), internal_hom(a, c)
    source = tensor(hom_bc, hom_ab)
    domain = source.domain
    blocks = {}
    for key in source.support:
        source_layout = tensor_layout(hom_bc, hom_ab, key)
        target_layout = hom_layout(a, c, key)
        entries: Dict[int, Dict[int, object]] = {}
        for g_key, g_offset, _ in source_layout.items():
            f_key = subtract_keys(key, g_key)
            g_layout, f_layout = hom_layout(b, c, g_key), hom_layout(a, b, f_key)
            f_dim = hom_ab.dim(f_key)
            for r, f_start, _ in f_layout.items():
                middle = add_keys(r, f_key)
                if middle not in g_layout or r not in target_layout:
                    continue
                dim_a, dim_b, dim_c = a.dim(r), b.dim(middle), c.dim(add_keys(middle, g_key))
                g_start, out_start = g_layout.offset(middle), target_layout.offset(r)
                for k in range(dim_c):
                    for m in range(dim_b):
                        g_index = g_start + k * dim_b + m
                        for i in range(dim_a):
                            f_index = f_start + m * dim_a + i
                            column = g_offset + g_index * f_dim + f_index
                            row = entries.setdefault(out_start + k * dim_a + i, {})
                            row[column] = row.get(column, 0) + 1
        blocks[key] = Matrix(target_layout.dim, source_layout.dim, entries, domain)
    return morphism_class(a)(source, hom_ac, blocks)


def shift(a: Bicomplex, p: int, q: int) -> Bicomplex:
    """(a[p,q])^{r,s} = a^{r−p,s−q}; differentials carried unchanged."""
    step = (p, q)
    return Bicomplex.from_arrows(
        {add_keys(key, step): dim for key, dim in a.dims.items()},
        {name: {add_keys(key, step): block for key, block in blocks.items()} for name, blocks in a.arrows.items()},
        a.domain,
    )


def transpose(a: Bicomplex) -> Bicomplex:
    """Swaps (p,q) ↦ (q,p) and exchanges the roles of ∂ and ∂̄."""
    swap = lambda key: (key[1], key[0])
    return Bicomplex(
        {swap(key): dim for key, dim in a.dims.items()},
        {swap(key): block for key, block in a.arrow_blocks("delbar").items()},
        {swap(key): block for key, block in a.arrow_blocks("del").items()},
        a.domain,
    )


def _truncation_subspace(b: Bicomplex, key: Bidegree) -> Subspace:
    p, q = key
    if p < 0 and q < 0:
        return Subspace.full(b.dim(key))
    conditions = []
    if p == 0:
        conditions.append(b.del_at(key))
    if q == 0:
        conditions.append(b.delbar_at(key))
    return kernel(Matrix.vstack(conditions, b.dim(key)))


def truncation_inclusion(b: Bicomplex) -> BicomplexMorphism:
    """
    The inclusion τ(b) → b of the third-quadrant truncation.

    τ keeps b^{p,q} for p,q < 0, ker ∂ on the column p = 0, ker ∂̄ on the row q = 0 and
    ker ∂ ∩ ker ∂̄ at (0,0). Each kept space carries the echelon basis of its subspace.
    """
    subspaces = {key: _truncation_subspace(b, key) for key in b.support if key[0] <= 0 and key[1] <= 0}
    subspaces = {key: space for key, space in subspaces.items() if space.dim}
    arrows: Dict[str, Dict[Key, Matrix]] = {}
    for name, step in b.DIRECTIONS:
        arrows[name] = {}
        for key, space in subspaces.items():
            target = subspaces.get(add_keys(key, step))
            if target is None:
                continue
            images = [b.arrow(name, key).apply(vector) for vector in space.basis]
            arrows[name][key] = Matrix.from_columns([target.coordinates(v) for v in images], target.dim)
    truncated = Bicomplex.from_arrows({key: space.dim for key, space in subspaces.items()}, arrows, b.domain)
    return BicomplexMorphism(truncated, b, {key: space.matrix() for key, space in subspaces.items()})


def truncate_third_quadrant(b: Bicomplex) -> Bicomplex:
    return truncation_inclusion(b).source


def corestrict_to_truncation(f: BicomplexMorphism) -> BicomplexMorphism:
    """
    Factors a morphism from a third-quadrant bicomplex through τ of its target.

    Raises:
        DomainRestrictionError: If the source has a cell with p > 0 or q > 0.
        InclusionError: If an image escapes the truncated subspace.
    """
    if any(p > 0 or q > 0 for p, q in f.source.support):
        raise DomainRestrictionError("corestrict_to_truncation", "source is not third-quadrant")
    truncated = truncate_third_quadrant(f.target)
    blocks = {}
    for key in f.source.support:
        space = _truncation_subspace(f.target, key)
        images = f.block(key).columns()
        for image_vector in images:
            if not space.contains(image_vector):
                raise InclusionError("numerator", image_vector)
        blocks[key] = Matrix.from_columns([space.coordinates(v) for v in images], space.dim, f.domain)
    return BicomplexMorphism(f.source, truncated, blocks)


def totalize(a: Bicomplex) -> CochainComplex:
    """Total complex: degree n is ⊕_{p+q=n} a^{p,q} ordered by p; d = ∂ + ∂̄."""
    layouts = _total_layouts(a)
    differential = {}
    for n, source in layouts.items():
        target = layouts.get(n + 1)
        if target is None:
            continue
        blocks = []
        for key in source.labels:
            blocks.append(((key[0] + 1, key[1]), key, a.del_at(key)))
            blocks.append(((key[0], key[1] + 1), key, a.delbar_at(key)))
        differential[n] = assemble(target, source, blocks, a.domain)
    return CochainComplex({n: layout.dim for n, layout in layouts.items()}, differential, a.domain)


def _total_layouts(a: Bicomplex) -> Dict[int, Layout]:
    degrees = sorted({total_degree(key) for key in a.support})
    return {n: Layout((key, a.dim(key)) for key in a.support if total_degree(key) == n) for n in degrees}


def totalize_map(f: BicomplexMorphism) -> ChainMorphism:
    source_layouts, target_layouts = _total_layouts(f.source), _total_layouts(f.target)
    blocks = {}
    for n, source in source_layouts.items():
        target = target_layouts.get(n)
        if target is None:
            continue
        blocks[n] = assemble(target, source, [(key, key, f.block(key)) for key in source.labels], f.domain)
    return ChainMorphism(totalize(f.source), totalize(f.target), blocks)


@singledispatch
def direct_sum(xs: Sequence) -> object:
    raise TypeError("direct_sum expects a sequence")


@direct_sum.register(list)
@direct_sum.register(tuple)
def _(xs) -> object:
    """
    Blockwise direct sum of graded spaces, or of maps sharing a kind.

    Inside each (bi)degree the summands appear in the order given.
    """
    if not xs:
        raise ValueError("direct_sum of an empty sequence")
    if isinstance(xs[0], GradedMap):
        return _direct_sum_maps(xs)
    kind = type(xs[0])
    domain = unify_domains(*(x.domain for x in xs))
    keys = sorted({key for x in xs for key in x.support})
    layouts = {key: Layout((index, x.dim(key)) for index, x in enumerate(xs)) for key in keys}
    arrows: Dict[str, Dict[Key, Matrix]] = {}
    for name, step in kind.DIRECTIONS:
        arrows[name] = {}
        for key, source in layouts.items():
            target = layouts.get(add_keys(key, step))
            if target is None:
                continue
            blocks = [(index, index, xs[index].arrow(name, key)) for index in source.labels]
            arrows[name][key] = assemble(target, source, blocks, domain)
    return kind.from_arrows({key: layout.dim for key, layout in layouts.items()}, arrows, domain)


def _direct_sum_maps(fs: Sequence[GradedMap]) -> GradedMap:
    source = direct_sum([f.source for f in fs])
    target = direct_sum([f.target for f in fs])
    offset = fs[0].offset
    blocks = {}
    for key in source.support:
        source_layout = Layout((index, f.source.dim(key)) for index, f in enumerate(fs))
        target_layout = Layout((index, f.target.dim(add_keys(key, offset))) for index, f in enumerate(fs))
        blocks[key] = assemble(target_layout, source_layout, [(index, index, f.block(key)) for index, f in enumerate(fs)], source.domain)
    return type(fs[0])(source, target, blocks, offset)


def associator(a: GradedSpace, b: GradedSpace, c: GradedSpace) -> GradedMap:
    """(x⊗y)⊗z ↦ x⊗(y⊗z)."""
    ab, bc = tensor(a, b), tensor(b, c)
    source, target = tensor(ab, c), tensor(a, bc)
    blocks = {}
    for key in source.support:
        outer_source, outer_target = tensor_layout(ab, c, key), tensor_layout(a, bc, key)
        entries: Dict[int, Dict[int, object]] = {}
        for u, u_offset, _ in outer_source.items():
            w = subtract_keys(key, u)
            dim_c = c.dim(w)
            for x, x_offset, _ in tensor_layout(a, b, u).items():
                y_key = subtract_keys(u, x)
                dim_a, dim_b = a.dim(x), b.dim(y_key)
                rest = subtract_keys(key, x)
                inner = tensor_layout(b, c, rest)
                dim_bc = bc.dim(rest)
                for i in range(dim_a):
                    for j in range(dim_b):
                        for k in range(dim_c):
                            column = u_offset + (x_offset + i * dim_b + j) * dim_c + k
                            row = outer_target.offset(x) + i * dim_bc + inner.offset(y_key) + j * dim_c + k
                            entries.setdefault(row, {})[column] = 1
        blocks[key] = Matrix(target.dim(key), source.dim(key), entries, source.domain)
    return morphism_class(a)(source, target, blocks)
