"""
Exact linear algebra over the rationals (and Gaussian rationals for products).

Matrices act on column coordinate vectors: entry (i, j) is the coefficient of
target basis vector i in the image of source basis vector j. Elimination is
delegated to sympy's DomainMatrix over QQ; Gaussian-rational data is realified
before it reaches elimination.
"""
from dataclasses import dataclass
import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from pluripotential.core.exception import ContainmentError, InclusionError, ShapeError

logger = logging.getLogger(__name__)

Vector = Tuple


def to_scalar(value, domain=QQ):
    """
    Converts ints, fraction strings, rational pairs and domain elements into an element of domain.

    Args:
        value: The value to convert. Gaussian values may be given as a (re, im) pair.
        domain: QQ or QQ_I.

    Returns:
        The canonical domain element.
    """
    if domain.of_type(value):
        return value
    if isinstance(value, (tuple, list)):
        if domain != QQ_I:
            raise ValueError(f"Gaussian pair {value=} given for a rational domain")
        re, im = value
        return QQ_I(to_scalar(re, QQ), to_scalar(im, QQ))
    if isinstance(value, str):
        numerator, _, denominator = value.strip().partition("/")
        value = QQ(int(numerator), int(denominator or 1))
    elif isinstance(value, int):
        value = QQ(value)
    elif QQ_I.of_type(value):
        if value.y:
            raise ValueError(f"Non-real {value=} given for a rational domain")
        value = value.x
    if domain == QQ_I:
        return QQ_I(value, 0)
    return QQ.convert(value)


def conjugate_scalar(value):
    """Complex conjugate of a Gaussian rational."""
    value = to_scalar(value, QQ_I)
    return QQ_I(value.x, -value.y)


def unify_domains(*domains):
    return QQ_I if any(domain == QQ_I for domain in domains) else QQ


class Matrix:
    """
    Immutable sparse matrix over QQ or QQ_I.

    Only nonzero entries are stored, so two matrices are equal exactly when their
    shapes, domains and nonzero entries agree.
    """
    __slots__ = ("rows", "cols", "domain", "_entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Dict[int, Dict[int, object]]] = None, domain=QQ) -> None:
        if rows < 0 or cols < 0:
            raise ShapeError("matrix", "nonnegative", (rows, cols))
        self.rows = rows
        self.cols = cols
        self.domain = domain
        normalized: Dict[int, Dict[int, object]] = {}
        for i, row in (entries or {}).items():
            for j, value in row.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ShapeError(f"entry ({i}, {j})", (rows, cols), (i + 1, j + 1))
                value = to_scalar(value, domain)
                if value:
                    normalized.setdefault(i, {})[j] = value
        self._entries = normalized

    @classmethod
    def zeros(cls, rows: int, cols: int, domain=QQ) -> "Matrix":
        return cls(rows, cols, None, domain)

    @classmethod
    def identity(cls, size: int, domain=QQ) -> "Matrix":
        return cls(size, size, {i: {i: 1} for i in range(size)}, domain)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None, domain=QQ) -> "Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for index, row in enumerate(rows):
            if len(row) != cols:
                raise ShapeError(f"row {index}", cols, len(row))
        return cls(len(rows), cols, {i: dict(enumerate(row)) for i, row in enumerate(rows)}, domain)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int, domain=QQ) -> "Matrix":
        entries: Dict[int, Dict[int, object]] = {}
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ShapeError(f"column {j}", rows, len(column))
            for i, value in enumerate(column):
                entries.setdefault(i, {})[j] = value
        return cls(rows, len(columns), entries, domain)

    @classmethod
    def _from_domain_matrix(cls, dm: DomainMatrix) -> "Matrix":
        rows, cols = dm.shape
        sparse = dm.to_sparse().rep
        return cls(rows, cols, {i: dict(row) for i, row in sparse.items()}, dm.domain)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix({i: dict(row) for i, row in self._entries.items()}, self.shape, self.domain)

    def convert(self, domain) -> "Matrix":
        if domain == self.domain:
            return self
        return Matrix(self.rows, self.cols, self._entries, domain)

    def __getitem__(self, key: Tuple[int, int]):
        i, j = key
        return self._entries.get(i, {}).get(j, self.domain.zero)

    def items(self) -> Iterable[Tuple[int, int, object]]:
        for i in sorted(self._entries):
            row = self._entries[i]
            for j in sorted(row):
                yield i, j, row[j]

    def to_rows(self) -> List[List]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def column(self, j: int) -> Vector:
        return tuple(self[i, j] for i in range(self.rows))

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not self._entries

    def _check_shape(self, other: "Matrix", operation: str) -> None:
        if self.shape != other.shape:
            raise ShapeError(operation, self.shape, other.shape)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, tuple(self.items())))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self.to_rows()})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other, "add")
        domain = unify_domains(self.domain, other.domain)
        return Matrix._from_domain_matrix(self.convert(domain).to_domain_matrix() + other.convert(domain).to_domain_matrix())

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other, "subtract")
        domain = unify_domains(self.domain, other.domain)
        return Matrix._from_domain_matrix(self.convert(domain).to_domain_matrix() - other.convert(domain).to_domain_matrix())

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError("matmul", (self.cols, "*"), other.shape)
        domain = unify_domains(self.domain, other.domain)
        if self.is_zero() or other.is_zero():
            return Matrix.zeros(self.rows, other.cols, domain)
        product = self.convert(domain).to_domain_matrix() * other.convert(domain).to_domain_matrix()
        return Matrix._from_domain_matrix(product)

    def scale(self, factor) -> "Matrix":
        gaussian = isinstance(factor, (tuple, list)) or QQ_I.of_type(factor)
        domain = unify_domains(self.domain, QQ_I if gaussian else QQ)
        factor = to_scalar(factor, domain)
        entries = {i: {j: to_scalar(v, domain) * factor for j, v in row.items()} for i, row in self._entries.items()}
        return Matrix(self.rows, self.cols, entries, domain)

    def transpose(self) -> "Matrix":
        entries: Dict[int, Dict[int, object]] = {}
        for i, j, value in self.items():
            entries.setdefault(j, {})[i] = value
        return Matrix(self.cols, self.rows, entries, self.domain)

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise ShapeError("apply", self.cols, len(vector))
        result = [self.domain.zero] * self.rows
        for i, row in self._entries.items():
            for j, value in row.items():
                if vector[j]:
                    result[i] += value * to_scalar(vector[j], self.domain)
        return tuple(result)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; the index of a pair (i, k) is i * other.rows + k."""
        domain = unify_domains(self.domain, other.domain)
        entries: Dict[int, Dict[int, object]] = {}
        for i, j, a in self.items():
            for k, l, b in other.items():
                entries.setdefault(i * other.rows + k, {})[j * other.cols + l] = to_scalar(a, domain) * to_scalar(b, domain)
        return Matrix(self.rows * other.rows, self.cols * other.cols, entries, domain)

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Matrix":
        row_position = {r: a for a, r in enumerate(row_indices)}
        col_position = {c: b for b, c in enumerate(col_indices)}
        entries: Dict[int, Dict[int, object]] = {}
        for i, j, value in self.items():
            if i in row_position and j in col_position:
                entries.setdefault(row_position[i], {})[col_position[j]] = value
        return Matrix(len(row_indices), len(col_indices), entries, self.domain)

    @staticmethod
    def hstack(blocks: Sequence["Matrix"], rows: Optional[int] = None) -> "Matrix":
        rows = blocks[0].rows if blocks else (rows or 0)
        domain = unify_domains(*(block.domain for block in blocks))
        entries: Dict[int, Dict[int, object]] = {}
        offset = 0
        for block in blocks:
            if block.rows != rows:
                raise ShapeError("hstack", rows, block.rows)
            for i, j, value in block.items():
                entries.setdefault(i, {})[offset + j] = value
            offset += block.cols
        return Matrix(rows, offset, entries, domain)

    @staticmethod
    def vstack(blocks: Sequence["Matrix"], cols: Optional[int] = None) -> "Matrix":
        cols = blocks[0].cols if blocks else (cols or 0)
        domain = unify_domains(*(block.domain for block in blocks))
        entries: Dict[int, Dict[int, object]] = {}
        offset = 0
        for block in blocks:
            if block.cols != cols:
                raise ShapeError("vstack", cols, block.cols)
            for i, j, value in block.items():
                entries.setdefault(offset + i, {})[j] = value
            offset += block.rows
        return Matrix(offset, cols, entries, domain)

    def conjugate(self) -> "Matrix":
        if self.domain != QQ_I:
            return self
        return Matrix(self.rows, self.cols, {i: {j: conjugate_scalar(v) for j, v in row.items()}
                                                for i, row in self._entries.items()}, QQ_I)

    def realify(self) -> "Matrix":
        """
        Rational matrix of the same map on realified coordinates.

        A vector x + iy of length n is realified as (x, y) of length 2n, so A + iB becomes
        [[A, -B], [B, A]].
        """
        entries: Dict[int, Dict[int, object]] = {}
        if self.domain != QQ_I:
            for i, j, value in self.items():
                entries.setdefault(i, {})[j] = value
                entries.setdefault(i + self.rows, {})[j + self.cols] = value
            return Matrix(2 * self.rows, 2 * self.cols, entries, QQ)
        for i, j, value in self.items():
            re, im = value.x, value.y
            if re:
                entries.setdefault(i, {})[j] = re
                entries.setdefault(i + self.rows, {})[j + self.cols] = re
            if im:
                entries.setdefault(i, {})[j + self.cols] = -im
                entries.setdefault(i + self.rows, {})[j] = im
        return Matrix(2 * self.rows, 2 * self.cols, entries, QQ)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeError("inverse", (self.rows, self.rows), self.shape)
        if self.rows == 0:
            return self
        return Matrix._from_domain_matrix(self.to_domain_matrix().inv())


def rref(matrix: Matrix) -> Tuple[List[List], Tuple[int, ...]]:
    """
    Reduced row echelon form of a rational matrix.

    Returns:
        Tuple[List[List], Tuple[int, ...]]: Dense rows of the echelon form and the pivot columns.
    """
    if matrix.domain != QQ:
        raise ValueError("rref is only performed over QQ; realify Gaussian data first")
    if matrix.rows == 0 or matrix.cols == 0 or matrix.is_zero():
        return [[QQ.zero] * matrix.cols for _ in range(matrix.rows)], ()
    reduced, pivots = matrix.to_domain_matrix().rref()
    return Matrix._from_domain_matrix(reduced).to_rows(), tuple(pivots)


def rank(matrix: Matrix) -> int:
    if matrix.domain == QQ_I:
        return len(rref(matrix.realify())[1]) // 2
    return len(rref(matrix)[1])


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of QQ^ambient held by its reduced row echelon basis.

    The echelon basis is unique for a given span, so equality of Subspace values is
    equality of subspaces.
    """
    ambient: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        vectors = [tuple(to_scalar(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ShapeError("spanning vector", ambient, len(v))
        if not vectors:
            return cls.zero(ambient)
        rows, pivots = rref(Matrix.from_rows(vectors, ambient))
        return cls(ambient, tuple(tuple(rows[i]) for i in range(len(pivots))), pivots)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, (), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.span(Matrix.identity(ambient).to_rows(), ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, vector: Sequence) -> Vector:
        """Reduces a vector modulo the subspace, clearing every pivot column."""
        reduced = [to_scalar(x) for x in vector]
        for row, pivot in zip(self.basis, self.pivots):
            coefficient = reduced[pivot]
            if coefficient:
                for j, value in enumerate(row):
                    if value:
                        reduced[j] -= coefficient * value
        return tuple(reduced)

    def contains(self, vector: Sequence) -> bool:
        return not any(self.reduce(vector))

    def coordinates(self, vector: Sequence) -> Vector:
        """Coordinates of a member vector in the echelon basis."""
        return tuple(to_scalar(vector[pivot]) for pivot in self.pivots)

    def matrix(self) -> Matrix:
        """The ambient x dim inclusion matrix whose columns are the basis vectors."""
        return Matrix.from_columns(self.basis, self.ambient)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.basis + other.basis, self.ambient)

    def intersection(self, other: "Subspace") -> "Subspace":
        annihilators = annihilator(self).basis + annihilator(other).basis
        if not annihilators:
            return Subspace.full(self.ambient)
        return rank_kernel_image(Matrix.from_rows(annihilators, self.ambient)).kernel


class LinearDecomposition(NamedTuple):
    rank: int
    kernel: Subspace
    image: Subspace


def rank_kernel_image(matrix: Matrix) -> LinearDecomposition:
    """
    Computes rank, kernel and image of a rational matrix exactly.

    Args:
        matrix (Matrix): A QQ matrix.

    Returns:
        LinearDecomposition: rank, kernel (subspace of the source) and image (subspace of the target).
    """
    rows, pivots = rref(matrix)
    free = [j for j in range(matrix.cols) if j not in pivots]
    kernel_vectors = []
    for f in free:
        vector = [QQ.zero] * matrix.cols
        vector[f] = QQ.one
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -rows[row_index][f]
        kernel_vectors.append(vector)
    kernel = Subspace.span(kernel_vectors, matrix.cols)
    image = Subspace.span([matrix.column(j) for j in pivots], matrix.rows)
    logger.debug(f"{matrix.shape=} {len(pivots)=}")
    return LinearDecomposition(len(pivots), kernel, image)


def kernel(matrix: Matrix) -> Subspace:
    return rank_kernel_image(matrix).kernel


def image(matrix: Matrix) -> Subspace:
    if matrix.is_zero():
        return Subspace.zero(matrix.rows)
    return rank_kernel_image(matrix).image


def annihilator(subspace: Subspace) -> Subspace:
    if not subspace.basis:
        return Subspace.full(subspace.ambient)
    return kernel(Matrix.from_rows(subspace.basis, subspace.ambient))


def solve(matrix: Matrix, rhs: Sequence) -> Optional[Vector]:
    """Returns one exact solution x of matrix @ x = rhs, or None when the system is inconsistent."""
    if len(rhs) != matrix.rows:
        raise ShapeError("solve", matrix.rows, len(rhs))
    augmented = Matrix.hstack([matrix, Matrix.from_columns([tuple(rhs)], matrix.rows)])
    rows, pivots = rref(augmented)
    if matrix.cols in pivots:
        return None
    solution = [QQ.zero] * matrix.cols
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = rows[row_index][matrix.cols]
    return tuple(solution)


@dataclass(frozen=True)
class Subquotient:
    """
    numerator / denominator with a canonical complement.

    The complement is spanned by the numerator basis reduced modulo the denominator,
    brought to echelon form; its basis vectors are the coset representatives.
    """
    numerator: Subspace
    denominator: Subspace
    complement: Subspace

    @classmethod
    def of(cls, numerator: Subspace, denominator: Subspace) -> "Subquotient":
        if numerator.ambient != denominator.ambient:
            raise ShapeError("subquotient", numerator.ambient, denominator.ambient)
        for vector in denominator.basis:
            if not numerator.contains(vector):
                raise ContainmentError(vector)
        reduced = [denominator.reduce(v) for v in numerator.basis]
        return cls(numerator, denominator, Subspace.span(reduced, numerator.ambient))

    @property
    def dim(self) -> int:
        return self.complement.dim

    @property
    def representatives(self) -> Tuple[Vector, ...]:
        return self.complement.basis

    def coordinates(self, vector: Sequence) -> Vector:
        """Coordinates of the class of a numerator vector in the representative basis."""
        return self.complement.coordinates(self.denominator.reduce(vector))


def subquotient_dim(numerator: Subspace, denominator: Subspace) -> int:
    return Subquotient.of(numerator, denominator).dim


SubquotientData = Union[Subquotient, Tuple[Subspace, Subspace]]


def _as_subquotient(data: SubquotientData) -> Subquotient:
    return data if isinstance(data, Subquotient) else Subquotient.of(*data)


def induced_subquotient_map(f: Matrix, source: SubquotientData, target: SubquotientData) -> Matrix:
    """
    Matrix of the map induced by f from source.num/source.den to target.num/target.den.

    Args:
        f (Matrix): Linear map from the source ambient space to the target ambient space.
        source: Source subquotient, or a (numerator, denominator) pair.
        target: Target subquotient, or a (numerator, denominator) pair.

    Returns:
        Matrix: target.dim x source.dim matrix on the representative bases.

    Raises:
        InclusionError: If f does not carry numerator into numerator or denominator into denominator.
    """
    source, target = _as_subquotient(source), _as_subquotient(target)
    for vector in source.numerator.basis:
        if not target.numerator.contains(f.apply(vector)):
            raise InclusionError("numerator", vector)
    for vector in source.denominator.basis:
        if not target.denominator.contains(f.apply(vector)):
            raise InclusionError("denominator", vector)
    columns = [target.coordinates(f.apply(representative)) for representative in source.representatives]
    return Matrix.from_columns(columns, target.dim)


def is_isomorphism(matrix: Matrix) -> bool:
    return matrix.rows == matrix.cols and rank(matrix) == matrix.rows
