"""
JSON documents for complexes, bicomplexes, real bicomplexes and their morphisms.

A document is an object with a `kind`, a `field` and a kind-specific payload:

    {"kind": "bicomplex", "field": "Q",
     "dims": {"0,1": 1, "1,0": 1, "1,1": 1},
     "del": {"0,1": [["1"]]},
     "delbar": {"1,0": [["-1"]]}}

Spaces map "p,q" (or "n") keys to dimensions; arrows map source keys to row-major
matrices of fraction strings; Gaussian scalars are ["re", "im"] pairs. Absent blocks
are zero. Maps carry `source` and `target` payloads and `blocks`.
"""
from dataclasses import dataclass
from functools import singledispatch
import json
import logging
import re
from typing import Any, Dict, Optional, Tuple, Type

from sympy.polys.domains import QQ, QQ_I

from pluripotential.core.complexes import (
    Bicomplex, BicomplexMorphism, ChainMorphism, CochainComplex, Defect, GradedMap, GradedSpace, Key,
    ValidationReport, add_keys, validate,
)
from pluripotential.core.exactlin import Matrix
from pluripotential.core.exception import ShapeError, ValidationError
from pluripotential.core.realbico import RealBicomplex, validate_real
from pluripotential.io.exception import DocumentError

logger = logging.getLogger(__name__)

FIELDS = {"Q": QQ, "Q_i": QQ_I}
SPACE_KINDS: Dict[str, Type[GradedSpace]] = {"cochain": CochainComplex, "bicomplex": Bicomplex}
MAP_KINDS: Dict[str, Tuple[Type[GradedMap], Type[GradedSpace]]] = {
    "chain_map": (ChainMorphism, CochainComplex),
    "bicomplex_map": (BicomplexMorphism, Bicomplex),
}
KINDS = ("cochain", "bicomplex", "real_bicomplex", "chain_map", "bicomplex_map")

_FRACTION = re.compile(r"^-?\d+(/\d+)?$")
_DEGREE = re.compile(r"^-?\d+$")
_BIDEGREE = re.compile(r"^(-?\d+),(-?\d+)$")


@dataclass
class DocumentEnvelope:
    """
    The outer layer of a document.

    Attributes:
        kind (str): One of KINDS.
        field (str): "Q" or "Q_i".
        payload (Dict[str, Any]): Every other member of the document.
    """
    kind: str
    field: str
    payload: Dict[str, Any]

    @property
    def domain(self):
        return FIELDS[self.field]


def read_envelope(text: str) -> DocumentEnvelope:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError("$", e.msg, e.lineno, e.colno)
    if not isinstance(raw, dict):
        raise DocumentError("$", "a document must be a JSON object")
    kind = raw.get("kind")
    if kind not in KINDS:
        raise DocumentError("$.kind", f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}")
    field = raw.get("field", "Q")
    if field not in FIELDS:
        raise DocumentError("$.field", f"unknown field {field!r}, expected Q or Q_i")
    return DocumentEnvelope(kind, field, {key: value for key, value in raw.items() if key not in ("kind", "field")})


def parse(text: str, check: bool = True):
    """
    Builds the object a document describes.

    Args:
        text (str): The document text.
        check (bool): Whether to validate the object (d² = 0, commuting squares, σ identities).

    Returns:
        CochainComplex, Bicomplex, RealBicomplex, ChainMorphism or BicomplexMorphism.

    Raises:
        DocumentError: If the text is not a well-formed document.
        ValidationError: If check is set and the object violates its defining identities.
    """
    envelope = read_envelope(text)
    obj = build(envelope)
    if check:
        report = check_object(obj)
        if not report.is_valid:
            raise ValidationError(report)
    logger.debug(f"{envelope.kind=} {envelope.field=}")
    return obj


def load(path: str, check: bool = True):
    with open(path, "r", encoding="utf-8") as f:
        return parse(f.read(), check)


def build(envelope: DocumentEnvelope):
    kind, domain, payload = envelope.kind, envelope.domain, envelope.payload
    if kind in SPACE_KINDS:
        return _parse_space(payload, SPACE_KINDS[kind], domain, "$")
    if kind == "real_bicomplex":
        return _parse_real(payload, domain, "$")
    map_cls, space_cls = MAP_KINDS[kind]
    return _parse_map(payload, map_cls, space_cls, domain, "$")


def check_object(obj) -> ValidationReport:
    """Validation report of a parsed object; a map report also covers its source and target."""
    if isinstance(obj, RealBicomplex):
        return validate_real(obj)
    if isinstance(obj, GradedMap):
        report = validate(obj)
        for side, space in (("source", obj.source), ("target", obj.target)):
            for defect in validate(space).defects:
                report.defects.append(Defect(defect.location, f"{side} {defect.relation}", defect.matrix))
        return report
    return validate(obj)


def _parse_rational(value, path: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(path, f"expected a fraction string, got {value!r}")
    text = str(value).strip()
    if not _FRACTION.match(text):
        raise DocumentError(path, f"malformed fraction {value!r}")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise DocumentError(path, f"zero denominator in {value!r}")
    return QQ(int(numerator), int(denominator or 1))


def _parse_scalar(value, domain, path: str):
    if isinstance(value, list):
        if domain != QQ_I:
            raise DocumentError(path, "Gaussian pairs need field Q_i")
        if len(value) != 2:
            raise DocumentError(path, f"a Gaussian pair has two parts, got {len(value)}")
        return (_parse_rational(value[0], f"{path}[0]"), _parse_rational(value[1], f"{path}[1]"))
    return _parse_rational(value, path)


def _parse_matrix(rows, shape: Tuple[int, int], domain, path: str) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise DocumentError(path, "a matrix is a list of rows")
    if len(rows) != shape[0]:
        raise DocumentError(path, f"expected {shape[0]} rows, got {len(rows)}")
    entries = {}
    for i, row in enumerate(rows):
        if len(row) != shape[1]:
            raise DocumentError(f"{path}[{i}]", f"expected {shape[1]} entries, got {len(row)}")
        entries[i] = {j: _parse_scalar(value, domain, f"{path}[{i}][{j}]") for j, value in enumerate(row)}
    return Matrix(shape[0], shape[1], entries, domain)


def _parse_key(text, bigraded: bool, path: str) -> Key:
    match = (_BIDEGREE if bigraded else _DEGREE).match(str(text).replace(" ", ""))
    if not match:
        raise DocumentError(path, f"malformed key {text!r}, expected {'p,q' if bigraded else 'n'}")
    if bigraded:
        return (int(match.group(1)), int(match.group(2)))
    return int(text)


def _require_object(value, path: str) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise DocumentError(path, "expected a JSON object")
    return value


def _check_members(payload: Dict[str, Any], allowed, path: str) -> None:
    unknown = sorted(set(payload) - set(allowed))
    if unknown:
        raise DocumentError(f"{path}.{unknown[0]}", f"unknown field, expected one of {', '.join(sorted(allowed))}")


def _parse_dims(payload: Dict[str, Any], bigraded: bool, path: str) -> Dict[Key, int]:
    dims = {}
    for text, dim in _require_object(payload.get("dims", {}), f"{path}.dims").items():
        key = _parse_key(text, bigraded, f"{path}.dims.{text}")
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
            raise DocumentError(f"{path}.dims.{text}", f"a dimension is a nonnegative integer, got {dim!r}")
        dims[key] = dim
    return dims


def _parse_space(payload, cls: Type[GradedSpace], domain, path: str, extra=()) -> GradedSpace:
    payload = _require_object(payload, path)
    names = [name for name, _ in cls.DIRECTIONS]
    _check_members(payload, ["dims", *names, *extra], path)
    bigraded = cls is Bicomplex
    dims = _parse_dims(payload, bigraded, path)
    arrows = {}
    for name, step in cls.DIRECTIONS:
        blocks = {}
        for text, rows in _require_object(payload.get(name, {}), f"{path}.{name}").items():
            key = _parse_key(text, bigraded, f"{path}.{name}.{text}")
            shape = (dims.get(add_keys(key, step), 0), dims.get(key, 0))
            blocks[key] = _parse_matrix(rows, shape, domain, f"{path}.{name}.{text}")
        arrows[name] = blocks
    try:
        return cls.from_arrows(dims, arrows, domain)
    except ShapeError as e:
        raise DocumentError(path, str(e))


def _parse_real(payload, domain, path: str) -> RealBicomplex:
    payload = _require_object(payload, path)
    bicomplex = _parse_space(payload, Bicomplex, QQ_I, path, extra=("sigma",))
    sigma = {}
    for text, rows in _require_object(payload.get("sigma", {}), f"{path}.sigma").items():
        p, q = _parse_key(text, True, f"{path}.sigma.{text}")
        shape = (bicomplex.dim((q, p)), bicomplex.dim((p, q)))
        sigma[(p, q)] = _parse_matrix(rows, shape, QQ_I, f"{path}.sigma.{text}")
    return RealBicomplex(bicomplex, sigma)


def _parse_map(payload, map_cls: Type[GradedMap], space_cls: Type[GradedSpace], domain, path: str) -> GradedMap:
    payload = _require_object(payload, path)
    _check_members(payload, ["source", "target", "blocks"], path)
    for member in ("source", "target"):
        if member not in payload:
            raise DocumentError(f"{path}.{member}", "missing field")
    source = _parse_space(payload["source"], space_cls, domain, f"{path}.source")
    target = _parse_space(payload["target"], space_cls, domain, f"{path}.target")
    bigraded = space_cls is Bicomplex
    blocks = {}
    for text, rows in _require_object(payload.get("blocks", {}), f"{path}.blocks").items():
        key = _parse_key(text, bigraded, f"{path}.blocks.{text}")
        blocks[key] = _parse_matrix(rows, (target.dim(key), source.dim(key)), domain, f"{path}.blocks.{text}")
    return map_cls(source, target, blocks)


def format_key(key: Key) -> str:
    if isinstance(key, int):
        return str(key)
    return ",".join(str(x) for x in key)


def format_rational(value) -> str:
    value = QQ.convert(value)
    numerator, denominator = int(value.numerator), int(value.denominator)
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def format_scalar(value, domain=QQ):
    """Fraction string, or a ["re", "im"] pair for a non-real Gaussian rational."""
    if domain == QQ_I:
        value = QQ_I.convert(value)
        if value.y:
            return [format_rational(value.x), format_rational(value.y)]
        return format_rational(value.x)
    return format_rational(value)


def format_matrix(matrix: Matrix):
    return [[format_scalar(value, matrix.domain) for value in row] for row in matrix.to_rows()]


def field_name(domain) -> str:
    return "Q_i" if domain == QQ_I else "Q"


def _space_payload(space: GradedSpace) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"dims": {format_key(key): dim for key, dim in sorted(space.dims.items())}}
    for name, blocks in space.arrows.items():
        if blocks:
            payload[name] = {format_key(key): format_matrix(block) for key, block in sorted(blocks.items())}
    return payload


@singledispatch
def to_document(obj) -> Dict[str, Any]:
    """The canonical document of an object, as plain JSON data."""
    raise TypeError(f"No document format for {type(obj).__name__}")


@to_document.register
def _(space: GradedSpace) -> Dict[str, Any]:
    return {"kind": space.KIND, "field": field_name(space.domain), **_space_payload(space)}


@to_document.register
def _(real: RealBicomplex) -> Dict[str, Any]:
    document = {"kind": "real_bicomplex", "field": "Q_i", **_space_payload(real.bicomplex)}
    if real.sigma:
        document["sigma"] = {format_key(key): format_matrix(block) for key, block in real.sigma.items()}
    return document


@to_document.register
def _(f: GradedMap) -> Dict[str, Any]:
    if f.offset != f.source.ZERO_KEY:
        raise TypeError(f"Only morphisms have a document format, got offset {f.offset}")
    kind = "chain_map" if isinstance(f.source, CochainComplex) else "bicomplex_map"
    return {
        "kind": kind,
        "field": field_name(f.domain),
        "source": _space_payload(f.source.convert(f.domain)),
        "target": _space_payload(f.target.convert(f.domain)),
        "blocks": {format_key(key): format_matrix(block) for key, block in f.blocks.items()},
    }


def emit(obj) -> str:
    """
    Canonical document text: degrees in increasing numeric order, reduced fractions, zero blocks omitted.

    emit(parse(text)) canonicalizes text and parse(emit(obj)) == obj.
    """
    return json.dumps(to_document(obj), indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def dump(obj, path: Optional[str]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(emit(obj))
