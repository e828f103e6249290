# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Any

import msgspec

from origami.documents.schema import (
    DOCUMENT_TYPES,
    FORMAT,
    CertificateDocument,
    ChamberDocument,
    FacetDocument,
    FoldDocument,
    MultiFanDocument,
    PieceDocument,
    PolytopeBody,
    PolytopeDocument,
    ReductionDocument,
    SequenceDocument,
    TemplateDocument,
    TraceStepDocument,
)
from origami.errors import DocumentError
from origami.fans.model import MultiFan, WeightedChamber
from origami.polytopes import DelzantPolytope, Facet
from origami.templates.model import FacetRef, OrigamiTemplate, PairFold, SingleFold, TemplatePiece
from origami.unimodular.realization import RealizationCertificate, TraceStep
from origami.unimodular.sequence import Reduction, UnimodularSequence

if TYPE_CHECKING:
    from os import PathLike

    from origami.documents.schema import DocumentKind

Document = MultiFan | DelzantPolytope | OrigamiTemplate | UnimodularSequence | RealizationCertificate

_BYTE_OFFSET = re.compile(r"\(byte (\d+)\)")
_SHAPES = (
    ("polytopes", "template"),
    ("facets", "polytope"),
    ("edges", "multifan"),
    ("signs", "certificate"),
    ("vectors", "sequence"),
)


def load(path: str | PathLike[str], *, kind: DocumentKind | None = None) -> Document:
    from origami.utils.fs import Path

    try:
        data = Path(path).read_bytes()
    except OSError as e:
        message = f"Cannot read {path}: {e.strerror or e}"
        raise DocumentError(message) from None

    return loads(data, kind=kind)


def loads(data: bytes | str, *, kind: DocumentKind | None = None) -> Document:
    """
    Parse a document. Without an explicit `kind` the `kind` field decides, falling back to the shape
    of the document.
    """
    raw = data.encode("utf-8") if isinstance(data, str) else data
    try:
        raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line, column = _position(raw, e.start)
        message = f"Invalid UTF-8 at line {line}, column {column} (byte {e.start}): {e.reason}"
        raise DocumentError(message, line=line, column=column) from None

    try:
        obj = msgspec.json.decode(raw)
    except (msgspec.DecodeError, ValueError) as e:
        match = _BYTE_OFFSET.search(str(e))
        line, column = _position(raw, int(match.group(1)) if match else len(raw))
        message = f"Malformed JSON at line {line}, column {column}: {e}"
        raise DocumentError(message, line=line, column=column) from None

    if not isinstance(obj, dict):
        message = f"Expected a JSON object at the top level, got {type(obj).__name__}"
        raise DocumentError(message, line=1, column=1)

    found = obj.get("format", FORMAT)
    if found != FORMAT:
        message = f"Unsupported document format `{found}`, expected `{FORMAT}`"
        raise DocumentError(message)

    declared = obj.get("kind")
    if kind is not None and declared is not None and declared != kind:
        message = f"Expected a {kind} document, got a {declared} document"
        raise DocumentError(message)

    kind = kind or declared or next((name for key, name in _SHAPES if key in obj), None)
    if kind not in DOCUMENT_TYPES:
        message = f"Cannot tell what kind of document this is: {kind or 'no recognizable fields'}"
        raise DocumentError(message)

    obj.setdefault("kind", kind)
    try:
        document = msgspec.convert(obj, DOCUMENT_TYPES[kind], dec_hook=__dec_hook)
    except msgspec.ValidationError as e:
        message = f"Invalid {kind} document: {e}"
        raise DocumentError(message) from None

    return from_document(document)


def dumps(obj: Any) -> bytes:
    """
    Deterministic pretty-printed JSON with sorted keys. Domain objects are converted to their
    documents first.
    """
    if isinstance(obj, Document):
        obj = to_document(obj)

    encoded = msgspec.json.encode(obj, enc_hook=__enc_hook, order="sorted")
    return msgspec.json.format(encoded, indent=2) + b"\n"


def kind_of(obj: Document) -> DocumentKind:
    if isinstance(obj, MultiFan):
        return "multifan"

    if isinstance(obj, DelzantPolytope):
        return "polytope"

    if isinstance(obj, OrigamiTemplate):
        return "template"

    if isinstance(obj, UnimodularSequence):
        return "sequence"

    return "certificate"


def to_document(obj: Document) -> msgspec.Struct:
    if isinstance(obj, MultiFan):
        return _multifan_document(obj)

    if isinstance(obj, DelzantPolytope):
        return PolytopeDocument(facets=_facet_documents(obj.facets), dim=obj.dim)

    if isinstance(obj, OrigamiTemplate):
        return _template_document(obj)

    if isinstance(obj, UnimodularSequence):
        return SequenceDocument(vectors=[list(v) for v in obj.vectors])

    return CertificateDocument(
        vectors=[list(v) for v in obj.sequence.vectors],
        signs=list(obj.signs),
        template=_template_document(obj.template),
        trace=[
            TraceStepDocument(
                action=step.action,
                vectors=[list(v) for v in step.vectors],
                reduction=None
                if step.reduction is None
                else ReductionDocument(step.reduction.index, step.reduction.coefficient, step.reduction.signs),
            )
            for step in obj.trace
        ],
    )


def from_document(document: msgspec.Struct) -> Document:
    if isinstance(document, MultiFanDocument):
        return _multifan(document)

    if isinstance(document, PolytopeDocument):
        return _polytope(document.facets, document.dim)

    if isinstance(document, TemplateDocument):
        return _template(document)

    if isinstance(document, SequenceDocument):
        return UnimodularSequence.of(document.vectors)

    if isinstance(document, CertificateDocument):
        return RealizationCertificate(
            sequence=UnimodularSequence.of(document.vectors),
            template=_template(document.template),
            signs=tuple(document.signs),
            trace=tuple(
                TraceStep(
                    step.action,
                    tuple(tuple(v) for v in step.vectors),
                    None
                    if step.reduction is None
                    else Reduction(step.reduction.index, step.reduction.coefficient, step.reduction.signs),
                )
                for step in document.trace
            ),
        )

    message = f"Unknown document type {type(document).__name__}"
    raise TypeError(message)


def _multifan(document: MultiFanDocument) -> MultiFan:
    for label, vector in document.edges.items():
        if len(vector) != document.dim:
            message = f"Edge `{label}` has {len(vector)} coordinates, expected {document.dim}"
            raise DocumentError(message)

    return MultiFan.build(
        document.dim,
        {label: tuple(vector) for label, vector in document.edges.items()},
        [WeightedChamber(c.id, frozenset(c.labels), *c.w) for c in document.chambers],
        document.faces,
    )


def _multifan_document(mf: MultiFan) -> MultiFanDocument:
    maximal = [face for face in mf.faces if face and not any(face < other for other in mf.faces)]
    chambers = sorted(mf.chambers, key=lambda c: (sorted(c.labels), c.weight, c.id))
    return MultiFanDocument(
        dim=mf.dim,
        edges={label: list(vector) for label, vector in mf.edges.items()},
        chambers=[ChamberDocument(c.id, sorted(c.labels), c.weight) for c in chambers],
        faces=sorted(sorted(face) for face in maximal),
    )


def _template_document(template: OrigamiTemplate) -> TemplateDocument:
    folds = []
    for fold in template.folds:
        if isinstance(fold, PairFold):
            folds.append(FoldDocument(pair=((fold.a.polytope, fold.a.facet), (fold.b.polytope, fold.b.facet))))
        else:
            folds.append(FoldDocument(single=(fold.a.polytope, fold.a.facet)))

    return TemplateDocument(
        dim=template.dim,
        polytopes=[
            PieceDocument(
                polytope=PolytopeBody(facets=_facet_documents(piece.polytope.facets), dim=piece.polytope.dim),
                orientation=piece.orientation,
            )
            for piece in template.pieces
        ],
        folds=folds,
    )


def _template(document: TemplateDocument) -> OrigamiTemplate:
    folds: list[PairFold | SingleFold] = []
    for index, fold in enumerate(document.folds):
        if (fold.pair is None) == (fold.single is None):
            message = f"Fold {index} must have exactly one of `pair` or `single`"
            raise DocumentError(message)

        if fold.pair is not None:
            folds.append(PairFold(FacetRef(*fold.pair[0]), FacetRef(*fold.pair[1])))
        else:
            folds.append(SingleFold(FacetRef(*fold.single)))  # type: ignore[misc]

    pieces = []
    for index, piece in enumerate(document.polytopes):
        body = piece.polytope
        if body.format is not None and body.format != FORMAT:
            message = f"Polytope {index} has unsupported format `{body.format}`, expected `{FORMAT}`"
            raise DocumentError(message)

        dim = body.dim
        if dim is None and not body.facets:
            dim = document.dim

        polytope = _polytope(body.facets, dim)
        if document.dim is not None and polytope.dim != document.dim:
            message = f"Polytope {index} has dimension {polytope.dim}, expected {document.dim}"
            raise DocumentError(message)

        pieces.append(TemplatePiece(polytope, piece.orientation))

    return OrigamiTemplate(pieces=tuple(pieces), folds=tuple(folds))


def _polytope(facets: list[FacetDocument], dim: int | None) -> DelzantPolytope:
    if dim is None and not facets:
        message = "A polytope without facets needs an explicit `dim`"
        raise DocumentError(message)

    return DelzantPolytope((Facet(tuple(f.normal), f.offset) for f in facets), dim=dim)


def _facet_documents(facets: tuple[Facet, ...]) -> list[FacetDocument]:
    return [FacetDocument(list(f.normal), f.offset) for f in facets]


def _position(data: bytes, offset: int) -> tuple[int, int]:
    before = data[:offset]
    line = before.count(b"\n") + 1
    return line, offset - (before.rfind(b"\n") + 1) + 1


def __dec_hook(type: type[Any], obj: Any) -> Any:  # noqa: A002
    if type is Fraction:
        if isinstance(obj, bool) or not isinstance(obj, int | str):
            message = f"Expected a rational number as an integer or a `p/q` string, got {obj!r}"
            raise ValueError(message)

        try:
            return Fraction(obj)
        except ZeroDivisionError:
            message = f"Zero denominator in {obj!r}"
            raise ValueError(message) from None

    message = f"Cannot decode: {obj!r}"
    raise ValueError(message)


def __enc_hook(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)

    message = f"Cannot encode: {obj!r}"
    raise NotImplementedError(message)
