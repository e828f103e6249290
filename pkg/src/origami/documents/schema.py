# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
"""
Wire forms of the JSON documents. Rational numbers are strings `"p/q"` (or `"p"` for integers) and
integers are also accepted on input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from msgspec import Struct

FORMAT = "origami-fan/1"

DocumentKind = Literal["multifan", "polytope", "template", "sequence", "certificate"]


class ChamberDocument(Struct, frozen=True, forbid_unknown_fields=True):
    id: str
    labels: list[str]
    # [w+, w-]
    w: tuple[int, int] = (1, 0)


class MultiFanDocument(Struct, frozen=True, forbid_unknown_fields=True):
    dim: int
    edges: dict[str, list[int]]
    chambers: list[ChamberDocument] = []
    # maximal faces only, the face poset is their closure under subsets
    faces: list[list[str]] = []
    kind: Literal["multifan"] = "multifan"
    format: str = FORMAT


class FacetDocument(Struct, frozen=True, forbid_unknown_fields=True):
    normal: list[int]
    offset: Fraction


class PolytopeDocument(Struct, frozen=True, forbid_unknown_fields=True):
    facets: list[FacetDocument]
    dim: int | None = None
    kind: Literal["polytope"] = "polytope"
    format: str = FORMAT


class PolytopeBody(Struct, frozen=True, forbid_unknown_fields=True, omit_defaults=True):
    """
    A polytope document embedded in a template. The `kind` and `format` fields are accepted but
    never emitted.
    """

    facets: list[FacetDocument]
    dim: int | None = None
    kind: Literal["polytope"] | None = None
    format: str | None = None


class PieceDocument(Struct, frozen=True, forbid_unknown_fields=True):
    polytope: PolytopeBody
    orientation: int | None = 1


class FoldDocument(Struct, frozen=True, forbid_unknown_fields=True, omit_defaults=True):
    """
    Exactly one of `pair` (two `[polytope, facet]` references) or `single` (one reference).
    """

    pair: tuple[tuple[int, int], tuple[int, int]] | None = None
    single: tuple[int, int] | None = None


class TemplateDocument(Struct, frozen=True, forbid_unknown_fields=True):
    polytopes: list[PieceDocument]
    dim: int | None = None
    folds: list[FoldDocument] = []
    kind: Literal["template"] = "template"
    format: str = FORMAT


class SequenceDocument(Struct, frozen=True, forbid_unknown_fields=True):
    vectors: list[list[int]]
    kind: Literal["sequence"] = "sequence"
    format: str = FORMAT


class ReductionDocument(Struct, frozen=True, forbid_unknown_fields=True):
    index: int
    coefficient: int
    signs: tuple[int, int]


class TraceStepDocument(Struct, frozen=True, forbid_unknown_fields=True, omit_defaults=True):
    action: str
    vectors: list[list[int]]
    reduction: ReductionDocument | None = None


class CertificateDocument(Struct, frozen=True, forbid_unknown_fields=True):
    vectors: list[list[int]]
    signs: list[int]
    template: TemplateDocument
    trace: list[TraceStepDocument] = []
    verified: bool | None = None
    kind: Literal["certificate"] = "certificate"
    format: str = FORMAT


DOCUMENT_TYPES: dict[str, type[Struct]] = {
    "multifan": MultiFanDocument,
    "polytope": PolytopeDocument,
    "template": TemplateDocument,
    "sequence": SequenceDocument,
    "certificate": CertificateDocument,
}
