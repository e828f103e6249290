# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

from msgspec import structs

from origami.errors import (
    ConeMismatch,
    DimensionMismatch,
    NeighborhoodMismatch,
    NotNonFolded,
    SameOrientation,
    VertexOnFold,
)
from origami.lattice import IntegerMatrix, LatticeAffineMap
from origami.templates.model import FacetRef, OrigamiTemplate, PairFold, SingleFold, TemplatePiece, VertexRef
from origami.templates.validation import fold_agreement, non_folded_facets

if TYPE_CHECKING:
    from origami.polytopes import DelzantPolytope


def transform_template(template: OrigamiTemplate, affine: LatticeAffineMap) -> OrigamiTemplate:
    """
    Move every polytope by a lattice-affine map. Orientations are multiplied by its determinant.
    """
    sign = affine.determinant
    return structs.replace(
        template,
        pieces=tuple(
            TemplatePiece(
                piece.polytope.transform(affine),
                None if piece.orientation is None else piece.orientation * sign,
            )
            for piece in template.pieces
        ),
    )


def dilate_template(template: OrigamiTemplate, factor: Fraction | int) -> OrigamiTemplate:
    return structs.replace(
        template,
        pieces=tuple(TemplatePiece(piece.polytope.dilate(factor), piece.orientation) for piece in template.pieces),
    )


def align_fold(template: OrigamiTemplate, facet: FacetRef, other: OrigamiTemplate, facet2: FacetRef) -> OrigamiTemplate:
    """
    Dilate and translate `other` so that `facet2` lands on `facet`. The two facets must already share
    their inward normal.
    """
    target = template.polytope(facet.polytope)
    source = other.polytope(facet2.polytope)
    if target.facets[facet.facet].normal != source.facets[facet2.facet].normal:
        message = (
            f"Facets have different normals {target.facets[facet.facet].normal} and "
            f"{source.facets[facet2.facet].normal}; apply a linear map first"
        )
        raise NeighborhoodMismatch(message)

    wanted = sorted(target.vertices[k].point for k in target.facet_vertices(facet.facet))
    given = sorted(source.vertices[k].point for k in source.facet_vertices(facet2.facet))
    if len(wanted) != len(given):
        message = f"Facets have {len(wanted)} and {len(given)} vertices"
        raise NeighborhoodMismatch(message)

    factor = Fraction(1)
    if len(given) > 1:
        axis = next(i for i in range(other.dim) if given[-1][i] != given[0][i])
        factor = (wanted[-1][axis] - wanted[0][axis]) / (given[-1][axis] - given[0][axis])

    if factor <= 0:
        message = "Facets cannot be matched by a positive dilation"
        raise NeighborhoodMismatch(message)

    shift = tuple(w - factor * g for w, g in zip(wanted[0], given[0], strict=True))
    moved = transform_template(dilate_template(other, factor), LatticeAffineMap.translate(shift))
    landed = sorted(
        moved.polytope(facet2.polytope).vertices[k].point
        for k in moved.polytope(facet2.polytope).facet_vertices(facet2.facet)
    )
    if landed != wanted:
        message = "Facets are not related by a dilation and translation"
        raise NeighborhoodMismatch(message)

    return moved


def template_diamond(
    template: OrigamiTemplate, other: OrigamiTemplate, facet: FacetRef, facet2: FacetRef
) -> OrigamiTemplate:
    """
    Union of two templates with a new pair fold joining `facet` of `template` and `facet2` of `other`.
    """
    if template.dim != other.dim:
        message = f"Cannot combine templates of dimensions {template.dim} and {other.dim}"
        raise DimensionMismatch(message)

    for host, ref in ((template, facet), (other, facet2)):
        if ref not in non_folded_facets(host):
            message = f"Facet [{ref.polytope}, {ref.facet}] touches a folded facet"
            raise NotNonFolded(message)

    orientation = template.orientation(facet.polytope)
    orientation2 = other.orientation(facet2.polytope)
    if orientation is None or orientation2 is None or orientation != -orientation2:
        message = f"Host polytopes must have opposite orientations, got {orientation} and {orientation2}"
        raise SameOrientation(message)

    if problems := fold_agreement(
        template.polytope(facet.polytope), facet.facet, other.polytope(facet2.polytope), facet2.facet
    ):
        message = f"Polytopes do not agree near the facets: {problems[0]}"
        raise NeighborhoodMismatch(message)

    shift = len(template.pieces)
    return OrigamiTemplate(
        pieces=(*template.pieces, *other.pieces),
        folds=(
            *template.folds,
            *(_shift_fold(fold, shift) for fold in other.folds),
            PairFold(facet, FacetRef(facet2.polytope + shift, facet2.facet)),
        ),
    )


def template_connected_sum(
    template: OrigamiTemplate,
    other: OrigamiTemplate,
    vertex: VertexRef,
    vertex2: VertexRef,
    *,
    depth: Fraction | int | None = None,
) -> OrigamiTemplate:
    """
    Translate `other` so that the two vertices coincide, cut both corners at the same depth and fold
    the created facets together.
    """
    for host, ref in ((template, vertex), (other, vertex2)):
        if host.on_fold(ref):
            message = f"Vertex {host.vertex(ref).point} lies on a folded facet"
            raise VertexOnFold(message)

    first = template.polytope(vertex.polytope)
    point = first.vertices[vertex.vertex].point
    cone = sorted(first.facets[i].normal for i in first.vertices[vertex.vertex].facets)
    second = other.polytope(vertex2.polytope)
    cone2 = sorted(second.facets[i].normal for i in second.vertices[vertex2.vertex].facets)
    if cone != cone2:
        message = f"Vertex cones differ: {cone} and {cone2}"
        raise ConeMismatch(message)

    orientation = template.orientation(vertex.polytope)
    if orientation is None or orientation != -(other.orientation(vertex2.polytope) or 0):
        message = "Host polytopes of the two vertices must have opposite orientations"
        raise SameOrientation(message)

    offset = tuple(p - q for p, q in zip(point, second.vertices[vertex2.vertex].point, strict=True))
    moved = transform_template(other, LatticeAffineMap.translate(offset))
    second = moved.polytope(vertex2.polytope)
    index2 = second.vertex_at(point)

    if depth is None:
        depth = min(first.chop_limit(vertex.vertex), second.chop_limit(index2)) / 2

    chopped = template.with_polytope(vertex.polytope, first.corner_chop(vertex.vertex, depth))
    chopped2 = moved.with_polytope(vertex2.polytope, second.corner_chop(index2, depth))
    return template_diamond(
        chopped,
        chopped2,
        FacetRef(vertex.polytope, len(first.facets)),
        FacetRef(vertex2.polytope, len(second.facets)),
    )


def product_with_delzant(template: OrigamiTemplate, polytope: DelzantPolytope) -> OrigamiTemplate:
    """
    Replace every polytope `P` by `P x Q`. Facet indices of `P` are kept, so every fold `F` becomes `F x Q`.
    """
    return structs.replace(
        template,
        pieces=tuple(TemplatePiece(piece.polytope.product(polytope), piece.orientation) for piece in template.pieces),
    )


def sum_spheres_at_fixed_points(template: OrigamiTemplate) -> OrigamiTemplate:
    """
    Connected sum with a sphere template at every fixed point of an oriented template.
    """
    from origami.templates.builders import sphere_template

    n = template.dim
    result = template
    for ref in template.fixed_points():
        point = template.vertex(ref).point
        polytope = result.polytope(ref.polytope)
        current = polytope.vertex_at(point)
        incident = sorted(polytope.vertices[current].facets)
        frame = IntegerMatrix.from_columns([polytope.facets[i].normal for i in incident])
        sphere = transform_template(sphere_template(n), LatticeAffineMap.from_linear(frame))
        orientation = result.orientation(ref.polytope)
        piece = next(k for k, p in enumerate(sphere.pieces) if p.orientation == -(orientation or 1))
        corner = sphere.polytope(piece).vertex_at((0,) * n)
        result = template_connected_sum(result, sphere, VertexRef(ref.polytope, current), VertexRef(piece, corner))

    return result


def _shift_fold(fold: PairFold | SingleFold, shift: int) -> PairFold | SingleFold:
    if isinstance(fold, PairFold):
        return PairFold(
            FacetRef(fold.a.polytope + shift, fold.a.facet), FacetRef(fold.b.polytope + shift, fold.b.facet)
        )

    return SingleFold(FacetRef(fold.a.polytope + shift, fold.a.facet))
