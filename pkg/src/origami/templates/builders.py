# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from fractions import Fraction
from typing import Literal

from origami.polytopes import DelzantPolytope, Facet, box, standard_simplex
from origami.templates.model import FacetRef, OrigamiTemplate, PairFold, SingleFold, TemplatePiece


def sphere_template(n: int = 2) -> OrigamiTemplate:
    """
    Two copies of the standard simplex with opposite orientations folded along the slanted facet.
    For n = 2 these are the two right-angled isosceles triangles of the 4-sphere.
    """
    if n < 1:
        message = f"Sphere templates need dimension at least 1, not {n}"
        raise ValueError(message)

    simplex = standard_simplex(n)
    return OrigamiTemplate(
        pieces=(TemplatePiece(simplex, 1), TemplatePiece(simplex, -1)),
        folds=(PairFold(FacetRef(0, n), FacetRef(1, n)),),
    )


def projective_template(n: int = 2) -> OrigamiTemplate:
    """
    The standard simplex folded onto itself along the slanted facet. Not coorientable.
    """
    return OrigamiTemplate(
        pieces=(TemplatePiece(standard_simplex(n), None),),
        folds=(SingleFold(FacetRef(0, n)),),
    )


def triangle_template() -> OrigamiTemplate:
    return OrigamiTemplate(pieces=(TemplatePiece(standard_simplex(2), 1),))


def square_template(folds: Literal["minus", "both"] = "minus") -> OrigamiTemplate:
    """
    Two unit squares with opposite orientations. The fold `minus` joins the facets with inward normal
    (0, -1); `both` additionally joins the facets with inward normal (0, 1).
    """
    square = box(1, 1)
    top, bottom = 3, 2
    entries = [PairFold(FacetRef(0, top), FacetRef(1, top))]
    if folds == "both":
        entries.append(PairFold(FacetRef(0, bottom), FacetRef(1, bottom)))
    elif folds != "minus":
        message = f"Unknown square fold set: {folds}"
        raise ValueError(message)

    return OrigamiTemplate(pieces=(TemplatePiece(square, 1), TemplatePiece(square, -1)), folds=tuple(entries))


def trapezoid() -> DelzantPolytope:
    """
    Right angles at (0, 0) and (0, 1); the slanted side runs from (2, 0) to (1, 1) and comes last.
    """
    return DelzantPolytope([
        Facet((1, 0), Fraction(0)),
        Facet((0, 1), Fraction(0)),
        Facet((0, -1), Fraction(1)),
        Facet((-1, -1), Fraction(2)),
    ])


def trapezoid_template() -> OrigamiTemplate:
    """
    A trapezoid and its oppositely oriented copy folded along the side that avoids the right angles.
    """
    shape = trapezoid()
    return OrigamiTemplate(
        pieces=(TemplatePiece(shape, 1), TemplatePiece(shape, -1)),
        folds=(PairFold(FacetRef(0, 3), FacetRef(1, 3)),),
    )


def hirzebruch_polygon(b: int) -> DelzantPolytope:
    """
    The trapezoid `{x >= 0, y >= 0, 1 - y >= 0, -x + b y + |b| + 1 >= 0}` whose normal fan is the fan of
    the Hirzebruch surface on (1, 0), (0, 1), (-1, b), (0, -1).
    """
    return DelzantPolytope([
        Facet((1, 0), Fraction(0)),
        Facet((0, 1), Fraction(0)),
        Facet((-1, b), Fraction(abs(b) + 1)),
        Facet((0, -1), Fraction(1)),
    ])

