# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING

from origami.errors import DiamondPreconditionFailed, EdgeNotPresent, NeighborhoodMismatch, NotOriented, WeightMismatch
from origami.fans.model import MultiFan
from origami.fans.operations import self_diamond
from origami.templates.validation import classify

if TYPE_CHECKING:
    from origami.templates.model import FacetRef, OrigamiTemplate


def facet_label(ref: FacetRef) -> str:
    return f"p{ref.polytope}.f{ref.facet}"


def multifan_of_template(template: OrigamiTemplate) -> MultiFan:
    """
    Disjoint union of the oriented normal fans with one diamond operation per pair fold. Edges are
    labeled `p{i}.f{j}` and chambers `p{i}.v{k}`; glued edges keep the smallest label.
    """
    if not classify(template).oriented:
        message = "The multi-fan of a template is only defined for oriented templates"
        raise NotOriented(message)

    mf = MultiFan(dim=template.dim, edges={}, faces=frozenset({frozenset()}))
    for i, piece in enumerate(template.pieces):
        fan = piece.polytope.normal_fan(piece.orientation or 1, prefix=f"p{i}.")
        mf = MultiFan(
            dim=mf.dim,
            edges={**mf.edges, **fan.edges},
            faces=mf.faces | fan.faces,
            chambers=(*mf.chambers, *fan.chambers),
        )

    for fold in template.pairs:
        try:
            mf = self_diamond(mf, facet_label(fold.a), facet_label(fold.b))
        except (NeighborhoodMismatch, WeightMismatch, EdgeNotPresent) as e:
            message = f"Cannot glue along the fold {facet_label(fold.a)} ~ {facet_label(fold.b)}: {e}"
            raise DiamondPreconditionFailed(message) from e

    return mf
