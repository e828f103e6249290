# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from origami.templates.builders import (
    hirzebruch_polygon,
    projective_template,
    sphere_template,
    square_template,
    trapezoid_template,
    triangle_template,
)
from origami.templates.model import (
    Classification,
    FacetRef,
    OrigamiTemplate,
    PairFold,
    SingleFold,
    TemplateGraph,
    TemplatePiece,
    VertexRef,
)
from origami.templates.multifan import multifan_of_template
from origami.templates.operations import (
    align_fold,
    product_with_delzant,
    sum_spheres_at_fixed_points,
    template_connected_sum,
    template_diamond,
    transform_template,
)
from origami.templates.validation import (
    classify,
    count_fixed_points,
    facet_classes,
    faces_connected,
    non_folded_facets,
    template_graph,
    validate_template,
)

__all__ = [
    "Classification",
    "FacetRef",
    "OrigamiTemplate",
    "PairFold",
    "SingleFold",
    "TemplateGraph",
    "TemplatePiece",
    "VertexRef",
    "align_fold",
    "classify",
    "count_fixed_points",
    "faces_connected",
    "facet_classes",
    "hirzebruch_polygon",
    "multifan_of_template",
    "non_folded_facets",
    "product_with_delzant",
    "projective_template",
    "sphere_template",
    "square_template",
    "sum_spheres_at_fixed_points",
    "template_connected_sum",
    "template_diamond",
    "template_graph",
    "transform_template",
    "trapezoid_template",
    "triangle_template",
    "validate_template",
]
