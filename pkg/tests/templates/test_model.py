# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from origami.polytopes import standard_simplex
from origami.templates import FacetRef, OrigamiTemplate, PairFold, SingleFold, TemplatePiece, VertexRef, sphere_template


class TestRefs:
    def test_ordering(self):
        assert sorted([FacetRef(1, 0), FacetRef(0, 2), FacetRef(0, 1)]) == [
            FacetRef(0, 1),
            FacetRef(0, 2),
            FacetRef(1, 0),
        ]

    def test_fold_refs(self):
        assert PairFold(FacetRef(0, 1), FacetRef(1, 1)).refs == (FacetRef(0, 1), FacetRef(1, 1))
        assert SingleFold(FacetRef(0, 1)).refs == (FacetRef(0, 1),)


class TestOrigamiTemplate:
    def test_dimension(self):
        assert sphere_template(3).dim == 3
        assert OrigamiTemplate(()).dim == 0

    def test_lookup(self):
        template = sphere_template(2)

        assert template.orientation(1) == -1
        assert template.facet(FacetRef(0, 2)).normal == (-1, -1)
        assert template.vertex(VertexRef(1, 0)).point == (0, 0)

    def test_folds(self):
        template = sphere_template(2)

        assert template.pairs == [PairFold(FacetRef(0, 2), FacetRef(1, 2))]
        assert template.singles == []
        assert template.folded() == {FacetRef(0, 2), FacetRef(1, 2)}
        assert template.folded_in(0) == {2}

    def test_fixed_points(self):
        template = sphere_template(2)

        assert template.fixed_points() == [VertexRef(0, 0), VertexRef(1, 0)]
        assert template.on_fold(VertexRef(0, 1))
        assert not template.on_fold(VertexRef(0, 0))

    def test_with_polytope_keeps_orientation(self):
        template = sphere_template(2).with_polytope(1, standard_simplex(2).dilate(2))

        assert template.pieces[1] == TemplatePiece(standard_simplex(2).dilate(2), -1)
        assert template.folds == sphere_template(2).folds
