# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING

from msgspec import Struct

if TYPE_CHECKING:
    from origami.polytopes import DelzantPolytope, Facet, Vertex


class FacetRef(Struct, frozen=True, array_like=True, order=True):
    polytope: int
    facet: int


class VertexRef(Struct, frozen=True, array_like=True, order=True):
    polytope: int
    vertex: int


class PairFold(Struct, frozen=True, tag="pair"):
    a: FacetRef
    b: FacetRef

    @property
    def refs(self) -> tuple[FacetRef, ...]:
        return self.a, self.b


class SingleFold(Struct, frozen=True, tag="single"):
    a: FacetRef

    @property
    def refs(self) -> tuple[FacetRef, ...]:
        return (self.a,)


FoldEntry = PairFold | SingleFold


class TemplatePiece(Struct, frozen=True):
    polytope: DelzantPolytope
    orientation: int | None = 1


class Classification(Struct, frozen=True, forbid_unknown_fields=True):
    cooriented: bool
    oriented: bool
    acyclic: bool


class TemplateGraph(Struct, frozen=True, forbid_unknown_fields=True):
    vertices: int
    edges: tuple[tuple[int, int], ...]
    components: int

    @property
    def b1(self) -> int:
        return len(self.edges) - self.vertices + self.components

    @property
    def acyclic(self) -> bool:
        return self.b1 == 0


class OrigamiTemplate(Struct, frozen=True):
    pieces: tuple[TemplatePiece, ...]
    folds: tuple[FoldEntry, ...] = ()

    @property
    def dim(self) -> int:
        return self.pieces[0].polytope.dim if self.pieces else 0

    def polytope(self, index: int) -> DelzantPolytope:
        return self.pieces[index].polytope

    def orientation(self, index: int) -> int | None:
        return self.pieces[index].orientation

    def facet(self, ref: FacetRef) -> Facet:
        return self.polytope(ref.polytope).facets[ref.facet]

    def vertex(self, ref: VertexRef) -> Vertex:
        return self.polytope(ref.polytope).vertices[ref.vertex]

    def with_polytope(self, index: int, polytope: DelzantPolytope) -> OrigamiTemplate:
        pieces = list(self.pieces)
        pieces[index] = TemplatePiece(polytope, pieces[index].orientation)
        return OrigamiTemplate(tuple(pieces), self.folds)

    @property
    def pairs(self) -> list[PairFold]:
        return [fold for fold in self.folds if isinstance(fold, PairFold)]

    @property
    def singles(self) -> list[SingleFold]:
        return [fold for fold in self.folds if isinstance(fold, SingleFold)]

    def folded(self) -> set[FacetRef]:
        return {ref for fold in self.folds for ref in fold.refs}

    def folded_in(self, polytope: int) -> set[int]:
        return {ref.facet for ref in self.folded() if ref.polytope == polytope}

    def on_fold(self, ref: VertexRef) -> bool:
        return bool(self.vertex(ref).facets & self.folded_in(ref.polytope))

    def fixed_points_of(self, polytope: int) -> frozenset[int]:
        folded = self.folded_in(polytope)
        return frozenset(
            k for k, vertex in enumerate(self.polytope(polytope).vertices) if vertex.facets.isdisjoint(folded)
        )

    def fixed_points(self) -> list[VertexRef]:
        return [VertexRef(i, k) for i in range(len(self.pieces)) for k in sorted(self.fixed_points_of(i))]
