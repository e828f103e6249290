# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
"""
Origami template axioms and the combinatorics of the glued space.

Local agreement at a pair fold (F in P, F' in P') is decided by: equal inward normals and offsets, equal
vertex sets, and for every facet G of P meeting F a facet G' of P' meeting F' with the same
supporting halfspace and `G ∩ F = G' ∩ F'`, in both directions.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import TYPE_CHECKING

import networkx as nx
from networkx.utils import UnionFind

from origami.errors import OrigamiError
from origami.reports import ValidationReport, Violation
from origami.templates.model import Classification, FacetRef, TemplateGraph

if TYPE_CHECKING:
    from collections.abc import Iterator

    from origami.lattice import RationalVector
    from origami.polytopes import DelzantPolytope
    from origami.templates.model import OrigamiTemplate


def validate_template(template: OrigamiTemplate) -> ValidationReport:
    return ValidationReport.collect(_violations(template))


def fold_agreement(first: DelzantPolytope, facet: int, second: DelzantPolytope, facet2: int) -> list[str]:
    """
    Reasons why the two polytopes do not agree near the given facets; empty when they do.
    """
    problems = []
    if first.facets[facet] != second.facets[facet2]:
        problems.append(f"supporting halfspaces differ: {_halfspace(first, facet)} vs {_halfspace(second, facet2)}")
        return problems

    if _points(first, first.facet_vertices(facet)) != _points(second, second.facet_vertices(facet2)):
        problems.append("facets have different vertices")
        return problems

    for one, i, other, j in ((first, facet, second, facet2), (second, facet2, first, facet)):
        for neighbor in sorted(one.facet_neighbors(i)):
            ridge = _points(one, one.facet_vertices(i) & one.facet_vertices(neighbor))
            if not any(
                other.facets[candidate] == one.facets[neighbor]
                and _points(other, other.facet_vertices(j) & other.facet_vertices(candidate)) == ridge
                for candidate in other.facet_neighbors(j)
            ):
                problems.append(f"adjacent facet {_halfspace(one, neighbor)} has no counterpart across the fold")

    return problems


def template_graph(template: OrigamiTemplate) -> TemplateGraph:
    graph = _graph(template)
    return TemplateGraph(
        vertices=graph.number_of_nodes(),
        edges=tuple(sorted((min(u, v), max(u, v)) for u, v in graph.edges())),
        components=nx.number_connected_components(graph) if graph.number_of_nodes() else 0,
    )


def classify(template: OrigamiTemplate) -> Classification:
    cooriented = not template.singles
    oriented = (
        cooriented
        and all(piece.orientation in {1, -1} for piece in template.pieces)
        and all(
            template.orientation(fold.a.polytope) == -template.orientation(fold.b.polytope)  # type: ignore[operator]
            for fold in template.pairs
        )
    )
    return Classification(cooriented=cooriented, oriented=oriented, acyclic=template_graph(template).acyclic)


def count_fixed_points(template: OrigamiTemplate) -> int:
    return len(template.fixed_points())


def non_folded_facets(template: OrigamiTemplate) -> set[FacetRef]:
    """
    Facets that neither are folded nor meet a folded facet.
    """
    result = set()
    for i, piece in enumerate(template.pieces):
        folded = template.folded_in(i)
        touching = set(folded)
        for facet in folded:
            touching |= piece.polytope.facet_neighbors(facet)

        result.update(FacetRef(i, j) for j in range(len(piece.polytope.facets)) if j not in touching)

    return result


def facet_classes(template: OrigamiTemplate) -> list[frozenset[FacetRef]]:
    """
    Facets of the glued space: classes of non-folded polytope facets identified across pair folds.
    """
    folded = template.folded()
    members = [
        FacetRef(i, j)
        for i, piece in enumerate(template.pieces)
        for j in range(len(piece.polytope.facets))
        if FacetRef(i, j) not in folded
    ]
    glued = UnionFind(members)
    for fold in template.pairs:
        first = template.polytope(fold.a.polytope)
        second = template.polytope(fold.b.polytope)
        for neighbor in first.facet_neighbors(fold.a.facet):
            for candidate in second.facet_neighbors(fold.b.facet):
                if first.facets[neighbor] == second.facets[candidate]:
                    glued.union(FacetRef(fold.a.polytope, neighbor), FacetRef(fold.b.polytope, candidate))

    return sorted((frozenset(group) for group in glued.to_sets()), key=sorted)


def faces_connected(template: OrigamiTemplate) -> bool:
    """
    Whether every nonempty intersection of facets of the glued space is connected and contains a
    vertex of the glued space.
    """
    classes = facet_classes(template)
    for size in range(1, template.dim + 1):
        for chosen in combinations(classes, size):
            pieces = list(_intersection_pieces(template, chosen))
            if not pieces:
                continue

            graph = nx.Graph()
            graph.add_nodes_from(range(len(pieces)))
            for (x, (i, face)), (y, (j, face2)) in combinations(enumerate(pieces), 2):
                if (i == j and face & face2) or (i != j and _glued(template, i, face, j, face2)):
                    graph.add_edge(x, y)

            components = list(nx.connected_components(graph))
            if len(components) > 1:
                return False

            if not any(template.fixed_points_of(i) & face for i, face in pieces):
                return False

    return True


def _intersection_pieces(
    template: OrigamiTemplate, chosen: tuple[frozenset[FacetRef], ...]
) -> Iterator[tuple[int, frozenset[int]]]:
    for i, piece in enumerate(template.pieces):
        options = [sorted(ref.facet for ref in group if ref.polytope == i) for group in chosen]
        if not all(options):
            continue

        for facets in product(*options):
            common = frozenset.intersection(*(piece.polytope.facet_vertices(f) for f in facets))
            if common:
                yield i, common


def _glued(template: OrigamiTemplate, i: int, face: frozenset[int], j: int, face2: frozenset[int]) -> bool:
    for fold in template.pairs:
        for a, b in ((fold.a, fold.b), (fold.b, fold.a)):
            if a.polytope != i or b.polytope != j:
                continue

            here = _points(template.polytope(i), face & template.polytope(i).facet_vertices(a.facet))
            there = _points(template.polytope(j), face2 & template.polytope(j).facet_vertices(b.facet))
            if here & there:
                return True

    return False


def _graph(template: OrigamiTemplate) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(template.pieces)))
    graph.add_edges_from((fold.a.polytope, fold.b.polytope) for fold in template.pairs)
    return graph


def _violations(template: OrigamiTemplate) -> Iterator[Violation]:
    if not template.pieces:
        yield Violation("empty", "the template has no polytopes")
        return

    broken = False
    for i, piece in enumerate(template.pieces):
        polytope = piece.polytope
        if polytope.dim != template.dim:
            yield Violation("dimension", f"polytope {i} has dimension {polytope.dim}, expected {template.dim}")
            broken = True
            continue

        if piece.orientation not in {1, -1, None}:
            yield Violation("orientation", f"polytope {i} has orientation {piece.orientation}")

        try:
            report = polytope.is_delzant()
        except OrigamiError as e:
            yield Violation("polytope", f"polytope {i}: {type(e).__name__}: {e}")
            broken = True
            continue

        for violation in report.violations:
            yield Violation("not-delzant", f"polytope {i}: {violation.detail}")

    for fold in template.folds:
        for ref in fold.refs:
            if not 0 <= ref.polytope < len(template.pieces) or not (
                0 <= ref.facet < len(template.polytope(ref.polytope).facets)
            ):
                yield Violation("bad-ref", f"fold refers to missing facet {_ref(ref)}")
                broken = True

    if broken:
        return

    for fold in template.pairs:
        if fold.a == fold.b:
            yield Violation("self-fold", f"facet {_ref(fold.a)} is paired with itself")
            continue

        for problem in fold_agreement(
            template.polytope(fold.a.polytope), fold.a.facet, template.polytope(fold.b.polytope), fold.b.facet
        ):
            yield Violation("O1", f"fold {_ref(fold.a)} ~ {_ref(fold.b)}: {problem}")

    for index, fold in enumerate(template.folds):
        elsewhere = {ref for k, other in enumerate(template.folds) if k != index for ref in other.refs}
        for ref in fold.refs:
            polytope = template.polytope(ref.polytope)
            nearby = {ref} | {FacetRef(ref.polytope, j) for j in polytope.facet_neighbors(ref.facet)}
            for clash in sorted(nearby & elsewhere):
                relation = "is" if clash == ref else "neighbors it and is"
                yield Violation("O2", f"folded facet {_ref(ref)}: facet {_ref(clash)} {relation} folded elsewhere")

    graph = template_graph(template)
    if graph.components > 1:
        yield Violation("O3", f"the glued space has {graph.components} connected components")


def _points(polytope: DelzantPolytope, vertices: frozenset[int]) -> frozenset[RationalVector]:
    return frozenset(polytope.vertices[k].point for k in vertices)


def _halfspace(polytope: DelzantPolytope, facet: int) -> str:
    f = polytope.facets[facet]
    return f"<{list(f.normal)}, x> + {f.offset} >= 0"


def _ref(ref: FacetRef) -> str:
    return f"[{ref.polytope}, {ref.facet}]"
