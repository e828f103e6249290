# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
"""
Delzant polytopes in H-representation `{x : <normal_i, x> + offset_i >= 0}` with inward normals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING

from msgspec import Struct

from origami.errors import DepthTooLarge, DimensionMismatch, Empty, NotDelzant, RedundantFacet, Unbounded
from origami.lattice import content, det, dot, rank, solve
from origami.reports import ValidationReport, Violation

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

    from origami.fans.model import MultiFan
    from origami.lattice import LatticeAffineMap, LatticeVector, RationalVector


class Facet(Struct, frozen=True, forbid_unknown_fields=True):
    normal: LatticeVector
    offset: Fraction

    def value(self, point: Sequence[Fraction | int]) -> Fraction:
        return Fraction(dot(self.normal, point)) + self.offset


class Vertex(Struct, frozen=True, forbid_unknown_fields=True):
    point: RationalVector
    facets: frozenset[int]


class DelzantPolytope:
    def __init__(self, facets: Iterable[Facet | tuple[Sequence[int], Fraction | int | str]], *, dim: int | None = None):
        self.__facets = tuple(
            facet if isinstance(facet, Facet) else Facet(tuple(facet[0]), Fraction(facet[1])) for facet in facets
        )
        if dim is None:
            if not self.__facets:
                message = "The dimension of a polytope without facets must be given explicitly"
                raise ValueError(message)

            dim = len(self.__facets[0].normal)

        for facet in self.__facets:
            if len(facet.normal) != dim:
                message = f"Facet normal {facet.normal} does not live in dimension {dim}"
                raise DimensionMismatch(message)

        self.__dim = dim

    @property
    def dim(self) -> int:
        return self.__dim

    @property
    def facets(self) -> tuple[Facet, ...]:
        return self.__facets

    @property
    def normals(self) -> list[LatticeVector]:
        return [facet.normal for facet in self.__facets]

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        """
        All vertices with their incident facets, sorted by coordinates.

        Raises `Unbounded`, `Empty` or `RedundantFacet` when the facet list does not describe a
        full-dimensional polytope in which every facet is supporting.
        """
        n = self.__dim
        if n == 0:
            return (Vertex(point=(), facets=frozenset()),)

        if rank(self.normals) < n:
            message = "The facet normals do not span the ambient space"
            raise Unbounded(message)

        points: set[RationalVector] = set()
        for subset in combinations(range(len(self.__facets)), n):
            rows = [self.__facets[i].normal for i in subset]
            if det(rows) == 0:
                continue

            point = solve(rows, [-self.__facets[i].offset for i in subset])
            if point is not None and all(facet.value(point) >= 0 for facet in self.__facets):
                points.add(point)

        if not points:
            message = "The facet inequalities have no common solution"
            raise Empty(message)

        for direction in self._recession_candidates():
            if all(dot(facet.normal, direction) >= 0 for facet in self.__facets):
                message = f"The polytope is unbounded in direction {direction}"
                raise Unbounded(message)

        vertices = tuple(
            Vertex(point=point, facets=frozenset(i for i, facet in enumerate(self.__facets) if facet.value(point) == 0))
            for point in sorted(points)
        )
        if _affine_rank(v.point for v in vertices) < n:
            message = "The polytope has empty interior"
            raise Empty(message)

        for i, facet in enumerate(self.__facets):
            tight = [v.point for v in vertices if i in v.facets]
            if _affine_rank(tight) != n - 1:
                message = f"Facet {i} with normal {facet.normal} and offset {facet.offset} is not supporting"
                raise RedundantFacet(message)

        return vertices

    def check(self) -> None:
        """
        Force vertex enumeration, raising if the description is not a bounded full polytope.
        """
        _ = self.vertices

    def facet_vertices(self, facet: int) -> frozenset[int]:
        self._check_facet(facet)
        return frozenset(k for k, vertex in enumerate(self.vertices) if facet in vertex.facets)

    def facet_neighbors(self, facet: int) -> frozenset[int]:
        own = self.facet_vertices(facet)
        return frozenset(
            other for other in range(len(self.__facets)) if other != facet and own & self.facet_vertices(other)
        )

    def vertex_at(self, point: Sequence[Fraction | int]) -> int:
        target = tuple(Fraction(x) for x in point)
        for k, vertex in enumerate(self.vertices):
            if vertex.point == target:
                return k

        message = f"Point {target} is not a vertex of the polytope"
        raise ValueError(message)

    def is_delzant(self) -> ValidationReport:
        return ValidationReport.collect(self._delzant_violations())

    def normal_fan(self, orientation: int = 1, *, prefix: str = "") -> MultiFan:
        """
        Edge `{prefix}f{i}` is the normal of facet `i`, chamber `{prefix}v{k}` is the cone of vertex `k`.
        """
        from origami.fans.model import MultiFan, WeightedChamber

        if orientation not in {1, -1}:
            message = f"Orientation must be 1 or -1, not {orientation}"
            raise ValueError(message)

        report = self.is_delzant()
        if not report.valid:
            message = f"The polytope is not Delzant: {report.violations[0].detail}"
            raise NotDelzant(message)

        weight = (1, 0) if orientation == 1 else (0, 1)
        return MultiFan.build(
            self.__dim,
            {f"{prefix}f{i}": facet.normal for i, facet in enumerate(self.__facets)},
            [
                WeightedChamber(f"{prefix}v{k}", frozenset(f"{prefix}f{i}" for i in vertex.facets), *weight)
                for k, vertex in enumerate(self.vertices)
            ],
        )

    def chop_limit(self, vertex: int) -> Fraction:
        """
        The supremum of depths at which the vertex can be cut off without reaching another vertex.
        """
        point, direction = self._chop_direction(vertex)
        return min(
            (
                Fraction(dot(direction, other.point)) - dot(direction, point)
                for k, other in enumerate(self.vertices)
                if k != vertex
            ),
            default=Fraction(1),
        )

    def corner_chop(self, vertex: int, depth: Fraction | int | None = None) -> DelzantPolytope:
        """
        Cut off a vertex by a facet whose normal is the sum of the incident normals, at lattice
        distance `depth` along each incident edge. The default depth is half the largest allowed one.
        """
        point, direction = self._chop_direction(vertex)
        limit = self.chop_limit(vertex)
        depth = limit / 2 if depth is None else Fraction(depth)
        if depth <= 0:
            message = f"Chop depth must be positive, not {depth}"
            raise ValueError(message)

        if depth >= limit:
            message = f"Chop depth {depth} reaches another vertex (limit {limit})"
            raise DepthTooLarge(message)

        cut = Facet(direction, -Fraction(dot(direction, point)) - depth)
        return DelzantPolytope((*self.__facets, cut), dim=self.__dim)

    def product(self, other: DelzantPolytope) -> DelzantPolytope:
        left = [Facet((*f.normal, *(0,) * other.dim), f.offset) for f in self.__facets]
        right = [Facet(((0,) * self.__dim + f.normal), f.offset) for f in other.facets]
        return DelzantPolytope((*left, *right), dim=self.__dim + other.dim)

    def transform(self, affine: LatticeAffineMap) -> DelzantPolytope:
        moved = []
        for facet in self.__facets:
            normal = affine.apply_normal(facet.normal)
            moved.append(Facet(normal, facet.offset - affine.offset_shift(normal)))

        return DelzantPolytope(moved, dim=self.__dim)

    def dilate(self, factor: Fraction | int) -> DelzantPolytope:
        factor = Fraction(factor)
        if factor <= 0:
            message = f"Dilation factor must be positive, not {factor}"
            raise ValueError(message)

        return DelzantPolytope((Facet(f.normal, f.offset * factor) for f in self.__facets), dim=self.__dim)

    def _chop_direction(self, vertex: int) -> tuple[RationalVector, LatticeVector]:
        if not 0 <= vertex < len(self.vertices):
            message = f"Vertex index {vertex} out of range"
            raise IndexError(message)

        incident = sorted(self.vertices[vertex].facets)
        if len(incident) != self.__dim:
            message = f"Vertex {self.vertices[vertex].point} lies on {len(incident)} facets, expected {self.__dim}"
            raise NotDelzant(message)

        normals = [self.__facets[i].normal for i in incident]
        direction = tuple(sum(column) for column in zip(*normals, strict=True))
        return self.vertices[vertex].point, direction

    def _check_facet(self, facet: int) -> None:
        if not 0 <= facet < len(self.__facets):
            message = f"Facet index {facet} out of range"
            raise IndexError(message)

    def _recession_candidates(self) -> Iterator[tuple[int, ...]]:
        n = self.__dim
        for subset in combinations(self.normals, n - 1):
            direction = tuple(
                (-1) ** i * det([tuple(row[j] for j in range(n) if j != i) for row in subset]) for i in range(n)
            )
            if any(direction):
                yield direction
                yield tuple(-x for x in direction)

    def _delzant_violations(self) -> Iterator[Violation]:
        for i, facet in enumerate(self.__facets):
            if content(facet.normal) != 1:
                yield Violation("non-primitive", f"facet {i} has non-primitive normal {facet.normal}")

        for vertex in self.vertices:
            if len(vertex.facets) != self.__dim:
                yield Violation(
                    "not-simple", f"vertex {_show(vertex.point)} lies on {len(vertex.facets)} facets"
                )
                continue

            determinant = det([self.__facets[i].normal for i in sorted(vertex.facets)])
            if abs(determinant) != 1:
                yield Violation(
                    "not-basis", f"normals at vertex {_show(vertex.point)} have determinant {determinant}"
                )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DelzantPolytope):
            return NotImplemented

        return self.__dim == other.dim and sorted(self.__facets, key=_facet_key) == sorted(other.facets, key=_facet_key)

    def __hash__(self) -> int:
        return hash((self.__dim, tuple(sorted(self.__facets, key=_facet_key))))

    def __repr__(self) -> str:
        inner = ", ".join(f"({list(f.normal)}, {f.offset})" for f in self.__facets)
        return f"DelzantPolytope([{inner}], dim={self.__dim})"


def standard_simplex(n: int, size: Fraction | int = 1) -> DelzantPolytope:
    """
    `{x >= 0, x_1 + ... + x_n <= size}`. The slanted facet comes last.
    """
    facets = [Facet(tuple(int(i == j) for j in range(n)), Fraction(0)) for i in range(n)]
    facets.append(Facet((-1,) * n, Fraction(size)))
    return DelzantPolytope(facets, dim=n)


def box(*lengths: Fraction | int) -> DelzantPolytope:
    """
    `[0, l_1] x ... x [0, l_n]` with facets ordered `x_i >= 0` then `x_i <= l_i` per coordinate.
    """
    n = len(lengths)
    facets = []
    for i, length in enumerate(lengths):
        unit = tuple(int(i == j) for j in range(n))
        facets.extend((Facet(unit, Fraction(0)), Facet(tuple(-x for x in unit), Fraction(length))))

    return DelzantPolytope(facets, dim=n)


def point() -> DelzantPolytope:
    return DelzantPolytope((), dim=0)


def _facet_key(facet: Facet) -> tuple[LatticeVector, Fraction]:
    return facet.normal, facet.offset


def _affine_rank(points: Iterable[Sequence[Fraction]]) -> int:
    points = list(points)
    if not points:
        return -1

    base = points[0]
    return rank([[a - b for a, b in zip(p, base, strict=True)] for p in points[1:]])


def _show(point: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(x) for x in point) + ")"
