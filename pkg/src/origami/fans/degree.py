# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
"""
Local degrees, pre-completeness, projected multi-fans and completeness.

A vector is generic when it lies on no linear subspace spanned by a cone of dimension below n. The
local degree at a generic vector `v` is the sum of `w_plus - w_minus` over the chambers whose interior
contains `v`. Witnesses are chosen one per region of the arrangement of walls, exactly up to dimension
three and by seeded sampling above.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import TYPE_CHECKING, Literal

from msgspec import Struct

from origami.errors import EmptyTopDimension, FaceNotPresent, NotPreComplete
from origami.fans.model import MultiFan, WeightedChamber
from origami.lattice import det, det2, dot, primitive, quotient_map, rank, solve

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from origami.lattice import LatticeVector, RationalVector

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 64
SAMPLE_RANGE = 10**6


class Witness(Struct, frozen=True, forbid_unknown_fields=True):
    point: RationalVector
    degree: int


class DegreeReport(Struct, frozen=True, forbid_unknown_fields=True):
    method: Literal["exact", "probabilistic"]
    witnesses: tuple[Witness, ...]

    @property
    def pre_complete(self) -> bool:
        return len({witness.degree for witness in self.witnesses}) <= 1

    @property
    def degree(self) -> int | None:
        return self.witnesses[0].degree if self.pre_complete else None

    def disagreement(self) -> tuple[Witness, Witness] | None:
        first = self.witnesses[0]
        for witness in self.witnesses[1:]:
            if witness.degree != first.degree:
                return first, witness

        return None


def local_degree(mf: MultiFan, point: Sequence[Fraction | int]) -> int:
    return sum(chamber.net for chamber in mf.chambers if _in_interior(mf, chamber, point))


def local_degrees(mf: MultiFan, *, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> DegreeReport:
    if not mf.chambers:
        message = "The multi-fan has no top-dimensional cones"
        raise EmptyTopDimension(message)

    if mf.dim <= 3:
        points = generic_witnesses(mf)
        method: Literal["exact", "probabilistic"] = "exact"
    else:
        points = _sampled_witnesses(mf, seed=seed, samples=samples)
        method = "probabilistic"

    cache: dict[frozenset[str], list[list[Fraction]]] = {}
    witnesses = tuple(
        Witness(point=point, degree=sum(c.net for c in mf.chambers if _in_interior(mf, c, point, cache)))
        for point in points
    )
    return DegreeReport(method=method, witnesses=witnesses)


def degree(mf: MultiFan, *, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> int:
    report = local_degrees(mf, seed=seed, samples=samples)
    if (pair := report.disagreement()) is not None:
        first, second = pair
        raise NotPreComplete((first.point, first.degree), (second.point, second.degree))

    return report.witnesses[0].degree


def is_pre_complete(mf: MultiFan, *, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> bool:
    if not mf.chambers:
        return False

    return local_degrees(mf, seed=seed, samples=samples).pre_complete


def projected(mf: MultiFan, face: Iterable[str]) -> MultiFan:
    """
    The multi-fan induced by the cones containing `face` in the quotient of the lattice by the
    saturated span of the face.
    """
    base = frozenset(face)
    if base not in mf.faces:
        message = f"Face {sorted(base)} is not part of the multi-fan"
        raise FaceNotPresent(message)

    if not base:
        return mf

    quotient = quotient_map(mf.vectors(base), mf.dim)
    edges: dict[str, LatticeVector] = {}
    for star in mf.faces_containing(base):
        if len(star) == len(base) + 1:
            (label,) = star - base
            edges[label] = primitive(quotient.apply(mf.vector(label)))

    return MultiFan(
        dim=mf.dim - len(base),
        edges=edges,
        faces=frozenset(star - base for star in mf.faces_containing(base)),
        chambers=tuple(
            WeightedChamber(id=c.id, labels=c.labels - base, w_plus=c.w_plus, w_minus=c.w_minus)
            for c in mf.chambers_containing(base)
        ),
    )


def is_complete(mf: MultiFan, *, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> bool:
    if not is_pre_complete(mf, seed=seed, samples=samples):
        return False

    return all(
        is_pre_complete(projected(mf, face), seed=seed, samples=samples) for face in mf.faces if face
    )


def generic_witnesses(mf: MultiFan) -> list[RationalVector]:
    """
    One rational point in every region cut out by the walls of the multi-fan, for dimensions up to three.
    """
    directions = _distinct_lines(mf.edges.values())
    if mf.dim == 0:
        return [()]

    if mf.dim == 1:
        return [(Fraction(1),), (Fraction(-1),)]

    if mf.dim == 2:
        return [tuple(map(Fraction, point)) for point in _sector_witnesses(directions)]

    if mf.dim == 3:
        return _space_witnesses(directions)

    message = f"Exact witnesses are only available up to dimension 3, not {mf.dim}"
    raise ValueError(message)


def _in_interior(
    mf: MultiFan,
    chamber: WeightedChamber,
    point: Sequence[Fraction | int],
    cache: dict[frozenset[str], list[list[Fraction]]] | None = None,
) -> bool:
    if mf.dim == 0:
        return True

    if cache is None:
        cache = {}

    inverse = cache.get(chamber.labels)
    if inverse is None:
        columns = mf.vectors(chamber.labels)
        if det(columns) == 0:
            return False

        rows = [[Fraction(column[i]) for column in columns] for i in range(mf.dim)]
        inverse = [
            list(solve(rows, [Fraction(int(i == j)) for i in range(mf.dim)]) or ()) for j in range(mf.dim)
        ]
        cache[chamber.labels] = inverse

    # `inverse[j]` is the j-th column of the inverse matrix
    coefficients = [
        sum((inverse[j][i] * point[j] for j in range(mf.dim)), Fraction(0)) for i in range(mf.dim)
    ]
    return all(c > 0 for c in coefficients)


def _distinct_lines(vectors: Iterable[LatticeVector]) -> list[LatticeVector]:
    lines: set[LatticeVector] = set()
    for vector in vectors:
        if not any(vector):
            continue

        line = primitive(vector)
        if tuple(-x for x in line) not in lines:
            lines.add(line)

    return sorted(lines)


def _angle_order(u: Sequence[int], v: Sequence[int]) -> int:
    upper_u = u[1] > 0 or (u[1] == 0 and u[0] > 0)
    upper_v = v[1] > 0 or (v[1] == 0 and v[0] > 0)
    if upper_u != upper_v:
        return -1 if upper_u else 1

    return -det2(u, v)


def _sector_witnesses(lines: Sequence[Sequence[int]]) -> list[LatticeVector]:
    if not lines:
        return [(1, 0)]

    if len(lines) == 1:
        a, b = lines[0]
        return [(-b, a), (b, -a)]

    both = {tuple(line) for line in lines} | {(-line[0], -line[1]) for line in lines}
    rays = sorted(both, key=cmp_to_key(_angle_order))
    return [
        (rays[i][0] + rays[(i + 1) % len(rays)][0], rays[i][1] + rays[(i + 1) % len(rays)][1])
        for i in range(len(rays))
    ]


def _cross(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _space_witnesses(lines: Sequence[LatticeVector]) -> list[RationalVector]:
    normals = _distinct_lines(_cross(u, v) for u, v in combinations(lines, 2))
    if not normals:
        axis = next(
            (e for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)) if all(any(_cross(e, line)) for line in lines)),
            (1, 0, 0),
        )
        return [tuple(map(Fraction, axis))]

    if len(normals) == 1:
        normal = normals[0]
        return [tuple(map(Fraction, normal)), tuple(Fraction(-x) for x in normal)]

    witnesses: set[RationalVector] = set()
    for axis in _distinct_lines(_cross(m, n) for m, n in combinations(normals, 2)):
        containing = [n for n in normals if dot(n, axis) == 0]
        transverse = [n for n in normals if dot(n, axis) != 0]
        first = containing[0]
        second = _cross(axis, first)
        traces = _distinct_lines((-dot(n, second), dot(n, first)) for n in containing)
        for a, b in _sector_witnesses(traces):
            offset = tuple(a * x + b * y for x, y in zip(first, second, strict=True))
            for ray in (axis, tuple(-x for x in axis)):
                step = min(
                    (Fraction(abs(dot(n, ray)), 2 * abs(dot(n, offset))) for n in transverse if dot(n, offset)),
                    default=Fraction(1),
                )
                witnesses.add(tuple(Fraction(r) + step * d for r, d in zip(ray, offset, strict=True)))

    return sorted(witnesses)


def _sampled_witnesses(mf: MultiFan, *, seed: int, samples: int) -> list[RationalVector]:
    rng = random.Random(seed)
    walls = [mf.vectors(face) for face in mf.faces if face and len(face) < mf.dim]
    witnesses: list[RationalVector] = []
    attempts = 0
    while len(witnesses) < samples and attempts < 100 * samples:
        attempts += 1
        point = tuple(rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE) for _ in range(mf.dim))
        if all(rank([*wall, point]) > rank(wall) for wall in walls):
            witnesses.append(tuple(map(Fraction, point)))

    return witnesses
