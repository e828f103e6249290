# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from collections import Counter, defaultdict
from typing import TYPE_CHECKING

from networkx.utils import UnionFind

from origami.errors import (
    ConeMismatch,
    DimensionMismatch,
    EdgeNotPresent,
    InsufficientWeight,
    NeighborhoodMismatch,
    WeightMismatch,
)
from origami.fans.model import MultiFan, WeightedChamber, canonical, close_faces, disjoint_union, fresh_label
from origami.lattice import negate, primitive

if TYPE_CHECKING:
    from collections.abc import Mapping

    from origami.fans.model import Face
    from origami.lattice import LatticeVector


def flip_edge(mf: MultiFan, label: str) -> MultiFan:
    return flip_edges(mf, {label: -1})


def flip_edges(mf: MultiFan, signs: Mapping[str, int]) -> MultiFan:
    """
    Negate the vectors of the edges with sign -1. A chamber has its weights swapped once per
    flipped generator.
    """
    flipped = {label for label, sign in signs.items() if sign < 0}
    if missing := flipped - mf.edges.keys():
        message = f"Edges {sorted(missing)} are not part of the multi-fan"
        raise EdgeNotPresent(message)

    if not flipped:
        return mf

    chambers = tuple(
        chamber.swapped() if len(chamber.labels & flipped) % 2 else chamber for chamber in mf.chambers
    )
    edges = {label: negate(vector) if label in flipped else vector for label, vector in mf.edges.items()}
    return MultiFan(dim=mf.dim, edges=edges, faces=mf.faces, chambers=chambers)


def flip_global(mf: MultiFan) -> MultiFan:
    return MultiFan(
        dim=mf.dim,
        edges={label: negate(vector) for label, vector in mf.edges.items()},
        faces=mf.faces,
        chambers=tuple(chamber.swapped() for chamber in mf.chambers),
    )


def diamond(mf: MultiFan, mf2: MultiFan, label: str, label2: str) -> MultiFan:
    """
    Remove the neighborhoods of `label` in `mf` and `label2` in `mf2` and glue the remainders along
    the boundary of those neighborhoods.
    """
    union, renamed = disjoint_union(mf, mf2)
    mf.vector(label)
    mf2.vector(label2)
    return self_diamond(union, label, renamed[label2])


def self_diamond(mf: MultiFan, label: str, label2: str) -> MultiFan:
    """
    Diamond operation between two edges of the same multi-fan whose neighborhoods are disjoint.
    """
    if mf.vector(label) != mf.vector(label2):
        message = f"Edges `{label}` and `{label2}` carry different vectors {mf.vector(label)} and {mf.vector(label2)}"
        raise NeighborhoodMismatch(message)

    near = _neighborhood(mf, label)
    far = _neighborhood(mf, label2)
    if Counter({key: len(faces) for key, faces in near.items()}) != Counter({
        key: len(faces) for key, faces in far.items()
    }):
        message = f"The cones around `{label}` and `{label2}` differ"
        raise NeighborhoodMismatch(message)

    for key in near:
        here = Counter(c.weight for c in mf.chambers if label in c.labels and mf.cone(c.labels) == key)
        there = Counter(c.swapped().weight for c in mf.chambers if label2 in c.labels and mf.cone(c.labels) == key)
        if here != there:
            message = (
                f"Weights around `{label}` and `{label2}` are not opposite on the cone {key}: "
                f"{sorted(here.elements())} vs {sorted(there.elements())}"
            )
            raise WeightMismatch(message)

    identified = UnionFind(mf.edges)
    for key, faces in near.items():
        for face, other in zip(faces, far[key], strict=True):
            by_vector = {mf.vector(x): x for x in other if x != label2}
            for x in face:
                if x != label:
                    identified.union(x, by_vector[mf.vector(x)])

    removed = {label, label2}
    representative = {x: min(group) for group in identified.to_sets() for x in group}
    kept = MultiFan(
        dim=mf.dim,
        edges={x: v for x, v in mf.edges.items() if x not in removed},
        faces=frozenset(face for face in mf.faces if not face & removed),
        chambers=tuple(c for c in mf.chambers if not c.labels & removed),
    )
    return kept.relabel(representative.__getitem__)


def blow_up(mf: MultiFan, chamber_id: str, sign: int = 1) -> MultiFan:
    """
    Stellar subdivision of a chamber at the sum of its generators.
    """
    if sign not in {1, -1}:
        message = f"Blow-up sign must be 1 or -1, not {sign}"
        raise ValueError(message)

    chamber = mf.chamber(chamber_id)
    available = chamber.w_plus if sign == 1 else chamber.w_minus
    if available < 1:
        message = f"Chamber `{chamber_id}` has weight {chamber.weight}, cannot blow up with sign {sign:+d}"
        raise InsufficientWeight(message)

    vectors = mf.vectors(chamber.labels)
    center = primitive(tuple(sum(column) for column in zip(*vectors, strict=True)))
    new_label = fresh_label(mf.edges, f"{chamber_id}.ray")
    weight = (1, 0) if sign == 1 else (0, 1)

    taken = {c.id for c in mf.chambers}
    created = []
    for replaced in sorted(chamber.labels):
        new_id = fresh_label(taken, f"{chamber_id}.{replaced}")
        taken.add(new_id)
        created.append(WeightedChamber(new_id, chamber.labels - {replaced} | {new_label}, *weight))

    chambers = []
    for c in mf.chambers:
        if c.id != chamber_id:
            chambers.append(c)
        elif c.w_plus + c.w_minus > 1:
            chambers.append(WeightedChamber(c.id, c.labels, c.w_plus - weight[0], c.w_minus - weight[1]))

    faces = set(mf.faces | close_faces(c.labels for c in created))
    if all(c.labels != chamber.labels for c in chambers):
        faces.discard(chamber.labels)

    return MultiFan(
        dim=mf.dim,
        edges={**mf.edges, new_label: center},
        faces=frozenset(faces),
        chambers=(*chambers, *created),
    )


def connected_sum(
    mf: MultiFan, mf2: MultiFan, chamber_id: str, chamber_id2: str, *, reduce: bool = True
) -> MultiFan:
    """
    Identify a chamber of `mf` with a chamber of `mf2` spanning the same cone. The identified chamber
    carries the sum of the weights, reduced by their common part unless `reduce` is false, and vanishes
    when that weight is zero.
    """
    if mf.dim != mf2.dim:
        message = f"Cannot combine multi-fans of dimensions {mf.dim} and {mf2.dim}"
        raise DimensionMismatch(message)

    first = mf.chamber(chamber_id)
    second = mf2.chamber(chamber_id2)
    if mf.cone(first.labels) != mf2.cone(second.labels):
        message = (
            f"Chambers `{chamber_id}` and `{chamber_id2}` span different cones: "
            f"{mf.cone(first.labels)} and {mf2.cone(second.labels)}"
        )
        raise ConeMismatch(message)

    union, renamed = disjoint_union(mf, mf2)
    partner = union.chambers[len(mf.chambers) + mf2.chambers.index(second)]
    by_vector = {union.vector(x): x for x in first.labels}
    mapping = {renamed[x]: by_vector[mf2.vector(x)] for x in second.labels}
    glued = union.relabel(lambda x: mapping.get(x, x))

    w_plus = first.w_plus + second.w_plus
    w_minus = first.w_minus + second.w_minus
    if reduce:
        common = min(w_plus, w_minus)
        w_plus -= common
        w_minus -= common

    chambers = [c for c in glued.chambers if c.id not in {first.id, partner.id}]
    if w_plus or w_minus:
        chambers.append(WeightedChamber(first.id, first.labels, w_plus, w_minus))

    faces = set(glued.faces)
    if all(c.labels != first.labels for c in chambers):
        faces.discard(first.labels)

    return MultiFan(dim=glued.dim, edges=glued.edges, faces=frozenset(faces), chambers=tuple(chambers))


def merge(mf: MultiFan) -> MultiFan:
    """
    Unify edges carrying the same vector and sum the weights of chambers on the same cone. The result
    is canonically labeled.
    """
    representative: dict[LatticeVector, str] = {}
    for label in sorted(mf.edges):
        representative.setdefault(mf.edges[label], label)

    unified = mf.relabel(lambda x: representative[mf.edges[x]])
    totals: dict[Face, list[int]] = defaultdict(lambda: [0, 0])
    first_id: dict[Face, str] = {}
    for chamber in unified.chambers:
        totals[chamber.labels][0] += chamber.w_plus
        totals[chamber.labels][1] += chamber.w_minus
        first_id.setdefault(chamber.labels, chamber.id)

    chambers = tuple(WeightedChamber(first_id[labels], labels, *weight) for labels, weight in totals.items())
    return canonical(MultiFan(dim=unified.dim, edges=unified.edges, faces=unified.faces, chambers=chambers))


def _neighborhood(mf: MultiFan, label: str) -> dict[tuple[LatticeVector, ...], list[Face]]:
    grouped: dict[tuple[LatticeVector, ...], list[Face]] = defaultdict(list)
    for face in mf.faces_containing((label,)):
        grouped[mf.cone(face)].append(face)

    return dict(grouped)

