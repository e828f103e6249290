# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from itertools import combinations
from typing import TYPE_CHECKING

from msgspec import Struct, structs

from origami.errors import ChamberNotPresent, EdgeNotPresent

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Mapping

    from origami.lattice import LatticeVector

Face = frozenset[str]


class WeightedChamber(Struct, frozen=True, forbid_unknown_fields=True):
    """
    A top-dimensional cone. A fixed point whose orientation ratio is +1 contributes to `w_plus`.
    """

    id: str
    labels: Face
    w_plus: int = 1
    w_minus: int = 0

    @property
    def weight(self) -> tuple[int, int]:
        return self.w_plus, self.w_minus

    @property
    def net(self) -> int:
        return self.w_plus - self.w_minus

    def swapped(self) -> WeightedChamber:
        return structs.replace(self, w_plus=self.w_minus, w_minus=self.w_plus)


class MultiFan(Struct, frozen=True, forbid_unknown_fields=True):
    dim: int
    edges: dict[str, LatticeVector]
    faces: frozenset[Face]
    chambers: tuple[WeightedChamber, ...] = ()

    @classmethod
    def build(
        cls,
        dim: int,
        edges: Mapping[str, Iterable[int]],
        chambers: Iterable[WeightedChamber] = (),
        faces: Iterable[Iterable[str]] = (),
    ) -> MultiFan:
        """
        Construct a multi-fan whose face set is closed under subsets and contains every edge and
        chamber label set.
        """
        chambers = tuple(chambers)
        generators = [frozenset(face) for face in faces]
        generators.extend(chamber.labels for chamber in chambers)
        generators.extend(frozenset((label,)) for label in edges)
        return cls(
            dim=dim,
            edges={label: tuple(vector) for label, vector in edges.items()},
            faces=close_faces(generators),
            chambers=chambers,
        )

    def vector(self, label: str) -> LatticeVector:
        try:
            return self.edges[label]
        except KeyError:
            message = f"Edge `{label}` is not part of the multi-fan"
            raise EdgeNotPresent(message) from None

    def vectors(self, labels: Iterable[str]) -> list[LatticeVector]:
        return [self.vector(label) for label in sorted(labels)]

    def cone(self, labels: Iterable[str]) -> tuple[LatticeVector, ...]:
        """
        Geometric key of a simplicial cone: its generators in sorted order.
        """
        return tuple(sorted(self.vector(label) for label in labels))

    def chamber(self, chamber_id: str) -> WeightedChamber:
        for chamber in self.chambers:
            if chamber.id == chamber_id:
                return chamber

        message = f"Chamber `{chamber_id}` is not part of the multi-fan"
        raise ChamberNotPresent(message)

    def faces_containing(self, labels: Iterable[str]) -> list[Face]:
        required = frozenset(labels)
        return sorted((face for face in self.faces if required <= face), key=sorted)

    def chambers_containing(self, labels: Iterable[str]) -> list[WeightedChamber]:
        required = frozenset(labels)
        return [chamber for chamber in self.chambers if required <= chamber.labels]

    def relabel(
        self,
        edge_map: Callable[[str], str],
        chamber_map: Callable[[str], str] | None = None,
    ) -> MultiFan:
        """
        Rename edge labels and chamber ids. Labels sent to the same name must carry the same vector.
        """
        edges: dict[str, LatticeVector] = {}
        for label, vector in self.edges.items():
            target = edge_map(label)
            if edges.setdefault(target, vector) != vector:
                message = f"Cannot merge edge `{label}` into `{target}`: vectors {vector} and {edges[target]} differ"
                raise ValueError(message)

        rename_chamber = chamber_map or (lambda chamber_id: chamber_id)
        return MultiFan(
            dim=self.dim,
            edges=edges,
            faces=frozenset(frozenset(map(edge_map, face)) for face in self.faces),
            chambers=tuple(
                WeightedChamber(
                    id=rename_chamber(chamber.id),
                    labels=frozenset(map(edge_map, chamber.labels)),
                    w_plus=chamber.w_plus,
                    w_minus=chamber.w_minus,
                )
                for chamber in self.chambers
            ),
        )


def close_faces(generators: Iterable[Iterable[str]]) -> frozenset[Face]:
    closed: set[Face] = {frozenset()}
    for generator in generators:
        face = frozenset(generator)
        if face in closed:
            continue

        for size in range(1, len(face) + 1):
            closed.update(frozenset(subset) for subset in combinations(sorted(face), size))

    return frozenset(closed)


def fresh_label(existing: Iterable[str], stem: str) -> str:
    taken = set(existing)
    if stem not in taken:
        return stem

    suffix = 2
    while f"{stem}.{suffix}" in taken:
        suffix += 1

    return f"{stem}.{suffix}"


def disjoint_union(first: MultiFan, second: MultiFan) -> tuple[MultiFan, dict[str, str]]:
    """
    Union of two multi-fans of equal dimension. Labels and chamber ids of `second` that collide with
    those of `first` are renamed; the returned mapping sends every edge label of `second` to its new name.
    """
    from origami.errors import DimensionMismatch

    if first.dim != second.dim:
        message = f"Cannot combine multi-fans of dimensions {first.dim} and {second.dim}"
        raise DimensionMismatch(message)

    taken = set(first.edges)
    edge_names: dict[str, str] = {}
    for label in second.edges:
        edge_names[label] = fresh_label(taken, label)
        taken.add(edge_names[label])

    taken_ids = {chamber.id for chamber in first.chambers}
    chamber_names: dict[str, str] = {}
    for chamber in second.chambers:
        chamber_names[chamber.id] = fresh_label(taken_ids, chamber.id)
        taken_ids.add(chamber_names[chamber.id])

    renamed = second.relabel(edge_names.__getitem__, chamber_names.__getitem__)
    union = MultiFan(
        dim=first.dim,
        edges={**first.edges, **renamed.edges},
        faces=first.faces | renamed.faces,
        chambers=(*first.chambers, *renamed.chambers),
    )
    return union, edge_names


def canonical(mf: MultiFan) -> MultiFan:
    """
    Relabel edges `e1, e2, ...` in order of their vectors and chambers `c1, c2, ...` in order of their
    label sets then weights.
    """
    order = sorted(mf.edges, key=lambda label: (mf.edges[label], label))
    edge_names = {label: f"e{i}" for i, label in enumerate(order, 1)}
    position = {label: i for i, label in enumerate(order)}

    chambers = sorted(
        mf.chambers,
        key=lambda chamber: (sorted(position[label] for label in chamber.labels), chamber.weight, chamber.id),
    )
    chamber_names = {}
    for i, chamber in enumerate(chambers, 1):
        chamber_names.setdefault(chamber.id, f"c{i}")

    relabeled = mf.relabel(edge_names.__getitem__, chamber_names.__getitem__)
    return MultiFan(
        dim=relabeled.dim,
        edges=dict(sorted(relabeled.edges.items(), key=lambda item: int(item[0][1:]))),
        faces=relabeled.faces,
        chambers=tuple(
            sorted(relabeled.chambers, key=lambda chamber: int(chamber.id[1:]))
        ),
    )
