# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from collections import Counter, defaultdict
from itertools import permutations, product
from typing import TYPE_CHECKING

from origami.errors import TooLarge
from origami.fans.operations import flip_edges, merge

if TYPE_CHECKING:
    from collections.abc import Iterator

    from origami.fans.model import MultiFan
    from origami.lattice import LatticeVector

DEFAULT_MAX_SIGN_SEARCH = 20


def isomorphic(mf: MultiFan, mf2: MultiFan) -> bool:
    """
    Whether some bijection of edge labels preserving vectors carries faces onto faces and chambers
    onto chambers with equal weights.
    """
    if mf.dim != mf2.dim or len(mf.edges) != len(mf2.edges) or len(mf.chambers) != len(mf2.chambers):
        return False

    if Counter(mf.edges.values()) != Counter(mf2.edges.values()) or len(mf.faces) != len(mf2.faces):
        return False

    target_chambers = Counter((c.labels, c.weight) for c in mf2.chambers)
    return any(
        frozenset(frozenset(mapping[x] for x in face) for face in mf.faces) == mf2.faces
        and Counter((frozenset(mapping[x] for x in c.labels), c.weight) for c in mf.chambers) == target_chambers
        for mapping in _vector_preserving_bijections(mf, mf2)
    )


def equivalent_up_to_signs(
    mf: MultiFan, mf2: MultiFan, *, max_edges: int = DEFAULT_MAX_SIGN_SEARCH
) -> dict[str, int] | None:
    """
    Search for per-edge signs of `mf` making its merged multi-fan isomorphic to the merged `mf2`.
    Assignments with fewer flips are tried first.
    """
    if mf.dim != mf2.dim or len(mf.edges) != len(mf2.edges):
        return None

    if len(mf.edges) > max_edges:
        message = f"Sign search over {len(mf.edges)} edges exceeds the bound of {max_edges}"
        raise TooLarge(message)

    targets = set(mf2.edges.values())
    labels = sorted(mf.edges)
    choices = []
    for label in labels:
        vector = mf.edges[label]
        allowed = [sign for sign in (1, -1) if tuple(sign * x for x in vector) in targets]
        if not allowed:
            return None

        choices.append(allowed)

    target = merge(mf2)
    for signs in sorted(product(*choices), key=lambda signs: sum(s < 0 for s in signs)):
        assignment = dict(zip(labels, signs, strict=True))
        if isomorphic(merge(flip_edges(mf, assignment)), target):
            return assignment

    return None


def _vector_preserving_bijections(mf: MultiFan, mf2: MultiFan) -> Iterator[dict[str, str]]:
    sources: dict[LatticeVector, list[str]] = defaultdict(list)
    targets: dict[LatticeVector, list[str]] = defaultdict(list)
    for label in sorted(mf.edges):
        sources[mf.edges[label]].append(label)
    for label in sorted(mf2.edges):
        targets[mf2.edges[label]].append(label)

    groups = sorted(sources)
    for arrangement in product(*(permutations(targets[vector]) for vector in groups)):
        mapping: dict[str, str] = {}
        for vector, image in zip(groups, arrangement, strict=True):
            mapping.update(zip(sources[vector], image, strict=True))
        yield mapping
