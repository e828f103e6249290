# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import TYPE_CHECKING

from origami.lattice import content, det, quotient_group, rank
from origami.reports import ValidationReport, Violation

if TYPE_CHECKING:
    from collections.abc import Iterator

    from origami.fans.model import Face, MultiFan


def validate(mf: MultiFan) -> ValidationReport:
    """
    Check the multi-fan axioms. Violations are returned as data, never raised.
    """
    return ValidationReport.collect(_violations(mf))


def is_nonsingular(mf: MultiFan) -> bool:
    """
    Whether the generators of every cone, chamber or not, extend to a basis of the lattice.
    """
    cones = {chamber.labels for chamber in mf.chambers} | {face for face in mf.faces if face}
    for cone in cones:
        vectors = mf.vectors(cone)
        if len(cone) == mf.dim:
            if abs(det(vectors)) != 1:
                return False

            continue

        group = quotient_group(vectors, mf.dim)
        if group.torsion or group.free_rank != mf.dim - len(cone):
            return False

    return True


def _violations(mf: MultiFan) -> Iterator[Violation]:
    for label, vector in sorted(mf.edges.items()):
        if len(vector) != mf.dim:
            yield Violation("dimension", f"edge `{label}` has {len(vector)} coordinates, expected {mf.dim}")
        elif content(vector) != 1:
            yield Violation("non-primitive", f"edge `{label}` carries non-primitive vector {vector}")

    known = {label for label, vector in mf.edges.items() if len(vector) == mf.dim}
    for face in _sorted_faces(mf.faces):
        if unknown := face - known:
            yield Violation("unknown-label", f"face {_show(face)} uses unknown labels {_show(unknown)}")
            continue

        if len(face) > mf.dim or rank(mf.vectors(face)) < len(face):
            yield Violation("dependent-generators", f"face {_show(face)} has linearly dependent generators")

        for size in range(len(face)):
            missing = [frozenset(s) for s in combinations(sorted(face), size) if frozenset(s) not in mf.faces]
            if missing:
                yield Violation("not-closed", f"face {_show(face)} is missing its subface {_show(missing[0])}")
                break

    if frozenset() not in mf.faces:
        yield Violation("not-closed", "the empty face is missing")

    for chamber_id, count in sorted(Counter(chamber.id for chamber in mf.chambers).items()):
        if count > 1:
            yield Violation("duplicate-chamber", f"chamber id `{chamber_id}` is used {count} times")

    for chamber in mf.chambers:
        if unknown := chamber.labels - known:
            yield Violation("unknown-label", f"chamber `{chamber.id}` uses unknown labels {_show(unknown)}")
            continue

        if len(chamber.labels) != mf.dim:
            yield Violation(
                "chamber-size", f"chamber `{chamber.id}` has {len(chamber.labels)} generators, expected {mf.dim}"
            )
        elif mf.dim and det(mf.vectors(chamber.labels)) == 0:
            yield Violation("dependent-generators", f"chamber `{chamber.id}` has linearly dependent generators")

        if chamber.labels not in mf.faces:
            yield Violation("not-closed", f"chamber `{chamber.id}` is not part of the face set")

        if chamber.w_plus < 0 or chamber.w_minus < 0:
            yield Violation("weight", f"chamber `{chamber.id}` has negative weight {chamber.weight}")
        elif chamber.w_plus == chamber.w_minus == 0:
            yield Violation("weight", f"chamber `{chamber.id}` has weight (0, 0)")


def _sorted_faces(faces: frozenset[Face]) -> list[Face]:
    return sorted(faces, key=lambda face: (len(face), sorted(face)))


def _show(labels: frozenset[str] | set[str]) -> str:
    return "{" + ", ".join(sorted(labels)) + "}"
