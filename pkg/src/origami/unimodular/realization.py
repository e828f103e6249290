# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
"""
Origami templates realizing unimodular sequences in Z^2.

The sequence is shortened one or two vectors at a time until three or fewer remain. Those are realized
by fixed small templates moved into place by a modular transformation, and the removed vectors are put
back either by cutting a corner (a blow-up) or by a connected sum with a small template whose multi-fan
carries exactly the missing cones.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from msgspec import Struct

from origami.errors import OrigamiError, VerificationFailed
from origami.lattice import IntegerMatrix, LatticeAffineMap, add, det2, negate, scale
from origami.polytopes import DelzantPolytope, box
from origami.templates.builders import hirzebruch_polygon, sphere_template
from origami.templates.model import FacetRef, OrigamiTemplate, PairFold, TemplatePiece
from origami.templates.operations import template_connected_sum, transform_template
from origami.unimodular.sequence import Reduction, UnimodularSequence, check_unimodular, reduce_step

if TYPE_CHECKING:
    from collections.abc import Sequence

    from origami.lattice import LatticeVector
    from origami.templates.model import VertexRef


class TraceStep(Struct, frozen=True, forbid_unknown_fields=True):
    """
    `action` is one of `base`, `reduce`, `blow-up` or `connected-sum`; `vectors` are the vectors the
    step works on.
    """

    action: str
    vectors: tuple[LatticeVector, ...]
    reduction: Reduction | None = None


class RealizationCertificate(Struct, frozen=True, forbid_unknown_fields=True):
    sequence: UnimodularSequence
    template: OrigamiTemplate
    signs: tuple[int, ...]
    trace: tuple[TraceStep, ...] = ()

    @property
    def signed(self) -> UnimodularSequence:
        return self.sequence.with_signs(self.signs)


def realize(seq: UnimodularSequence, *, verify: bool = True) -> RealizationCertificate:
    """
    Build an oriented acyclic template whose multi-fan matches the sequence after the recorded sign
    changes.
    """
    check_unimodular(seq)
    trace: list[TraceStep] = []
    template, signs = _realize(list(seq.vectors), trace)
    certificate = RealizationCertificate(sequence=seq, template=template, signs=tuple(signs), trace=tuple(trace))
    if verify:
        verify_certificate(certificate)

    return certificate


def verify_certificate(certificate: RealizationCertificate) -> None:
    from origami.fans.equivalence import isomorphic
    from origami.fans.operations import merge
    from origami.templates.multifan import multifan_of_template
    from origami.templates.validation import classify, validate_template
    from origami.unimodular.sequence import multifan_of_sequence

    template = certificate.template
    report = validate_template(template)
    if not report.valid:
        violation = report.violations[0]
        message = f"The realizing template is invalid: {violation.code}: {violation.detail}"
        raise VerificationFailed(message)

    kind = classify(template)
    if not kind.oriented or not kind.acyclic:
        message = f"The realizing template must be oriented and acyclic, got {kind}"
        raise VerificationFailed(message)

    try:
        produced = merge(multifan_of_template(template))
    except OrigamiError as e:
        message = f"The multi-fan of the realizing template cannot be formed: {e}"
        raise VerificationFailed(message) from e

    if not isomorphic(produced, merge(multifan_of_sequence(certificate.signed))):
        message = f"The realizing template does not reproduce the sequence {list(certificate.signed.vectors)}"
        raise VerificationFailed(message)


def _realize(vectors: list[LatticeVector], trace: list[TraceStep]) -> tuple[OrigamiTemplate, list[int]]:
    d = len(vectors)
    if d <= 3:
        trace.append(TraceStep("base", tuple(vectors)))
        return _base(vectors), [1] * d

    reduction = reduce_step(UnimodularSequence(tuple(vectors)))
    trace.append(TraceStep("reduce", tuple(vectors), reduction))
    j = reduction.index - 1
    removed = {j} if reduction.coefficient else {j, (j - 1) % d}
    order = [k for k in range(d) if k not in removed]
    template, inner = _realize([vectors[k] for k in order], trace)
    signs = dict(zip(order, inner, strict=True))

    def signed(k: int) -> LatticeVector:
        return scale(vectors[k % d], signs[k % d])

    if reduction.coefficient:
        template, signs[j] = _insert_one(template, signed(j - 1), vectors[j], signed(j + 1), trace)
    else:
        previous, following = vectors[(j - 1) % d], signed(j + 1)
        sigma = -1 if previous == following else 1
        template = _insert_two(template, signed(j - 2), scale(previous, sigma), vectors[j], following, trace)
        signs[(j - 1) % d], signs[j] = sigma, 1

    return template, [signs[k] for k in range(d)]


def _insert_one(
    template: OrigamiTemplate,
    first: LatticeVector,
    vector: LatticeVector,
    last: LatticeVector,
    trace: list[TraceStep],
) -> tuple[OrigamiTemplate, int]:
    """
    Put `vector` between the consecutive vectors `first` and `last`. Returns the new template and the
    sign the inserted vector ends up with.
    """
    turn = det2(first, last)
    corner = _corner(template, first, last, turn)
    middle = add(first, last)
    if middle in {vector, negate(vector)}:
        trace.append(TraceStep("blow-up", (first, middle, last)))
        chopped = template.polytope(corner.polytope).corner_chop(corner.vertex)
        return template.with_polytope(corner.polytope, chopped), 1 if middle == vector else -1

    trace.append(TraceStep("connected-sum", (first, vector, last)))
    piece = _base([first, vector, last])
    return template_connected_sum(template, piece, corner, _corner(piece, first, last, -turn)), 1


def _insert_two(
    template: OrigamiTemplate,
    first: LatticeVector,
    second: LatticeVector,
    third: LatticeVector,
    last: LatticeVector,
    trace: list[TraceStep],
) -> OrigamiTemplate:
    """
    Put `second` and `third` between the consecutive vectors `first` and `last`, where `second = -last`.
    """
    trace.append(TraceStep("connected-sum", (first, second, third, last)))
    frame = IntegerMatrix.from_columns([first, second])
    a, b = frame.inverse().apply(third)
    if a == -1:
        piece = OrigamiTemplate((TemplatePiece(hirzebruch_polygon(b), 1),))
    else:
        slanted = _polygon(((0, 1), 0), ((-1, 0), 1), ((0, -1), 1), ((1, b), max(0, -b)))
        piece = _folded_pair(box(1, 1), slanted, (-1, 0))

    piece = transform_template(piece, LatticeAffineMap.from_linear(frame))
    turn = det2(first, last)
    return template_connected_sum(
        template, piece, _corner(template, first, last, turn), _corner(piece, first, last, -turn)
    )


def _base(vectors: Sequence[LatticeVector]) -> OrigamiTemplate:
    frame = IntegerMatrix.from_columns(vectors[:2])
    if len(vectors) == 2:
        template = sphere_template(2)
    else:
        template = _three_term(frame.inverse().apply(vectors[2]))

    return transform_template(template, LatticeAffineMap.from_linear(frame))


def _three_term(third: LatticeVector) -> OrigamiTemplate:
    """
    Templates for the sequences (1, 0), (0, 1), `third`.
    """
    match third:
        case (-1, -1):
            return OrigamiTemplate((TemplatePiece(_polygon(((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)), 1),))
        case (1, -1):
            return _folded_pair(
                _polygon(((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((1, -1), 1)),
                _polygon(((0, 1), 0), ((-1, 0), 1), ((1, -1), 1)),
                (-1, 0),
            )
        case (1, 1):
            return _folded_pair(
                _polygon(((1, 0), 0), ((0, 1), 0), ((-1, -1), 2)),
                _polygon(((1, 0), 0), ((0, 1), 0), ((-1, -1), 2), ((1, 1), -1)),
                (-1, -1),
            )
        case (-1, 1):
            return _folded_pair(
                _polygon(((1, 0), 0), ((0, 1), 0), ((-1, 1), 1), ((0, -1), 1)),
                _polygon(((1, 0), 0), ((-1, 1), 1), ((0, -1), 1)),
                (0, -1),
            )
        case _:
            message = f"Vector {third} does not complete (1, 0), (0, 1) to a unimodular sequence"
            raise VerificationFailed(message)


def _polygon(*halfspaces: tuple[LatticeVector, int]) -> DelzantPolytope:
    return DelzantPolytope(halfspaces, dim=2)


def _folded_pair(first: DelzantPolytope, second: DelzantPolytope, normal: LatticeVector) -> OrigamiTemplate:
    """
    `first` oriented positively and `second` negatively, folded along their facets with inward `normal`.
    """
    return OrigamiTemplate(
        pieces=(TemplatePiece(first, 1), TemplatePiece(second, -1)),
        folds=(PairFold(FacetRef(0, first.normals.index(normal)), FacetRef(1, second.normals.index(normal))),),
    )


def _corner(template: OrigamiTemplate, first: LatticeVector, second: LatticeVector, orientation: int) -> VertexRef:
    """
    A vertex off the folds whose facets have normals `first` and `second`, in a polytope with the given
    orientation.
    """
    wanted = {first, second}
    for ref in template.fixed_points():
        if template.orientation(ref.polytope) != orientation:
            continue

        polytope = template.polytope(ref.polytope)
        if {polytope.facets[i].normal for i in template.vertex(ref).facets} == wanted:
            return ref

    message = f"No free corner with normals {first} and {second} and orientation {orientation}"
    raise VerificationFailed(message)
