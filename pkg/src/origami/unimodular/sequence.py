# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING

from msgspec import Struct

from origami.errors import DimensionMismatch, NonPrimitiveVector, NotUnimodular, NoRelation
from origami.lattice import IntegerMatrix, det2, dot, is_primitive

if TYPE_CHECKING:
    from collections.abc import Sequence

    from origami.fans.model import MultiFan
    from origami.lattice import LatticeVector


class UnimodularSequence(Struct, frozen=True, forbid_unknown_fields=True):
    """
    A cyclic sequence of primitive vectors in Z^2. Unimodularity of consecutive pairs is checked by
    the operations that need it, so that `is_unimodular` can answer for any sequence.
    """

    vectors: tuple[LatticeVector, ...]

    def __post_init__(self) -> None:
        if len(self.vectors) < 2:
            message = f"A unimodular sequence needs at least 2 vectors, got {len(self.vectors)}"
            raise DimensionMismatch(message)

        for vector in self.vectors:
            if len(vector) != 2:
                message = f"Vector {tuple(vector)} does not lie in Z^2"
                raise DimensionMismatch(message)

            if not is_primitive(vector):
                message = f"Vector {tuple(vector)} is not primitive, so the sequence is not unimodular"
                raise NonPrimitiveVector(message)

    @classmethod
    def of(cls, vectors: Sequence[Sequence[int]]) -> UnimodularSequence:
        return cls(tuple(tuple(int(x) for x in v) for v in vectors))

    def __len__(self) -> int:
        return len(self.vectors)

    def at(self, index: int) -> LatticeVector:
        """
        Cyclic access with 0-based indices.
        """
        return self.vectors[index % len(self.vectors)]

    def determinants(self) -> list[int]:
        return [det2(self.at(i), self.at(i + 1)) for i in range(len(self))]

    def with_signs(self, signs: Sequence[int]) -> UnimodularSequence:
        if len(signs) != len(self) or any(s not in {1, -1} for s in signs):
            message = f"Expected {len(self)} signs of value 1 or -1, got {list(signs)}"
            raise ValueError(message)

        return UnimodularSequence(tuple(tuple(s * x for x in v) for s, v in zip(signs, self.vectors, strict=True)))

    def transformed(self, matrix: IntegerMatrix) -> UnimodularSequence:
        return UnimodularSequence(tuple(matrix.apply(v) for v in self.vectors))

    def reversed(self) -> UnimodularSequence:
        return UnimodularSequence(self.vectors[::-1])

    def rotated(self, start: int) -> UnimodularSequence:
        start %= len(self)
        return UnimodularSequence(self.vectors[start:] + self.vectors[:start])


class Reduction(Struct, frozen=True, forbid_unknown_fields=True):
    """
    The relation `signs[0] * v[j-1] + signs[1] * v[j+1] + coefficient * v[j] = 0`, with `index` the
    1-based position j.
    """

    index: int
    coefficient: int
    signs: tuple[int, int]


def is_unimodular(seq: UnimodularSequence | Sequence[Sequence[int]]) -> bool:
    if not isinstance(seq, UnimodularSequence):
        seq = UnimodularSequence.of(seq)

    return all(abs(d) == 1 for d in seq.determinants())


def multifan_of_sequence(seq: UnimodularSequence) -> MultiFan:
    """
    Edge `v{i}` carries the i-th vector, chamber `c{i}` is the cone between the i-th and the next vector
    with weight (1, 0) when they turn counterclockwise and (0, 1) otherwise.
    """
    from origami.fans.model import MultiFan, WeightedChamber

    check_unimodular(seq)
    d = len(seq)
    chambers = []
    for i, determinant in enumerate(seq.determinants()):
        weight = (1, 0) if determinant == 1 else (0, 1)
        chambers.append(WeightedChamber(f"c{i + 1}", frozenset({f"v{i + 1}", f"v{(i + 1) % d + 1}"}), *weight))

    return MultiFan.build(2, {f"v{i + 1}": v for i, v in enumerate(seq.vectors)}, chambers)


def winding_number(seq: UnimodularSequence) -> int:
    """
    Signed number of turns of the closed path through the vectors around the origin, counted by the
    crossings of the positive x-axis.
    """
    check_unimodular(seq)
    total = 0
    for i in range(len(seq)):
        (_, y), (_, y2) = seq.at(i), seq.at(i + 1)
        turn = det2(seq.at(i), seq.at(i + 1))
        if y <= 0 < y2 and turn > 0:
            total += 1
        elif y2 <= 0 < y and turn < 0:
            total -= 1

    return total


def canonical_form(seq: UnimodularSequence) -> UnimodularSequence:
    """
    Representative of the class of the sequence under rotations, reversal, sign changes of single
    vectors and GL(2,Z). The first two vectors of the result are always (1, 0) and (0, 1).
    """
    check_unimodular(seq)
    best: tuple[LatticeVector, ...] | None = None
    for candidate in (seq, seq.reversed()):
        for start in range(len(candidate)):
            rotated = candidate.rotated(start)
            frame = IntegerMatrix.from_columns([rotated.at(0), rotated.at(1)]).inverse()
            coordinates = [frame.apply(v) for v in rotated.vectors[2:]]
            for s, t in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                # the signs of the frame vectors act on all coordinates at once, every later vector
                # can then pick its own sign independently
                form = ((1, 0), (0, 1), *(min((s * a, t * b), (-s * a, -t * b)) for a, b in coordinates))
                if best is None or form < best:
                    best = form

    return UnimodularSequence(best)  # type: ignore[arg-type]


def reduce_step(seq: UnimodularSequence) -> Reduction:
    """
    Find a position j whose vector is a combination of its neighbours with coefficient 0 or ±1,
    preferring vectors of maximal norm and then the smallest index.
    """
    check_unimodular(seq)
    d = len(seq)
    if d < 3:
        message = f"Sequences of length {d} cannot be reduced"
        raise NoRelation(message)

    for j in sorted(range(d), key=lambda j: (-dot(seq.at(j), seq.at(j)), j)):
        previous, current, following = seq.at(j - 1), seq.at(j), seq.at(j + 1)
        # following = alpha * previous + beta * current, with alpha = ±1 by unimodularity
        basis = det2(previous, current)
        alpha = det2(following, current) * basis
        beta = det2(previous, following) * basis
        if abs(beta) <= 1:
            return Reduction(index=j + 1, coefficient=-beta, signs=(-alpha, 1))

    message = f"No vector of {list(seq.vectors)} is a small combination of its neighbours"
    raise NoRelation(message)


def check_unimodular(seq: UnimodularSequence) -> None:
    for i, determinant in enumerate(seq.determinants()):
        if abs(determinant) != 1:
            message = (
                f"Vectors {seq.at(i)} and {seq.at(i + 1)} have determinant {determinant}, "
                "so the sequence is not unimodular"
            )
            raise NotUnimodular(message)
