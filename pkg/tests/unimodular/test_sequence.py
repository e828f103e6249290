# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import pytest
from hypothesis import given

from origami.errors import DimensionMismatch, NonPrimitiveVector, NoRelation, NotUnimodular
from origami.fans import degree, merge
from origami.lattice import IntegerMatrix
from origami.unimodular import (
    Reduction,
    UnimodularSequence,
    canonical_form,
    is_unimodular,
    multifan_of_sequence,
    reduce_step,
    winding_number,
)
from tests.helpers.strategies import unimodular_matrices, unimodular_sequences

PLANE = UnimodularSequence.of([(1, 0), (0, 1), (-1, -1)])
SQUARE = UnimodularSequence.of([(1, 0), (0, 1), (-1, 0), (0, -1)])


class TestConstruction:
    def test_too_short(self):
        with pytest.raises(DimensionMismatch, match="at least 2 vectors"):
            UnimodularSequence.of([(1, 0)])

    def test_not_planar(self):
        with pytest.raises(DimensionMismatch, match="does not lie in Z\\^2"):
            UnimodularSequence.of([(1, 0, 0), (0, 1, 0)])

    def test_non_primitive(self):
        with pytest.raises(NonPrimitiveVector, match="not unimodular"):
            UnimodularSequence.of([(1, 0), (2, 0)])

    def test_length(self):
        assert len(SQUARE) == 4


class TestAccess:
    def test_cyclic(self):
        assert PLANE.at(-1) == (-1, -1)
        assert PLANE.at(3) == (1, 0)

    def test_determinants(self):
        assert PLANE.determinants() == [1, 1, 1]
        assert PLANE.reversed().determinants() == [-1, -1, -1]

    def test_rotated(self):
        assert PLANE.rotated(1).vectors == ((0, 1), (-1, -1), (1, 0))
        assert PLANE.rotated(-1).vectors == ((-1, -1), (1, 0), (0, 1))

    def test_with_signs(self):
        assert PLANE.with_signs([1, -1, 1]).vectors == ((1, 0), (0, -1), (-1, -1))

    @pytest.mark.parametrize("signs", [[1, 1], [1, 0, 1], [1, 2, -1]])
    def test_bad_signs(self, signs):
        with pytest.raises(ValueError, match="signs of value 1 or -1"):
            PLANE.with_signs(signs)

    def test_transformed(self):
        shear = IntegerMatrix.from_rows([[1, 1], [0, 1]])

        assert PLANE.transformed(shear).vectors == ((1, 0), (1, 1), (-2, -1))


class TestUnimodular:
    @pytest.mark.parametrize(
        ("vectors", "expected"),
        [
            pytest.param([(1, 0), (0, 1)], True, id="basis"),
            pytest.param([(1, 0), (0, 1), (-1, -1)], True, id="plane"),
            pytest.param([(1, 0), (1, 2)], False, id="determinant two"),
            pytest.param([(1, 0), (0, 1), (-1, 0)], False, id="opposite neighbours"),
        ],
    )
    def test_is_unimodular(self, vectors, expected):
        assert is_unimodular(vectors) is expected

    def test_operations_check(self):
        seq = UnimodularSequence.of([(1, 0), (1, 2)])

        with pytest.raises(NotUnimodular, match="determinant 2"):
            winding_number(seq)


class TestMultifan:
    def test_plane(self):
        mf = multifan_of_sequence(PLANE)

        assert mf.edges == {"v1": (1, 0), "v2": (0, 1), "v3": (-1, -1)}
        assert mf.chamber("c3").labels == {"v3", "v1"}
        assert degree(mf) == 1

    def test_clockwise_turns_have_negative_weight(self):
        mf = multifan_of_sequence(PLANE.reversed())

        assert all(chamber.weight == (0, 1) for chamber in mf.chambers)
        assert degree(mf) == -1

    def test_two_vectors(self):
        mf = multifan_of_sequence(UnimodularSequence.of([(1, 0), (0, 1)]))

        assert [c.weight for c in mf.chambers] == [(1, 0), (0, 1)]
        assert degree(mf) == 0


class TestWindingNumber:
    @pytest.mark.parametrize(
        ("vectors", "expected"),
        [
            pytest.param([(1, 0), (0, 1), (-1, -1)], 1, id="plane"),
            pytest.param([(-1, -1), (0, 1), (1, 0)], -1, id="reversed plane"),
            pytest.param([(1, 0), (0, 1), (-1, 0), (0, -1)], 1, id="square"),
            pytest.param([(1, 0), (0, 1)], 0, id="back and forth"),
            pytest.param([(1, 0), (0, 1), (-1, 0), (0, -1)] * 2, 2, id="twice around"),
        ],
    )
    def test_winding(self, vectors, expected):
        assert winding_number(UnimodularSequence.of(vectors)) == expected

    def test_agrees_with_degree(self):
        for seq in (PLANE, SQUARE, PLANE.reversed()):
            assert winding_number(seq) == degree(multifan_of_sequence(seq))


class TestCanonicalForm:
    def test_starts_with_the_basis(self):
        assert canonical_form(PLANE).vectors == ((1, 0), (0, 1), (-1, -1))

    def test_invariant_under_equivalence(self):
        form = canonical_form(PLANE)

        assert canonical_form(PLANE.rotated(2)) == form
        assert canonical_form(PLANE.reversed()) == form
        assert canonical_form(PLANE.with_signs([1, -1, 1])) == form
        assert canonical_form(PLANE.transformed(IntegerMatrix.from_rows([[2, 1], [1, 1]]))) == form

    def test_distinguishes_classes(self):
        assert canonical_form(SQUARE) != canonical_form(UnimodularSequence.of([(1, 0), (0, 1), (-1, 1), (0, -1)]))


class TestReduceStep:
    def test_longest_vector_first(self):
        assert reduce_step(PLANE) == Reduction(index=3, coefficient=1, signs=(1, 1))

    def test_blown_up_corner(self):
        seq = UnimodularSequence.of([(1, 0), (1, 1), (0, 1), (-1, -1)])

        assert reduce_step(seq) == Reduction(index=2, coefficient=-1, signs=(1, 1))

    def test_zero_coefficient(self):
        assert reduce_step(SQUARE) == Reduction(index=1, coefficient=0, signs=(1, 1))

    @pytest.mark.parametrize(
        "vectors",
        [
            [(1, 0), (0, 1), (-1, -1)],
            [(1, 0), (1, 1), (0, 1), (-1, -1)],
            [(1, 0), (0, 1), (-1, 1), (0, -1)],
            [(1, 0), (2, 1), (1, 1), (0, 1), (-1, -1)],
        ],
    )
    def test_relation_holds(self, vectors):
        seq = UnimodularSequence.of(vectors)

        reduction = reduce_step(seq)

        j = reduction.index - 1
        first, second = reduction.signs
        combination = tuple(
            first * p + second * f + reduction.coefficient * c
            for p, c, f in zip(seq.at(j - 1), seq.at(j), seq.at(j + 1), strict=True)
        )
        assert combination == (0, 0)
        assert abs(reduction.coefficient) <= 1

    def test_too_short(self):
        with pytest.raises(NoRelation):
            reduce_step(UnimodularSequence.of([(1, 0), (0, 1)]))


class TestProperties:
    @given(unimodular_sequences())
    def test_degree_is_the_winding_number(self, seq):
        assert degree(merge(multifan_of_sequence(seq))) == winding_number(seq)

    @given(unimodular_sequences(), unimodular_matrices())
    def test_gl2z_keeps_unimodularity(self, seq, matrix):
        moved = seq.transformed(matrix)

        assert is_unimodular(moved)
        assert canonical_form(moved) == canonical_form(seq)

    @given(unimodular_sequences(), unimodular_matrices())
    def test_orientation_preserving_maps_keep_the_winding_number(self, seq, matrix):
        winding = winding_number(seq.transformed(matrix))

        assert winding == matrix.determinant() * winding_number(seq)

    @given(unimodular_sequences(min_size=3))
    def test_reduction_relation_holds(self, seq):
        reduction = reduce_step(seq)
        j = reduction.index - 1
        first, second = reduction.signs

        combination = tuple(
            first * a + second * c + reduction.coefficient * b
            for a, b, c in zip(seq.at(j - 1), seq.at(j), seq.at(j + 1), strict=True)
        )
        assert combination == (0, 0)
