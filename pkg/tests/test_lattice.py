# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from origami.errors import DimensionMismatch, ZeroVector
from origami.lattice import (
    AbelianGroupSNF,
    IntegerMatrix,
    LatticeAffineMap,
    content,
    det,
    det2,
    dot,
    hermite_basis,
    primitive,
    quotient_group,
    quotient_map,
    rank,
    smith_normal_form,
    solve,
)
from tests.helpers.strategies import integer_matrices, unimodular_matrices


class TestIntegerMatrix:
    def test_columns_and_rows(self):
        m = IntegerMatrix.from_columns([(1, 2), (3, 4)])

        assert m.to_rows() == [[1, 3], [2, 4]]
        assert m.to_columns() == [(1, 2), (3, 4)]
        assert m.transpose().to_rows() == [[1, 2], [3, 4]]

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            IntegerMatrix(rows=2, cols=2, entries=(1, 2, 3))

    def test_apply_and_multiply(self):
        m = IntegerMatrix.from_rows([[2, 1], [1, 1]])

        assert m.apply((1, -1)) == (1, 0)
        assert m.multiply(m.inverse()) == IntegerMatrix.identity(2)

    def test_inverse(self):
        m = IntegerMatrix.from_rows([[2, 1], [1, 1]])

        assert m.inverse().to_rows() == [[1, -1], [-1, 2]]

    def test_inverse_with_negative_determinant(self):
        m = IntegerMatrix.from_rows([[0, 1, 0], [1, 0, 0], [2, 3, 1]])

        assert m.multiply(m.inverse()) == IntegerMatrix.identity(3)

    @given(st.integers(1, 4).flatmap(unimodular_matrices))
    def test_inverse_of_unimodular(self, m):
        assert m.inverse().multiply(m) == IntegerMatrix.identity(m.rows)

    def test_inverse_requires_unimodular(self):
        with pytest.raises(ValueError, match="unimodular"):
            IntegerMatrix.from_rows([[2, 0], [0, 1]]).inverse()

    def test_apply_dimension(self):
        with pytest.raises(DimensionMismatch):
            IntegerMatrix.identity(2).apply((1, 2, 3))


class TestDeterminant:
    @pytest.mark.parametrize(
        ("vectors", "expected"),
        [
            pytest.param([], 1, id="empty"),
            pytest.param([(1, 0), (0, 1)], 1, id="identity"),
            pytest.param([(0, 1), (1, 0)], -1, id="swap"),
            pytest.param([(2, 1), (1, 1)], 1, id="unimodular"),
            pytest.param([(1, 2), (2, 4)], 0, id="dependent"),
            pytest.param([(1, 0, 0), (0, 1, 0), (1, 1, 1)], 1, id="shear"),
            pytest.param([(0, 0, 1), (0, 1, 0), (1, 0, 0)], -1, id="pivot swap"),
            pytest.param([(2, 0, 0), (0, 3, 0), (0, 0, 5)], 30, id="diagonal"),
        ],
    )
    def test_det(self, vectors, expected):
        assert det(vectors) == expected

    def test_det2(self):
        assert det2((1, 0), (0, 1)) == 1
        assert det2((0, 1), (1, 0)) == -1

    def test_non_square(self):
        with pytest.raises(DimensionMismatch):
            det([(1, 0, 0), (0, 1, 0)])


class TestVectors:
    def test_primitive(self):
        assert primitive((4, -6)) == (2, -3)
        assert content((4, -6)) == 2

    def test_primitive_of_zero(self):
        with pytest.raises(ZeroVector):
            primitive((0, 0))

    def test_dot_with_fractions(self):
        assert dot((1, 2), (Fraction(1, 2), Fraction(1, 4))) == 1

    def test_rank(self):
        assert rank([(1, 2), (2, 4)]) == 1
        assert rank([(1, 0, 0), (0, 1, 0)]) == 2
        assert rank([]) == 0

    def test_solve(self):
        assert solve([[1, 1], [1, -1]], [2, 0]) == (1, 1)
        assert solve([[1, 1], [1, 1]], [1, 2]) is None

    def test_solve_with_free_variables(self):
        assert solve([[1, 2, 3]], [6]) == (6, 0, 0)
        assert solve([[0, 2, 4], [0, 1, 2]], [2, 1]) == (0, 1, 0)

    def test_solve_rational(self):
        assert solve([[2, 0], [0, 3]], [1, Fraction(1, 2)]) == (Fraction(1, 2), Fraction(1, 6))


class TestSmithNormalForm:
    @pytest.mark.parametrize(
        "rows",
        [
            [[2, 0], [0, 3]],
            [[2, 4], [6, 8]],
            [[1, 0], [0, 1], [-1, -1]],
            [[0, 0], [0, 0]],
            [[4, 6, 2]],
        ],
    )
    def test_decomposition(self, rows):
        m = IntegerMatrix.from_rows(rows)
        u, d, v = smith_normal_form(m)

        assert u.multiply(m).multiply(v) == d
        assert abs(u.determinant()) == 1
        assert abs(v.determinant()) == 1
        diagonal = [x for x in d.diagonal() if x]
        assert all(x > 0 for x in diagonal)
        assert all(b % a == 0 for a, b in zip(diagonal, diagonal[1:], strict=False))

    def test_coprime_diagonal(self):
        _, d, _ = smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]]))

        assert d.diagonal() == (1, 6)

    def test_zeros_come_last(self):
        _, d, _ = smith_normal_form(IntegerMatrix.from_rows([[0, 0], [0, 4]]))

        assert d.diagonal() == (4, 0)

    @given(integer_matrices())
    def test_random_decomposition(self, m):
        u, d, v = smith_normal_form(m)

        assert u.multiply(m).multiply(v) == d
        assert abs(u.determinant()) == 1
        assert abs(v.determinant()) == 1
        assert all(d.row(i)[j] == 0 for i in range(d.rows) for j in range(d.cols) if i != j)
        diagonal = [x for x in d.diagonal() if x]
        assert all(x > 0 for x in diagonal)
        assert all(b % a == 0 for a, b in zip(diagonal, diagonal[1:], strict=False))
        assert list(d.diagonal()[: len(diagonal)]) == diagonal

    @given(st.integers(1, 4).flatmap(unimodular_matrices))
    def test_unimodular_matrix_reduces_to_identity(self, m):
        _, d, _ = smith_normal_form(m)

        assert d == IntegerMatrix.identity(m.rows)


class TestQuotientGroup:
    @pytest.mark.parametrize(
        ("generators", "expected", "text"),
        [
            pytest.param([(1, 0), (0, 1)], AbelianGroupSNF(0), "0", id="everything"),
            pytest.param([(1, 0), (-1, 0)], AbelianGroupSNF(1), "Z", id="line"),
            pytest.param([], AbelianGroupSNF(2), "Z x Z", id="nothing"),
            pytest.param([(2, 0), (0, 3)], AbelianGroupSNF(0, (6,)), "Z/6", id="cyclic torsion"),
            pytest.param([(2, 0), (0, 2)], AbelianGroupSNF(0, (2, 2)), "Z/2 x Z/2", id="non-cyclic"),
            pytest.param([(1, 1), (1, -1)], AbelianGroupSNF(0, (2,)), "Z/2", id="index two"),
        ],
    )
    def test_structure(self, generators, expected, text):
        group = quotient_group(generators, 2)

        assert group == expected
        assert str(group) == text

    def test_cyclic(self):
        assert AbelianGroupSNF(1).is_cyclic
        assert AbelianGroupSNF(0, (6,)).is_cyclic
        assert not AbelianGroupSNF(0, (2, 2)).is_cyclic
        assert not AbelianGroupSNF(1, (3,)).is_cyclic

    def test_invalid_torsion(self):
        with pytest.raises(ValueError, match="divisibility"):
            AbelianGroupSNF(0, (2, 3))

    def test_generator_dimension(self):
        with pytest.raises(DimensionMismatch):
            quotient_group([(1, 0, 0)], 2)

    @given(integer_matrices(max_rows=3, max_cols=3), st.data())
    def test_unimodular_changes_keep_the_quotient(self, m, data):
        rows = data.draw(unimodular_matrices(m.rows))
        columns = data.draw(unimodular_matrices(m.cols))

        moved = rows.multiply(m).multiply(columns)

        assert quotient_group(moved.to_columns(), m.rows) == quotient_group(m.to_columns(), m.rows)


class TestHermiteBasis:
    def test_diagonal(self):
        assert hermite_basis([(2, 0), (0, 3)], 2).to_columns() == [(2, 0), (0, 3)]

    def test_reduced_above_the_pivot(self):
        assert hermite_basis([(1, 1), (0, 2)], 2).to_columns() == [(2, 0), (1, 1)]

    def test_spans_everything(self):
        basis = hermite_basis([(1, 0), (0, 1), (-1, -1)], 2)

        assert basis.to_columns() == [(1, 0), (0, 1)]

    def test_rank_deficient(self):
        basis = hermite_basis([(1, 0), (-1, 0), (0, 0)], 2)

        assert basis.to_columns() == [(1, 0)]

    def test_no_generators(self):
        basis = hermite_basis([(0, 0, 0)], 3)

        assert basis.rows == 3
        assert basis.cols == 0

    @given(integer_matrices(max_rows=3, max_cols=4))
    def test_same_lattice(self, m):
        generators = m.to_columns()

        basis = hermite_basis(generators, m.rows)

        assert basis.cols == rank(generators)
        assert quotient_group(basis.to_columns(), m.rows) == quotient_group(generators, m.rows)

    def test_quotient_map_kernel(self):
        projection = quotient_map([(1, 1)], 2)

        assert projection.rows == 1
        assert projection.apply((1, 1)) == (0,)
        assert abs(projection.apply((1, 0))[0]) == 1

    def test_quotient_map_of_a_coordinate_axis(self):
        assert quotient_map([(1, 0)], 2).to_rows() == [[0, 1]]


class TestLatticeAffineMap:
    def test_pairing_is_kept(self):
        linear = IntegerMatrix.from_rows([[2, 1], [1, 1]])
        affine = LatticeAffineMap(linear, (Fraction(0), Fraction(0)))
        point = (Fraction(1, 3), Fraction(2))
        normal = (1, -1)

        assert dot(affine.apply_normal(normal), affine.apply_point(point)) == dot(normal, point)

    def test_translation(self):
        affine = LatticeAffineMap.translate((1, Fraction(1, 2)))

        assert affine.apply_point((Fraction(0), Fraction(0))) == (1, Fraction(1, 2))
        assert affine.offset_shift((1, 2)) == 2
        assert affine.determinant == 1
