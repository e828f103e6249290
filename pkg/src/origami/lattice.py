# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
"""
Exact integer and rational linear algebra on the lattice N = Z^n.

Vectors are plain tuples of integers (or `Fraction` for points in the dual space), matrices are
`IntegerMatrix` values stored row-major.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import TYPE_CHECKING, Any

from msgspec import Struct

from origami.errors import DimensionMismatch, ZeroVector

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from sympy.polys.matrices import DomainMatrix

LatticeVector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]


class IntegerMatrix(Struct, frozen=True, forbid_unknown_fields=True):
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            message = (
                f"Matrix of shape {self.rows}x{self.cols} needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
            raise DimensionMismatch(message)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], *, cols: int | None = None) -> IntegerMatrix:
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != width for row in rows):
            message = "Matrix rows must all have the same length"
            raise DimensionMismatch(message)

        return cls(rows=len(rows), cols=width, entries=tuple(int(x) for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], *, rows: int | None = None) -> IntegerMatrix:
        height = len(columns[0]) if columns else (rows or 0)
        if any(len(column) != height for column in columns):
            message = "Matrix columns must all have the same length"
            raise DimensionMismatch(message)

        return cls(
            rows=height,
            cols=len(columns),
            entries=tuple(int(columns[j][i]) for i in range(height) for j in range(len(columns))),
        )

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(rows=n, cols=n, entries=tuple(int(i == j) for i in range(n) for j in range(n)))

    def row(self, i: int) -> LatticeVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> LatticeVector:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_columns(self) -> list[LatticeVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows(self.to_columns(), cols=self.rows)

    def apply(self, vector: Sequence[int]) -> LatticeVector:
        if len(vector) != self.cols:
            message = f"Cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(vector)}"
            raise DimensionMismatch(message)

        return tuple(dot(self.row(i), vector) for i in range(self.rows))

    def multiply(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            message = f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            raise DimensionMismatch(message)

        columns = [self.apply(other.column(j)) for j in range(other.cols)]
        return IntegerMatrix.from_columns(columns, rows=self.rows)

    def determinant(self) -> int:
        return det(self.to_columns())

    def inverse(self) -> IntegerMatrix:
        """
        Inverse of a unimodular matrix, which is again an integer matrix.
        """
        if self.rows != self.cols or abs(self.determinant()) != 1:
            message = "Only unimodular square matrices have integer inverses"
            raise ValueError(message)

        if not self.rows:
            return self

        # adj(m) = det(m) · m^-1 and det(m) = ±1
        adjugate, determinant = self.to_domain_matrix().adj_det()
        return IntegerMatrix.from_domain_matrix(adjugate * determinant)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + i] for i in range(min(self.rows, self.cols)))

    def to_domain_matrix(self) -> DomainMatrix:
        from sympy.polys.domains import ZZ
        from sympy.polys.matrices import DomainMatrix

        return DomainMatrix.from_list_flat([ZZ(x) for x in self.entries], (self.rows, self.cols), ZZ)

    @classmethod
    def from_domain_matrix(cls, matrix: DomainMatrix) -> IntegerMatrix:
        rows, cols = matrix.shape
        return cls(rows=rows, cols=cols, entries=tuple(int(x) for x in matrix.to_list_flat()))


class AbelianGroupSNF(Struct, frozen=True, forbid_unknown_fields=True):
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            message = f"Free rank must be nonnegative: {self.free_rank}"
            raise ValueError(message)

        for i, factor in enumerate(self.torsion):
            if factor < 2:
                message = f"Torsion coefficients must be at least 2: {self.torsion}"
                raise ValueError(message)
            if i and factor % self.torsion[i - 1]:
                message = f"Torsion coefficients must form a divisibility chain: {self.torsion}"
                raise ValueError(message)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"

        factors = ["Z"] * self.free_rank
        factors.extend(f"Z/{factor}" for factor in self.torsion)
        return " x ".join(factors)


class LatticeAffineMap(Struct, frozen=True, forbid_unknown_fields=True):
    """
    An element of GL(n,Z) acting on normals together with a rational translation of the ambient
    space. Points move by the inverse transpose so that pairings between normals and points are kept.
    """

    linear: IntegerMatrix
    translation: RationalVector

    @classmethod
    def translate(cls, translation: Sequence[Fraction | int]) -> LatticeAffineMap:
        return cls(IntegerMatrix.identity(len(translation)), tuple(Fraction(x) for x in translation))

    @classmethod
    def from_linear(cls, linear: IntegerMatrix) -> LatticeAffineMap:
        return cls(linear, tuple(Fraction(0) for _ in range(linear.rows)))

    @property
    def dim(self) -> int:
        return self.linear.rows

    @property
    def determinant(self) -> int:
        return self.linear.determinant()

    def apply_normal(self, normal: Sequence[int]) -> LatticeVector:
        return self.linear.apply(normal)

    def apply_point(self, point: Sequence[Fraction]) -> RationalVector:
        dual = self.linear.inverse().transpose()
        return tuple(
            sum((Fraction(a) * x for a, x in zip(dual.row(i), point, strict=True)), Fraction(0)) + self.translation[i]
            for i in range(self.dim)
        )

    def offset_shift(self, normal: Sequence[int]) -> Fraction:
        """
        Amount subtracted from the offset of a facet whose image normal is `normal`.
        """
        return sum((Fraction(a) * t for a, t in zip(normal, self.translation, strict=True)), Fraction(0))


def dot(u: Sequence[int | Fraction], v: Sequence[int | Fraction]) -> int | Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), 0)


def add(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def negate(v: Sequence[int]) -> LatticeVector:
    return tuple(-a for a in v)


def scale(v: Sequence[int], factor: int) -> LatticeVector:
    return tuple(factor * a for a in v)


def content(v: Iterable[int]) -> int:
    return reduce(gcd, v, 0)


def is_primitive(v: Sequence[int]) -> bool:
    return content(v) == 1


def primitive(v: Sequence[int]) -> LatticeVector:
    divisor = content(v)
    if divisor == 0:
        message = f"The zero vector {tuple(v)} has no primitive direction"
        raise ZeroVector(message)

    return tuple(a // divisor for a in v)


def det2(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def det(vectors: Sequence[Sequence[int]]) -> int:
    """
    Determinant of the square matrix whose columns are `vectors`.
    """
    n = len(vectors)
    if any(len(v) != n for v in vectors):
        message = f"Expected {n} vectors of dimension {n}"
        raise DimensionMismatch(message)

    if n == 0:
        return 1

    return int(IntegerMatrix.from_columns(vectors).to_domain_matrix().det())


def rank(vectors: Sequence[Sequence[int | Fraction]]) -> int:
    if not vectors:
        return 0

    return _rational_matrix(vectors, len(vectors[0])).rank()


def solve(matrix: Sequence[Sequence[int | Fraction]], rhs: Sequence[int | Fraction]) -> RationalVector | None:
    """
    One exact solution of `matrix · x = rhs`, free variables set to zero, or `None` if inconsistent.
    """
    width = len(matrix[0]) if matrix else 0
    augmented = [[*row, b] for row, b in zip(matrix, rhs, strict=True)]
    if not augmented:
        return tuple(Fraction(0) for _ in range(width))

    reduced, pivots = _rational_matrix(augmented, width + 1).rref()
    if width in pivots:
        return None

    rows = reduced.to_list()
    solution = [Fraction(0)] * width
    for i, column in enumerate(pivots):
        solution[column] = _fraction(rows[i][width])

    return tuple(solution)


def smith_normal_form(m: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """
    Returns `(U, D, V)` with `U · m · V = D`, `U` and `V` unimodular and `D` diagonal with
    nonnegative entries forming a divisibility chain, zeros last.
    """
    from sympy.polys.matrices.normalforms import smith_normal_decomp

    if not m.rows or not m.cols:
        return IntegerMatrix.identity(m.rows), m, IntegerMatrix.identity(m.cols)

    diagonal, u, v = smith_normal_decomp(m.to_domain_matrix())
    return (
        IntegerMatrix.from_domain_matrix(u),
        IntegerMatrix.from_domain_matrix(diagonal),
        IntegerMatrix.from_domain_matrix(v),
    )


def quotient_group(generators: Sequence[Sequence[int]], ambient_rank: int) -> AbelianGroupSNF:
    """
    Structure of Z^ambient_rank modulo the sublattice spanned by `generators`.
    """
    from sympy.polys.matrices.normalforms import invariant_factors

    _check_dimensions(generators, ambient_rank)
    if not generators or not ambient_rank:
        return AbelianGroupSNF(free_rank=ambient_rank)

    matrix = IntegerMatrix.from_columns(generators, rows=ambient_rank).to_domain_matrix()
    factors = [abs(int(d)) for d in invariant_factors(matrix) if d]
    return AbelianGroupSNF(free_rank=ambient_rank - len(factors), torsion=tuple(d for d in factors if d > 1))


def hermite_basis(generators: Sequence[Sequence[int]], ambient_rank: int) -> IntegerMatrix:
    """
    Column Hermite normal form basis of the sublattice spanned by `generators`: the matrix is upper
    triangular towards its last row, pivots are positive and entries right of a pivot are reduced
    modulo it.
    """
    from sympy.polys.matrices.normalforms import hermite_normal_form

    _check_dimensions(generators, ambient_rank)
    columns = [g for g in generators if any(g)]
    if not columns:
        return IntegerMatrix.from_columns([], rows=ambient_rank)

    basis = hermite_normal_form(IntegerMatrix.from_columns(columns, rows=ambient_rank).to_domain_matrix())
    return IntegerMatrix.from_domain_matrix(basis)


def quotient_map(generators: Sequence[Sequence[int]], ambient_rank: int) -> IntegerMatrix:
    """
    A surjection Z^ambient_rank -> Z^(ambient_rank - r) whose kernel is the saturation of the span of
    `generators`, where r is their rank.
    """
    _check_dimensions(generators, ambient_rank)
    if not generators:
        return IntegerMatrix.identity(ambient_rank)

    u, diagonal, _ = smith_normal_form(IntegerMatrix.from_columns(generators, rows=ambient_rank))
    r = sum(1 for d in diagonal.diagonal() if d)
    return IntegerMatrix.from_rows([u.row(i) for i in range(r, ambient_rank)], cols=ambient_rank)


def _check_dimensions(generators: Sequence[Sequence[int]], ambient_rank: int) -> None:
    for g in generators:
        if len(g) != ambient_rank:
            message = f"Generator {tuple(g)} does not live in Z^{ambient_rank}"
            raise DimensionMismatch(message)


def _rational_matrix(rows: Sequence[Sequence[int | Fraction]], width: int) -> DomainMatrix:
    from sympy.polys.domains import QQ
    from sympy.polys.matrices import DomainMatrix

    entries = [QQ(Fraction(x).numerator, Fraction(x).denominator) for row in rows for x in row]
    return DomainMatrix.from_list_flat(entries, (len(rows), width), QQ)


def _fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))
