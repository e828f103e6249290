# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import Any


class OrigamiError(Exception):
    """
    Base class for every domain error raised by the library. The class name is what the CLI reports.
    """


class DocumentError(OrigamiError):
    def __init__(self, message: str, *, line: int | None = None, column: int | None = None) -> None:
        super().__init__(message)
        self.line = line
        self.column = column


# Lattice


class ZeroVector(OrigamiError, ValueError):
    pass


class DimensionMismatch(OrigamiError, ValueError):
    pass


# Multi-fans


class EmptyTopDimension(OrigamiError):
    pass


class NotPreComplete(OrigamiError):
    def __init__(self, first: tuple[Any, int], second: tuple[Any, int]) -> None:
        message = (
            f"Local degree differs between generic vectors: "
            f"d = {first[1]} at {first[0]}, d = {second[1]} at {second[0]}"
        )
        super().__init__(message)
        self.witnesses = (first, second)


class FaceNotPresent(OrigamiError, LookupError):
    pass


class EdgeNotPresent(OrigamiError, LookupError):
    pass


class ChamberNotPresent(OrigamiError, LookupError):
    pass


class InsufficientWeight(OrigamiError, ValueError):
    pass


class NeighborhoodMismatch(OrigamiError):
    pass


class WeightMismatch(OrigamiError):
    pass


class ConeMismatch(OrigamiError):
    pass


class TooLarge(OrigamiError):
    pass


# Polytopes


class Unbounded(OrigamiError):
    pass


class Empty(OrigamiError):
    pass


class RedundantFacet(OrigamiError):
    pass


class NotDelzant(OrigamiError):
    pass


class DepthTooLarge(OrigamiError, ValueError):
    pass


# Templates


class NotOriented(OrigamiError):
    pass


class DiamondPreconditionFailed(OrigamiError):
    pass


class NotNonFolded(OrigamiError):
    pass


class SameOrientation(OrigamiError):
    pass


class VertexOnFold(OrigamiError):
    pass


# Unimodular sequences


class NonPrimitiveVector(OrigamiError, ValueError):
    pass


class NotUnimodular(OrigamiError, ValueError):
    pass


class NoRelation(OrigamiError):
    pass


class VerificationFailed(OrigamiError):
    pass
