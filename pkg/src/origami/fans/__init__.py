# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from origami.fans.degree import DegreeReport, degree, is_complete, is_pre_complete, local_degrees, projected
from origami.fans.equivalence import equivalent_up_to_signs, isomorphic
from origami.fans.model import MultiFan, WeightedChamber, canonical, disjoint_union
from origami.fans.operations import (
    blow_up,
    connected_sum,
    diamond,
    flip_edge,
    flip_edges,
    flip_global,
    merge,
    self_diamond,
)
from origami.fans.validation import is_nonsingular, validate

__all__ = [
    "DegreeReport",
    "MultiFan",
    "WeightedChamber",
    "blow_up",
    "canonical",
    "connected_sum",
    "degree",
    "diamond",
    "disjoint_union",
    "equivalent_up_to_signs",
    "flip_edge",
    "flip_edges",
    "flip_global",
    "is_complete",
    "is_nonsingular",
    "is_pre_complete",
    "isomorphic",
    "local_degrees",
    "merge",
    "projected",
    "self_diamond",
    "validate",
]
