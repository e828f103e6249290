# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import pytest

from origami.fans import MultiFan, WeightedChamber


def complete_fan(edges: dict[str, tuple[int, ...]], chambers: dict[str, str], weight: tuple[int, int]) -> MultiFan:
    return MultiFan.build(
        len(next(iter(edges.values()))),
        edges,
        [WeightedChamber(chamber_id, frozenset(labels), *weight) for chamber_id, labels in chambers.items()],
    )


@pytest.fixture
def cp2() -> MultiFan:
    return complete_fan({"a": (1, 0), "b": (0, 1), "c": (-1, -1)}, {"ab": "ab", "bc": "bc", "ca": "ca"}, (1, 0))


@pytest.fixture
def cp2_bar() -> MultiFan:
    return complete_fan({"a": (1, 0), "b": (0, 1), "c": (-1, -1)}, {"ab": "ab", "bc": "bc", "ca": "ca"}, (0, 1))


def square(weight: tuple[int, int]) -> MultiFan:
    return complete_fan(
        {"e": (1, 0), "n": (0, 1), "w": (-1, 0), "s": (0, -1)},
        {"en": "en", "nw": "nw", "ws": "ws", "se": "se"},
        weight,
    )


@pytest.fixture
def square_plus() -> MultiFan:
    return square((1, 0))


@pytest.fixture
def square_minus() -> MultiFan:
    return square((0, 1))
