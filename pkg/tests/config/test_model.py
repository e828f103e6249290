# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import msgspec
import pytest

from origami.config.constants import Verbosity
from origami.config.model import RootConfig, construct_model
from origami.fans.degree import DEFAULT_SAMPLES, DEFAULT_SEED
from origami.fans.equivalence import DEFAULT_MAX_SIGN_SEARCH


def test_defaults():
    config = construct_model({})

    assert config == RootConfig()
    assert config.terminal.verbosity == Verbosity.INFO
    assert config.terminal.styles.error == "bold red"
    assert config.terminal.styles.key == "bold cyan"
    assert config.compute.seed == DEFAULT_SEED
    assert config.compute.samples == DEFAULT_SAMPLES
    assert config.compute.max_sign_search == DEFAULT_MAX_SIGN_SEARCH
    assert config.compute.reduce is True


def test_string_values():
    config = construct_model({"compute": {"seed": "7", "max_sign_search": "3", "reduce": "false"}})

    assert config.compute.seed == 7
    assert config.compute.max_sign_search == 3
    assert config.compute.reduce is False


def test_verbosity():
    config = construct_model({"terminal": {"verbosity": 2}})

    assert config.terminal.verbosity is Verbosity.DEBUG


@pytest.mark.parametrize(
    ("data", "location"),
    [
        pytest.param({"compute": {"seed": -1}}, "$.compute.seed", id="negative seed"),
        pytest.param({"compute": {"samples": 0}}, "$.compute.samples", id="no samples"),
        pytest.param({"compute": {"workers": 4}}, "$.compute", id="unknown setting"),
        pytest.param({"terminal": {"verbosity": 5}}, "$.terminal.verbosity", id="verbosity out of range"),
    ],
)
def test_invalid(data, location):
    with pytest.raises(msgspec.ValidationError, match=location.replace("$", r"\$")):
        construct_model(data)
