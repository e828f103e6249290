# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import Any

from msgspec import Struct, convert, field

from origami.config.model.compute import ComputeConfig
from origami.config.model.terminal import TerminalConfig


class RootConfig(Struct, frozen=True, omit_defaults=True):
    terminal: TerminalConfig = field(default_factory=TerminalConfig)
    compute: ComputeConfig = field(default_factory=ComputeConfig)


def construct_model(data: dict[str, Any]) -> RootConfig:
    """
    Settings come from command line flags and environment variables, so values may arrive as strings.
    """
    return convert(data, RootConfig, strict=False)
