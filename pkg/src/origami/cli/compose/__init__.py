# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from origami.cli.base import dynamic_group


@dynamic_group(
    short_help="Combine multi-fans, polytopes and templates",
    subcommands=(
        "blow-up",
        "connected-sum",
        "diamond",
        "product",
    ),
)
def cmd() -> None:
    pass
