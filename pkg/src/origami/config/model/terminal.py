# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from msgspec import Struct, field

from origami.config.constants import Verbosity


class TerminalStyles(Struct, frozen=True, forbid_unknown_fields=True):
    """
    Rich style definitions for each kind of diagnostic, see
    https://rich.readthedocs.io/en/latest/style.html for the syntax.
    """

    error: str = "bold red"
    warning: str = "bold yellow"
    success: str = "bold cyan"
    waiting: str = "bold magenta"
    debug: str = "bold on bright_black"
    trace: str = "dim"
    # keys of analysis tables
    key: str = "bold cyan"


class TerminalConfig(Struct, frozen=True, forbid_unknown_fields=True):
    verbosity: Verbosity = Verbosity.INFO
    styles: TerminalStyles = field(default_factory=TerminalStyles)
