# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import os
from functools import cached_property
from typing import TYPE_CHECKING, Any

import click
from rich.console import Console

from origami.config.constants import AppEnvVars, Verbosity

if TYPE_CHECKING:
    from rich.style import Style
    from rich.table import Table

    from origami.config.model.terminal import TerminalConfig


class Terminal:
    """
    Diagnostics go to standard error. Standard output only ever receives the documents and pictures
    written by `write_payload`.
    """

    def __init__(self, *, config: TerminalConfig, enable_color: bool | None):
        # Force consistent output for test assertions
        self.testing = AppEnvVars.SELF_TESTING in os.environ

        self.console = Console(
            stderr=True,
            force_terminal=enable_color,
            no_color=enable_color is False,
            markup=False,
            emoji=False,
            highlight=False,
            legacy_windows=False if self.testing else None,
        )
        self.__config = config

    @property
    def verbosity(self) -> Verbosity:
        return self.__config.verbosity

    def write_payload(self, data: bytes | str) -> None:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        click.echo(text, nl=not text.endswith("\n"))

    def display_critical(self, text: str = "", **kwargs: Any) -> None:
        self.output(text, style=self.__style("error"), **kwargs)

    def display_error(self, text: str = "", **kwargs: Any) -> None:
        self.__display(Verbosity.ERROR, "error", text, **kwargs)

    def display_warning(self, text: str = "", **kwargs: Any) -> None:
        self.__display(Verbosity.WARNING, "warning", text, **kwargs)

    def display_success(self, text: str = "", **kwargs: Any) -> None:
        self.__display(Verbosity.INFO, "success", text, **kwargs)

    def display_waiting(self, text: str = "", **kwargs: Any) -> None:
        self.__display(Verbosity.INFO, "waiting", text, **kwargs)

    def display_debug(self, text: str = "", level: int = 1, **kwargs: Any) -> None:
        if not Verbosity.VERBOSE <= level <= Verbosity.TRACE:
            message = "Debug output can only have verbosity levels between 1 and 3 (inclusive)"
            raise ValueError(message)

        self.__display(level, "debug", text, **kwargs)

    def display_trace(self, text: str = "", **kwargs: Any) -> None:
        """
        Steps of a construction and the witnesses of a degree, shown from `-vv` on.
        """
        self.__display(Verbosity.DEBUG, "trace", text, **kwargs)

    def display_table(self, title: str, data: dict[str, Any], level: int = Verbosity.VERBOSE) -> None:
        if self.__config.verbosity >= level:
            self.output(_construct_table(title, data, key_style=self.__style("key")))

    def output(self, *args: Any, **kwargs: Any) -> None:
        kwargs.setdefault("overflow", "ignore")
        kwargs.setdefault("no_wrap", True)
        kwargs.setdefault("crop", False)
        self.console.print(*args, **kwargs)

    def __display(self, level: int, kind: str, text: str, **kwargs: Any) -> None:
        if self.__config.verbosity >= level:
            self.output(text, style=self.__style(kind), **kwargs)

    def __style(self, kind: str) -> Style:
        return self.__styles[kind]

    @cached_property
    def __styles(self) -> dict[str, Style]:
        from msgspec import structs

        return {kind: _parse_style(kind, style) for kind, style in structs.asdict(self.__config.styles).items()}


def _parse_style(kind: str, style: str) -> Style:
    from rich.errors import StyleSyntaxError
    from rich.style import Style

    try:
        return Style.parse(style)
    except StyleSyntaxError as e:  # no cov
        message = f"Invalid style definition for `terminal.styles.{kind}`: {e}"
        raise ValueError(message) from None


def _construct_table(title: str, data: dict[str, Any], *, key_style: Style) -> Table:
    from rich.table import Table

    table = Table(title=title or None, show_header=False)
    table.add_column(style=key_style)
    table.add_column()

    for key, value in data.items():
        if isinstance(value, dict):
            table.add_row(key, _construct_table("", value, key_style=key_style))
        elif value is None:
            table.add_row(key, "-")
        else:
            table.add_row(key, str(value))

    return table
