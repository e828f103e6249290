# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import importlib
from functools import partial
from typing import TYPE_CHECKING, Any

import rich_click as click

if TYPE_CHECKING:
    from origami.cli.application import Application


class DynamicCommand(click.RichCommand):
    def invoke(self, ctx: click.Context) -> Any:
        from origami.errors import OrigamiError

        try:
            return super().invoke(ctx)
        except OrigamiError as e:
            app: Application = ctx.obj
            app.abort_error(e)


class DynamicGroup(click.RichGroup):
    def __init__(self, *args: Any, subcommands: tuple[str, ...], **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)

        # e.g. ('diamond', 'blow-up')
        self._subcommands = subcommands

    @property
    def _module(self) -> str:
        # e.g. origami.cli.compose
        return self.callback.__module__

    def list_commands(self, ctx: click.Context) -> list[str]:
        commands = super().list_commands(ctx)
        commands.extend(self._subcommands)
        return sorted(commands)

    def get_command(self, ctx: click.Context, cmd_name: str) -> click.Command | None:
        if cmd_name in self._subcommands:
            return self._lazy_load(cmd_name)

        return super().get_command(ctx, cmd_name)

    def _lazy_load(self, cmd_name: str) -> click.Command:
        import_path = f"{self._module}.{cmd_name.replace('-', '_')}"
        mod = importlib.import_module(import_path)
        cmd_object = getattr(mod, "cmd", None)
        if not isinstance(cmd_object, click.Command):
            message = f"Unable to lazily load command: {import_path}.cmd"
            raise TypeError(message)

        return cmd_object


dynamic_command = partial(click.command, cls=DynamicCommand)
dynamic_group = partial(click.group, cls=DynamicGroup)
