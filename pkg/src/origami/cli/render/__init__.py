# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING

import click

from origami.cli.base import dynamic_command

if TYPE_CHECKING:
    from origami.cli.application import Application


@dynamic_command(short_help="Draw a 2-dimensional document as SVG")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--out", "-o", help="Write the picture to this path instead of standard output")
@click.pass_obj
def cmd(app: Application, *, path: str, out: str | None) -> None:
    """
    Draw a multi-fan, polytope, template, sequence or certificate of dimension 2. Chambers are hatched
    sectors and templates are shown next to their multi-fan when they are oriented.
    """
    from origami.render import render_svg

    app.emit(render_svg(app.load(path)), out=out)
