# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING

import click

from origami.cli.base import dynamic_command
from origami.cli.compose.utils import option_check, option_out

if TYPE_CHECKING:
    from origami.cli.application import Application


@dynamic_command(short_help="Multiply every polytope of a template by a Delzant polytope")
@click.argument("template", type=click.Path(dir_okay=False))
@click.argument("polytope", type=click.Path(dir_okay=False))
@option_out
@option_check
@click.pass_obj
def cmd(app: Application, *, template: str, polytope: str, out: str | None, check: bool) -> None:
    """
    Product of a template with a Delzant polytope, the template of the product manifold. Every fold
    becomes the product of the folded facet with the polytope.
    """
    from typing import cast

    from origami.cli.compose.utils import finish
    from origami.polytopes import DelzantPolytope
    from origami.templates import OrigamiTemplate, count_fixed_points, product_with_delzant

    first = cast(OrigamiTemplate, app.load(template, kind="template"))
    second = cast(DelzantPolytope, app.load(polytope, kind="polytope"))
    result = product_with_delzant(first, second)
    app.display_debug(
        f"{count_fixed_points(first)} fixed points times {len(second.vertices)} vertices "
        f"give {count_fixed_points(result)} fixed points"
    )
    finish(app, result, out=out, check=check)
