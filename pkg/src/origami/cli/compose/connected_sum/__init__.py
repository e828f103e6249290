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


@dynamic_command(short_help="Equivariant connected sum at chambers or fixed points")
@click.argument("first", type=click.Path(dir_okay=False))
@click.argument("second", type=click.Path(dir_okay=False))
@click.option("--chamber", help="Chamber of the first multi-fan")
@click.option("--chamber2", help="Chamber of the second multi-fan")
@click.option("--vertex", help="Fixed point `polytope,vertex` of the first template")
@click.option("--vertex2", help="Fixed point `polytope,vertex` of the second template")
@click.option(
    "--no-reduce",
    is_flag=True,
    help="Keep the componentwise sum of the weights instead of cancelling their common part",
)
@option_out
@option_check
@click.pass_obj
def cmd(
    app: Application,
    *,
    first: str,
    second: str,
    chamber: str | None,
    chamber2: str | None,
    vertex: str | None,
    vertex2: str | None,
    no_reduce: bool,
    out: str | None,
    check: bool,
) -> None:
    """
    Connected sum. Multi-fans are identified along two chambers spanning the same cone; templates are
    cut at two fixed points with the same vertex cone and folded together along the cuts.
    """
    from origami.cli.compose.utils import finish, parse_integers
    from origami.fans import MultiFan, connected_sum
    from origami.templates import OrigamiTemplate, VertexRef, template_connected_sum

    left = app.load(first)
    right = app.load(second)
    if isinstance(left, MultiFan) and isinstance(right, MultiFan):
        if chamber is None or chamber2 is None:
            message = "Multi-fans are summed at chambers, pass `--chamber` and `--chamber2`"
            raise click.UsageError(message)

        reduce = app.config.compute.reduce and not no_reduce
        app.display_debug(f"Connected sum at `{chamber}` and `{chamber2}`, reducing weights: {reduce}")
        result = connected_sum(left, right, chamber, chamber2, reduce=reduce)
    elif isinstance(left, OrigamiTemplate) and isinstance(right, OrigamiTemplate):
        if vertex is None or vertex2 is None:
            message = "Templates are summed at fixed points, pass `--vertex` and `--vertex2`"
            raise click.UsageError(message)

        ref = VertexRef(*parse_integers(vertex, count=2))
        ref2 = VertexRef(*parse_integers(vertex2, count=2))
        result = template_connected_sum(left, right, ref, ref2)
    else:
        message = (
            "The connected sum combines two multi-fans or two templates, "
            f"got a {type(left).__name__} and a {type(right).__name__}"
        )
        raise click.UsageError(message)

    finish(app, result, out=out, check=check)
