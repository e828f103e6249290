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


@dynamic_command(short_help="Join two multi-fans at edges or two templates at facets")
@click.argument("first", type=click.Path(dir_okay=False))
@click.argument("second", type=click.Path(dir_okay=False))
@click.option("--edge", help="Edge of the first multi-fan, as a label or a vector `a,b`")
@click.option("--edge2", help="Edge of the second multi-fan (default: same as `--edge`)")
@click.option("--facet", help="Facet `polytope,facet` of the first template")
@click.option("--facet2", help="Facet `polytope,facet` of the second template")
@option_out
@option_check
@click.pass_obj
def cmd(
    app: Application,
    *,
    first: str,
    second: str,
    edge: str | None,
    edge2: str | None,
    facet: str | None,
    facet2: str | None,
    out: str | None,
    check: bool,
) -> None:
    """
    Diamond operation. Multi-fans lose the neighborhoods of the two edges and are glued along their
    boundaries; templates gain a fold joining the two facets.
    """
    from origami.cli.compose.utils import finish, parse_integers, resolve_edge
    from origami.fans import MultiFan, diamond
    from origami.templates import FacetRef, OrigamiTemplate, template_diamond

    left = app.load(first)
    right = app.load(second)
    if isinstance(left, MultiFan) and isinstance(right, MultiFan):
        if edge is None:
            message = "Multi-fans are joined at edges, pass `--edge`"
            raise click.UsageError(message)

        label = resolve_edge(left, edge)
        label2 = resolve_edge(right, edge2 or edge)
        app.display_debug(f"Diamond at edges `{label}` and `{label2}`")
        result = diamond(left, right, label, label2)
    elif isinstance(left, OrigamiTemplate) and isinstance(right, OrigamiTemplate):
        if facet is None or facet2 is None:
            message = "Templates are joined at facets, pass `--facet` and `--facet2`"
            raise click.UsageError(message)

        ref = FacetRef(*parse_integers(facet, count=2))
        ref2 = FacetRef(*parse_integers(facet2, count=2))
        result = template_diamond(left, right, ref, ref2)
    else:
        message = (
            "The diamond operation combines two multi-fans or two templates, "
            f"got a {type(left).__name__} and a {type(right).__name__}"
        )
        raise click.UsageError(message)

    finish(app, result, out=out, check=check)
