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
    from origami.documents import Document


@dynamic_command(short_help="Blow up a chamber or cut off a vertex")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--chamber", help="Chamber of a multi-fan to subdivide")
@click.option("--sign", type=click.Choice(["1", "-1"]), default="1", help="Which weight of the chamber is used up")
@click.option("--vertex", help="Vertex `k` of a polytope or fixed point `polytope,vertex` of a template")
@click.option("--depth", help="Depth of the cut as an integer or `p/q` (default: half of the largest possible)")
@option_out
@option_check
@click.pass_obj
def cmd(
    app: Application,
    *,
    path: str,
    chamber: str | None,
    sign: str,
    vertex: str | None,
    depth: str | None,
    out: str | None,
    check: bool,
) -> None:
    """
    Blow-up. A multi-fan chamber is subdivided at the sum of its generators; a polytope vertex or a
    template fixed point is cut off.
    """
    from fractions import Fraction

    from origami.cli.compose.utils import finish, parse_integers
    from origami.errors import VertexOnFold
    from origami.fans import MultiFan, blow_up
    from origami.polytopes import DelzantPolytope
    from origami.templates import OrigamiTemplate, VertexRef

    document = app.load(path)
    result: Document
    if isinstance(document, MultiFan):
        if chamber is None:
            message = "Multi-fans are blown up at chambers, pass `--chamber`"
            raise click.UsageError(message)

        result = blow_up(document, chamber, int(sign))
    elif isinstance(document, DelzantPolytope | OrigamiTemplate):
        if vertex is None:
            message = "Polytopes and templates are cut at vertices, pass `--vertex`"
            raise click.UsageError(message)

        try:
            cut = None if depth is None else Fraction(depth)
        except (ValueError, ZeroDivisionError):
            cut = Fraction(0)

        if cut is not None and cut <= 0:
            message = f"expected a positive rational depth, got `{depth}`"
            raise click.BadParameter(message, param_hint="'--depth'")

        if isinstance(document, DelzantPolytope):
            (index,) = parse_integers(vertex, count=1)
            result = document.corner_chop(index, cut)
        else:
            ref = VertexRef(*parse_integers(vertex, count=2))
            if document.on_fold(ref):
                message = f"Vertex {document.vertex(ref).point} lies on a folded facet"
                raise VertexOnFold(message)

            polytope = document.polytope(ref.polytope)
            result = document.with_polytope(ref.polytope, polytope.corner_chop(ref.vertex, cut))
    else:
        message = f"Cannot blow up a {type(document).__name__}"
        raise click.UsageError(message)

    finish(app, result, out=out, check=check)
