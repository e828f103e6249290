# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING, cast

import click

from origami.cli.base import dynamic_command

if TYPE_CHECKING:
    from origami.cli.application import Application


def parse_vector(ctx: click.Context, param: click.Option, value: tuple[str, ...]) -> list[tuple[int, int]]:
    vectors = []
    for text in value:
        parts = text.replace(" ", "").split(",")
        try:
            a, b = map(int, parts)
        except ValueError:
            message = f"expected two integers separated by a comma, got `{text}`"
            raise click.BadParameter(message, ctx=ctx, param=param) from None

        vectors.append((a, b))

    return vectors


@dynamic_command(short_help="Build an origami template for a unimodular sequence")
@click.argument("path", type=click.Path(dir_okay=False), required=False)
@click.option(
    "--vector",
    "-v",
    "vectors",
    multiple=True,
    callback=parse_vector,
    help="A vector `a,b` of the sequence, in order (instead of a sequence document)",
)
@click.option("--out", "-o", help="Write the certificate to this path instead of standard output")
@click.option("--check", is_flag=True, help="Verify the certificate again as written and report the outcome")
@click.pass_obj
def cmd(app: Application, *, path: str | None, vectors: list[tuple[int, int]], out: str | None, check: bool) -> None:
    """
    Realize a unimodular sequence by an oriented acyclic origami template. Some vectors may have to
    change sign; the certificate lists the signs together with the steps of the construction.
    """
    from msgspec import structs

    from origami.documents import from_document, to_document
    from origami.unimodular import RealizationCertificate, UnimodularSequence, realize, verify_certificate

    if (path is None) == (not vectors):
        app.abort("Give either a sequence document or at least two `--vector` options", code=2)

    if path is not None:
        seq = cast(UnimodularSequence, app.load(path, kind="sequence"))
    else:
        seq = UnimodularSequence.of(vectors)

    app.display_waiting(f"Realizing a sequence of {len(seq)} vectors")
    certificate = realize(seq)
    for step in certificate.trace:
        detail = f" {step.reduction}" if step.reduction is not None else ""
        app.display_trace(f"{step.action}: {[list(v) for v in step.vectors]}{detail}")

    template = certificate.template
    app.display_debug(
        f"Template with {len(template.pieces)} polytopes and {len(template.folds)} folds, "
        f"signs {list(certificate.signs)}"
    )

    document = structs.replace(to_document(certificate), verified=True)
    if check:
        # the emitted document, not the in-memory certificate
        verify_certificate(cast(RealizationCertificate, from_document(document)))
        app.display_success("Verified: the template reproduces the signed sequence")

    app.emit(document, out=out)
