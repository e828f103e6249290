# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING

import click

if TYPE_CHECKING:
    from collections.abc import Callable

    from origami.cli.application import Application
    from origami.documents import Document
    from origami.fans import MultiFan


def option_out(f: Callable) -> Callable:
    return click.option("--out", "-o", help="Write the result to this path instead of standard output")(f)


def option_check(f: Callable) -> Callable:
    return click.option("--check", is_flag=True, help="Validate the result, exiting with code 1 if it is invalid")(f)


def parse_integers(text: str, *, count: int | None = None) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.replace(" ", "").split(","))
    except ValueError:
        message = f"expected integers separated by commas, got `{text}`"
        raise click.BadParameter(message) from None

    if count is not None and len(values) != count:
        message = f"expected {count} integers separated by commas, got `{text}`"
        raise click.BadParameter(message)

    return values


def resolve_edge(mf: MultiFan, text: str) -> str:
    """
    An edge given by its label or by the vector it carries. A vector carried by several edges
    selects the smallest label.
    """
    if text in mf.edges:
        return text

    vector = parse_integers(text, count=mf.dim)
    labels = sorted(label for label, carried in mf.edges.items() if carried == vector)
    if not labels:
        message = f"no edge is labeled `{text}` or carries the vector {vector}"
        raise click.BadParameter(message)

    return labels[0]


def finish(app: Application, result: Document, *, out: str | None, check: bool) -> None:
    from origami.cli.validate import validation_report

    app.emit(result, out=out)
    if not check:
        return

    report = validation_report(result)
    if report.valid:
        app.display_success("The result is valid")
        return

    for violation in report.violations:
        app.display_error(f"{violation.code}: {violation.detail}")

    app.abort(code=1)
