# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING

import click

from origami.cli.base import dynamic_command

if TYPE_CHECKING:
    from origami.cli.application import Application
    from origami.documents import Document
    from origami.reports import ValidationReport

KINDS = ("multifan", "polytope", "template", "sequence", "certificate")


@dynamic_command(short_help="Check a document against its axioms")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--kind", "-k", type=click.Choice(KINDS), help="Expected kind of document (default: read from the file)")
@click.pass_obj
def cmd(app: Application, *, path: str, kind: str | None) -> None:
    """
    Check a document against the axioms of its kind and print the report. The exit code is 1 when
    there are violations.
    """
    from origami.documents import kind_of

    document = app.load(path, kind=kind)  # type: ignore[arg-type]
    found = kind_of(document)
    report = validation_report(document)
    app.emit({"kind": found, "valid": report.valid, "violations": report.violations})
    if report.valid:
        app.display_success(f"Valid {found}")
        return

    for violation in report.violations:
        app.display_error(f"{violation.code}: {violation.detail}")

    app.abort(code=1)


def validation_report(document: Document) -> ValidationReport:
    from origami.errors import OrigamiError
    from origami.fans import MultiFan, validate
    from origami.polytopes import DelzantPolytope
    from origami.reports import ValidationReport, Violation
    from origami.templates import OrigamiTemplate, validate_template
    from origami.unimodular import UnimodularSequence, verify_certificate

    if isinstance(document, MultiFan):
        return validate(document)

    if isinstance(document, DelzantPolytope):
        try:
            return document.is_delzant()
        except OrigamiError as e:
            return ValidationReport.collect([Violation("polytope", f"{type(e).__name__}: {e}")])

    if isinstance(document, OrigamiTemplate):
        return validate_template(document)

    if isinstance(document, UnimodularSequence):
        return ValidationReport.collect(
            Violation(
                "not-unimodular",
                f"vectors {i + 1} and {(i + 1) % len(document) + 1} have determinant {determinant}",
            )
            for i, determinant in enumerate(document.determinants())
            if abs(determinant) != 1
        )

    try:
        verify_certificate(document)
    except (OrigamiError, ValueError) as e:
        return ValidationReport.collect([Violation("verification", f"{type(e).__name__}: {e}")])

    return ValidationReport(valid=True)
