# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING, Any

import click

from origami.cli.base import dynamic_command

if TYPE_CHECKING:
    from collections.abc import Callable

    from origami.cli.application import Application
    from origami.config.model.compute import ComputeConfig
    from origami.fans import MultiFan
    from origami.polytopes import DelzantPolytope
    from origami.templates import OrigamiTemplate
    from origami.unimodular import UnimodularSequence


@dynamic_command(short_help="Compute every applicable invariant of a document")
@click.argument("path", type=click.Path(dir_okay=False))
@click.pass_obj
def cmd(app: Application, *, path: str) -> None:
    """
    Compute every invariant that applies to a multi-fan, polytope, template, sequence or certificate
    and print them as one report.

    Values that do not exist for the input, such as the degree of a multi-fan without top-dimensional
    cones, are `null` and explained under `reasons`. Any other failure also ends up under `reasons`
    and makes the exit code 1.
    """
    from origami.documents import kind_of
    from origami.fans import MultiFan
    from origami.polytopes import DelzantPolytope
    from origami.templates import OrigamiTemplate
    from origami.unimodular import UnimodularSequence

    document = app.load(path)
    analysis = Analysis(app, app.config.compute)
    report: dict[str, Any] = {"kind": kind_of(document)}
    if isinstance(document, MultiFan):
        analysis.multifan(report, document)
    elif isinstance(document, DelzantPolytope):
        analysis.polytope(report, document)
    elif isinstance(document, OrigamiTemplate):
        analysis.template(report, document)
    elif isinstance(document, UnimodularSequence):
        analysis.sequence(report, document)
    else:
        report["signs"] = list(document.signs)
        analysis.template(report, document.template)

    report["reasons"] = analysis.reasons
    app.emit(report)
    app.display_table("Analysis", {key: value for key, value in report.items() if key != "reasons"})
    if analysis.failed:
        app.abort(code=1)


class Analysis:
    """
    Fills report sections one value at a time. A domain error while computing a value sets it to
    `null` and records the reason under the dotted path of the value.
    """

    def __init__(self, app: Application, compute: ComputeConfig) -> None:
        self.app = app
        self.compute = compute
        self.reasons: dict[str, str] = {}
        self.failed = False

    def attempt(self, section: dict[str, Any], key: str, path: str, computation: Callable[[], Any]) -> Any:
        from origami.errors import EmptyTopDimension, NotOriented, NotPreComplete, OrigamiError

        try:
            value = computation()
        except (EmptyTopDimension, NotOriented, NotPreComplete) as e:
            value = None
            self.reasons[f"{path}{key}"] = f"{type(e).__name__}: {e}"
        except OrigamiError as e:
            value = None
            self.reasons[f"{path}{key}"] = f"{type(e).__name__}: {e}"
            self.failed = True
            self.app.display_error(f"{path}{key}: {type(e).__name__}: {e}")

        section[key] = value
        return value

    def multifan(self, section: dict[str, Any], mf: MultiFan, path: str = "") -> None:
        from origami.fans import is_complete, is_nonsingular, local_degrees, validate
        from origami.invariants import n_delta

        seed, samples = self.compute.seed, self.compute.samples
        section["dim"] = mf.dim
        section["edges"] = len(mf.edges)
        section["chambers"] = len(mf.chambers)
        report = validate(mf)
        section["valid"] = report.valid
        section["violations"] = report.violations
        if not report.valid:
            self.failed = True
            for key in ("degree", "complete", "nonsingular", "n_delta"):
                section[key] = None
                self.reasons[f"{path}{key}"] = "the multi-fan violates its axioms"

            return

        degrees = self.attempt(section, "degree", path, lambda: local_degrees(mf, seed=seed, samples=samples))
        if degrees is not None:
            section["degree"] = degrees.degree
            section["degree_method"] = degrees.method
            for witness in degrees.witnesses:
                self.app.display_trace(f"{path}d_v = {witness.degree} at {[str(x) for x in witness.point]}")

            if (pair := degrees.disagreement()) is not None:
                first, second = pair
                self.reasons[f"{path}degree"] = (
                    f"NotPreComplete: d_v = {first.degree} at {[str(x) for x in first.point]}, "
                    f"d_v = {second.degree} at {[str(x) for x in second.point]}"
                )

        section["pre_complete"] = section["degree"] is not None
        self.attempt(section, "complete", path, lambda: is_complete(mf, seed=seed, samples=samples))
        self.attempt(section, "nonsingular", path, lambda: is_nonsingular(mf))

        def lattice() -> dict[str, Any]:
            basis, quotient = n_delta(mf)
            if basis.cols < mf.dim - 1:
                self.app.display_warning(
                    f"{path}n_delta: N_Δ has rank {basis.cols}, below n - 1 = {mf.dim - 1}, "
                    "so no origami template has this multi-fan"
                )

            return {"rank": basis.cols, "basis": basis.to_columns(), "quotient": str(quotient)}

        self.attempt(section, "n_delta", path, lattice)

    def polytope(self, section: dict[str, Any], polytope: DelzantPolytope) -> None:
        section["dim"] = polytope.dim
        section["facets"] = len(polytope.facets)
        report = self.attempt(section, "delzant", "", polytope.is_delzant)
        if report is None:
            section["normal_fan"] = None
            self.reasons["normal_fan"] = "the facets do not describe a bounded polytope"
            return

        section["delzant"] = report.valid
        section["violations"] = report.violations
        section["vertices"] = len(polytope.vertices)
        fan = self.attempt(section, "normal_fan", "", polytope.normal_fan)
        if fan is not None:
            section["normal_fan"] = {}
            self.multifan(section["normal_fan"], fan, "normal_fan.")

    def template(self, section: dict[str, Any], template: OrigamiTemplate) -> None:
        from origami.fans import merge
        from origami.invariants import pi1_report
        from origami.templates import (
            classify,
            count_fixed_points,
            facet_classes,
            multifan_of_template,
            template_graph,
            validate_template,
        )

        section["dim"] = template.dim
        section["polytopes"] = len(template.pieces)
        section["folds"] = len(template.folds)
        report = validate_template(template)
        section["valid"] = report.valid
        section["violations"] = report.violations
        if not report.valid:
            self.failed = True
            self.reasons["template"] = "the template violates its axioms, no invariants were computed"
            return

        kind = classify(template)
        section["cooriented"] = kind.cooriented
        section["oriented"] = kind.oriented
        section["acyclic"] = kind.acyclic
        section["b1"] = template_graph(template).b1
        section["fixed_points"] = count_fixed_points(template)
        section["facet_classes"] = len(facet_classes(template))

        def fundamental_group() -> dict[str, Any]:
            from msgspec import structs

            pi1 = pi1_report(template)
            return {**structs.asdict(pi1), "n_delta_quotient": str(pi1.n_delta_quotient)}

        self.attempt(section, "pi1", "", fundamental_group)
        mf = self.attempt(section, "multifan", "", lambda: merge(multifan_of_template(template)))
        if mf is not None:
            section["multifan"] = {}
            self.multifan(section["multifan"], mf, "multifan.")

    def sequence(self, section: dict[str, Any], seq: UnimodularSequence) -> None:
        from origami.fans import merge
        from origami.unimodular import canonical_form, is_unimodular, multifan_of_sequence, winding_number

        section["length"] = len(seq)
        section["unimodular"] = is_unimodular(seq)
        self.attempt(section, "winding_number", "", lambda: winding_number(seq))
        self.attempt(section, "canonical_form", "", lambda: [list(v) for v in canonical_form(seq).vectors])
        mf = self.attempt(section, "multifan", "", lambda: merge(multifan_of_sequence(seq)))
        if mf is not None:
            section["multifan"] = {}
            self.multifan(section["multifan"], mf, "multifan.")
