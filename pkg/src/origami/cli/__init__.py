# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import os

import rich_click as click

from origami.__about__ import __version__
from origami.cli.base import dynamic_group
from origami.config.constants import AppEnvVars, Verbosity


@dynamic_group(
    context_settings={"help_option_names": ["-h", "--help"], "max_content_width": 120, "show_default": True},
    invoke_without_command=True,
    subcommands=(
        "analyze",
        "compose",
        "realize",
        "render",
        "validate",
    ),
)
@click.rich_config(
    help_config=click.RichHelpConfiguration(
        use_markdown=True,
        show_metavars_column=False,
        append_metavars_help=True,
        style_option="purple",
        style_argument="purple",
        style_command="purple",
    ),
)
@click.option(
    "--verbose",
    "-v",
    envvar=AppEnvVars.VERBOSE,
    count=True,
    default=None,
    help="Increase verbosity (can be used additively) [env var: `ORIGAMI_VERBOSE`]",
)
@click.option(
    "--quiet",
    "-q",
    envvar=AppEnvVars.QUIET,
    count=True,
    default=None,
    help="Decrease verbosity (can be used additively) [env var: `ORIGAMI_QUIET`]",
)
@click.option(
    "--color/--no-color",
    default=None,
    help="Whether or not to display colored output (default is auto-detection) [env vars: `FORCE_COLOR`/`NO_COLOR`]",
)
@click.option(
    "--seed",
    envvar=AppEnvVars.SEED,
    type=int,
    default=None,
    help="Seed of the witness sampling used for degrees above dimension 3 [env var: `ORIGAMI_SEED`]",
)
@click.option(
    "--max-sign-search",
    envvar=AppEnvVars.MAX_SIGN_SEARCH,
    type=int,
    default=None,
    help="Largest number of edges searched over when checking sign changes [env var: `ORIGAMI_MAX_SIGN_SEARCH`]",
)
@click.version_option(version=__version__, prog_name="origami")
@click.pass_context
def origami(
    ctx: click.Context,
    *,
    verbose: int | None,
    quiet: int | None,
    color: bool | None,
    seed: int | None,
    max_sign_search: int | None,
) -> None:
    """
    Multi-fans, Delzant polytopes and origami templates of toric origami manifolds.

    Documents are JSON files tagged with `"format": "origami-fan/1"`. Results are written to
    standard output and diagnostics to standard error.
    """
    import msgspec

    from origami.cli.application import Application
    from origami.config.model import construct_model

    data: dict[str, dict[str, int]] = {"terminal": {}, "compute": {}}
    if verbose is not None or quiet is not None:
        verbosity = (verbose or 0) - (quiet or 0)
        data["terminal"]["verbosity"] = max(Verbosity.SILENT, min(Verbosity.TRACE, verbosity))

    if seed is not None:
        data["compute"]["seed"] = seed

    if max_sign_search is not None:
        data["compute"]["max_sign_search"] = max_sign_search

    if color is None:
        if os.environ.get(AppEnvVars.NO_COLOR) == "1":
            color = False
        elif os.environ.get(AppEnvVars.FORCE_COLOR) == "1":
            color = True

    try:
        config = construct_model(data)
    except msgspec.ValidationError as e:
        ctx.fail(f"Invalid option: {e}")

    app = Application(terminator=ctx.exit, config=config, enable_color=color)
    if not ctx.invoked_subcommand:
        app.write_payload(ctx.get_help())
        app.abort(code=0)

    # Persist app data for sub-commands
    ctx.obj = app


def main() -> None:
    try:
        origami(prog_name="origami", windows_expand_args=False)
    except Exception:  # noqa: BLE001
        import sys

        import click as click_core
        from rich.console import Console

        console = Console()
        origami_debug = os.getenv(AppEnvVars.DEBUG) in {"1", "true"}
        console.print_exception(suppress=[click, click_core], show_locals=origami_debug)
        sys.exit(1)
