# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import os
import sys
from typing import TYPE_CHECKING

import pytest
from click.testing import CliRunner as __CliRunner

from origami.cli.application import Application
from origami.config.constants import AppEnvVars
from origami.config.model import RootConfig
from origami.utils.fs import Path, temp_directory

if TYPE_CHECKING:
    import pathlib
    from collections.abc import Generator

FIXTURES = Path(__file__).parent / "fixtures"


class CliRunner(__CliRunner):
    def __init__(self, command):
        super().__init__(mix_stderr=False)
        self.__command = command

    def __call__(self, *args, **kwargs):
        # Exceptions should always be handled
        kwargs.setdefault("catch_exceptions", False)

        return self.invoke(self.__command, args, **kwargs)


@pytest.fixture(scope="session")
def origami():
    from origami import cli

    return CliRunner(cli.origami)


@pytest.fixture
def temp_dir(tmp_path: pathlib.Path) -> Path:
    return Path(tmp_path)


@pytest.fixture(scope="session", autouse=True)
def isolation() -> Generator[Path, None, None]:
    with temp_directory() as d, pytest.MonkeyPatch.context() as monkeypatch:
        monkeypatch.setenv(AppEnvVars.NO_COLOR, "1")
        monkeypatch.setenv(AppEnvVars.SELF_TESTING, "true")
        monkeypatch.setenv("COLUMNS", "80")
        monkeypatch.setenv("LINES", "24")
        for name in (
            AppEnvVars.FORCE_COLOR,
            AppEnvVars.VERBOSE,
            AppEnvVars.QUIET,
            AppEnvVars.SEED,
            AppEnvVars.MAX_SIGN_SEARCH,
            AppEnvVars.DEBUG,
        ):
            monkeypatch.delenv(name, raising=False)

        monkeypatch.chdir(d)
        yield d


@pytest.fixture(scope="session")
def helpers():
    # https://docs.pytest.org/en/latest/writing_plugins.html#assertion-rewriting
    pytest.register_assert_rewrite("tests.helpers.api")

    from .helpers import api

    return api


@pytest.fixture
def app() -> Application:
    return Application(terminator=sys.exit, config=RootConfig(), enable_color=False)


@pytest.fixture(scope="session")
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def fixture_path(fixtures: Path):
    def locate(name: str) -> str:
        return os.fspath(fixtures / f"{name}.json")

    return locate
