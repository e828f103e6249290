# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from enum import IntEnum


class AppEnvVars:
    QUIET = "ORIGAMI_QUIET"
    VERBOSE = "ORIGAMI_VERBOSE"
    SEED = "ORIGAMI_SEED"
    MAX_SIGN_SEARCH = "ORIGAMI_MAX_SIGN_SEARCH"
    DEBUG = "ORIGAMI_DEBUG"
    SELF_TESTING = "ORIGAMI_SELF_TESTING"
    # https://no-color.org
    NO_COLOR = "NO_COLOR"
    FORCE_COLOR = "FORCE_COLOR"


class Verbosity(IntEnum):
    SILENT = -3
    ERROR = -2
    WARNING = -1
    INFO = 0
    VERBOSE = 1
    DEBUG = 2
    TRACE = 3
