# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import Annotated

from msgspec import Meta, Struct

from origami.fans.degree import DEFAULT_SAMPLES, DEFAULT_SEED
from origami.fans.equivalence import DEFAULT_MAX_SIGN_SEARCH


class ComputeConfig(Struct, frozen=True, forbid_unknown_fields=True):
    """
    Knobs of the computations. The defaults are the defaults of the library functions.
    """

    # seeds the witness sampling of degree computations above dimension 3
    seed: Annotated[int, Meta(ge=0)] = DEFAULT_SEED
    samples: Annotated[int, Meta(ge=1)] = DEFAULT_SAMPLES
    # largest number of edges a search over sign assignments may cover
    max_sign_search: Annotated[int, Meta(ge=0)] = DEFAULT_MAX_SIGN_SEARCH
    # cancel the common part of the weights at connected sums
    reduce: bool = True
