# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import pytest

from origami.errors import TooLarge
from origami.fans import equivalent_up_to_signs, flip_edge, flip_global, isomorphic


class TestIsomorphic:
    def test_relabeled(self, cp2):
        assert isomorphic(cp2, cp2.relabel(str.upper, str.upper))

    def test_reflexive(self, square_plus):
        assert isomorphic(square_plus, square_plus)

    def test_weights_matter(self, cp2, cp2_bar):
        assert not isomorphic(cp2, cp2_bar)

    def test_vectors_matter(self, cp2):
        assert not isomorphic(cp2, flip_global(cp2))

    def test_sizes_matter(self, cp2, square_plus):
        assert not isomorphic(cp2, square_plus)


class TestEquivalentUpToSigns:
    def test_single_flip(self, cp2):
        assert equivalent_up_to_signs(flip_edge(cp2, "a"), cp2) == {"a": -1, "b": 1, "c": 1}

    def test_identity_needs_no_flips(self, cp2):
        assert equivalent_up_to_signs(cp2, cp2) == {"a": 1, "b": 1, "c": 1}

    def test_global_flip(self, square_plus):
        signs = equivalent_up_to_signs(flip_global(square_plus), square_plus)

        assert signs is not None

    def test_unreachable_vectors(self, cp2):
        assert equivalent_up_to_signs(flip_global(cp2), cp2) is None

    def test_edge_count_differs(self, cp2, square_plus):
        assert equivalent_up_to_signs(cp2, square_plus) is None

    def test_bound(self, cp2):
        with pytest.raises(TooLarge, match="exceeds the bound of 2"):
            equivalent_up_to_signs(cp2, cp2, max_edges=2)
