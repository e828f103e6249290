# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import pytest

from origami.errors import DimensionMismatch
from origami.fans import MultiFan, WeightedChamber
from origami.polytopes import box
from origami.render import FOLD, NEGATIVE, render_svg
from origami.templates import projective_template, sphere_template
from origami.unimodular import UnimodularSequence, realize


def plane_fan(w_plus, w_minus):
    return MultiFan.build(
        2,
        {"a": (1, 0), "b": (0, 1), "c": (-1, -1)},
        [
            WeightedChamber("ab", frozenset({"a", "b"}), w_plus, w_minus),
            WeightedChamber("bc", frozenset({"b", "c"}), w_plus, w_minus),
            WeightedChamber("ca", frozenset({"c", "a"}), w_plus, w_minus),
        ],
    )


class TestMultifan:
    def test_edges_are_labeled(self):
        svg = render_svg(plane_fan(1, 0))

        assert "<svg" in svg
        assert 'width="400"' in svg
        assert "a [1, 0]" in svg
        assert "c [-1, -1]" in svg

    def test_negative_weight_hatching(self):
        assert NEGATIVE not in render_svg(plane_fan(1, 0))
        assert NEGATIVE in render_svg(plane_fan(0, 1))

    def test_weight_labels(self):
        svg = render_svg(plane_fan(2, 1))

        assert "+2 -1" in svg

    def test_deterministic(self):
        assert render_svg(plane_fan(1, 0)) == render_svg(plane_fan(1, 0))

    def test_sequence(self):
        svg = render_svg(UnimodularSequence.of([(1, 0), (0, 1), (-1, -1)]))

        assert "v1 [1, 0]" in svg


class TestTemplate:
    def test_oriented_template_with_fan(self):
        svg = render_svg(sphere_template(2))

        assert 'width="800"' in svg
        assert FOLD in svg
        assert "P0+" in svg
        assert "P1-" in svg

    def test_unoriented_template_alone(self):
        svg = render_svg(projective_template(2))

        assert 'width="400"' in svg
        assert FOLD in svg

    def test_polytope(self):
        svg = render_svg(box(2, 1))

        assert "P0+" in svg
        assert FOLD not in svg

    def test_certificate(self):
        certificate = realize(UnimodularSequence.of([(1, 0), (0, 1)]))

        assert render_svg(certificate) == render_svg(certificate.template)


@pytest.mark.parametrize(
    "obj",
    [
        pytest.param(sphere_template(3), id="template"),
        pytest.param(box(1), id="polytope"),
        pytest.param(MultiFan.build(1, {"a": (1,)}), id="multifan"),
    ],
)
def test_other_dimensions(obj):
    with pytest.raises(DimensionMismatch, match="Only 2-dimensional"):
        render_svg(obj)
