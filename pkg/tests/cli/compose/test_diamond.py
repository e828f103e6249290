# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import pytest

from origami.documents import loads
from origami.templates import sphere_template


class TestMultifan:
    @pytest.mark.parametrize("edge", [pytest.param("s", id="label"), pytest.param("0,-1", id="vector")])
    def test_squares(self, origami, helpers, fixture_path, edge):
        result = origami(
            "compose", "diamond", fixture_path("square-plus"), fixture_path("square-minus"), "--edge", edge, "--check"
        )

        assert result.exit_code == 0, result.output
        helpers.assert_sorted_json(result.stdout)
        document = helpers.parse_json(result.stdout)
        assert document["kind"] == "multifan"
        assert sorted(document["edges"]) == ["e", "n", "n.2", "w"]
        assert len(document["chambers"]) == 4
        assert result.stderr == "The result is valid\n"

    def test_same_weights(self, origami, fixture_path):
        result = origami("compose", "diamond", fixture_path("square-plus"), fixture_path("square-plus"), "--edge", "s")

        assert result.exit_code == 1, result.output
        assert result.stderr.startswith("WeightMismatch: ")

    def test_missing_edge(self, origami, fixture_path):
        result = origami("compose", "diamond", fixture_path("square-plus"), fixture_path("square-minus"))

        assert result.exit_code == 2, result.output
        assert "--edge" in result.stderr

    def test_unknown_edge(self, origami, fixture_path):
        result = origami(
            "compose", "diamond", fixture_path("square-plus"), fixture_path("square-minus"), "--edge", "1,1"
        )

        assert result.exit_code == 2, result.output


class TestTemplate:
    def test_triangles(self, origami, fixture_path):
        result = origami(
            "compose",
            "diamond",
            fixture_path("triangle-template"),
            fixture_path("negative-triangle-template"),
            "--facet",
            "0,2",
            "--facet2",
            "0,2",
            "--check",
        )

        assert result.exit_code == 0, result.output
        assert loads(result.stdout) == sphere_template(2)

    def test_missing_facet(self, origami, fixture_path):
        result = origami(
            "compose",
            "diamond",
            fixture_path("triangle-template"),
            fixture_path("negative-triangle-template"),
            "--facet",
            "0,2",
        )

        assert result.exit_code == 2, result.output


def test_mixed_kinds(origami, fixture_path):
    result = origami("compose", "diamond", fixture_path("cp2"), fixture_path("triangle-template"), "--edge", "a")

    assert result.exit_code == 2, result.output
    assert result.stdout == ""
