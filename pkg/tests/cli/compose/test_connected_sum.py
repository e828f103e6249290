# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations


class TestMultifan:
    def test_reduced(self, origami, helpers, fixture_path):
        result = origami(
            "compose",
            "connected-sum",
            fixture_path("cp2"),
            fixture_path("cp2-bar"),
            "--chamber",
            "ab",
            "--chamber2",
            "ab",
            "--check",
        )

        assert result.exit_code == 0, result.output
        document = helpers.parse_json(result.stdout)
        assert sorted(document["edges"]) == ["a", "b", "c", "c.2"]
        assert sorted(chamber["id"] for chamber in document["chambers"]) == ["bc", "bc.2", "ca", "ca.2"]

    def test_no_reduce(self, origami, helpers, fixture_path):
        result = origami(
            "compose",
            "connected-sum",
            fixture_path("cp2"),
            fixture_path("cp2-bar"),
            "--chamber",
            "ab",
            "--chamber2",
            "ab",
            "--no-reduce",
        )

        assert result.exit_code == 0, result.output
        chambers = helpers.parse_json(result.stdout)["chambers"]
        assert len(chambers) == 5
        assert [1, 1] in [c["w"] for c in chambers]

    def test_missing_chamber(self, origami, fixture_path):
        result = origami("compose", "connected-sum", fixture_path("cp2"), fixture_path("cp2-bar"), "--chamber", "ab")

        assert result.exit_code == 2, result.output

    def test_unknown_chamber(self, origami, fixture_path):
        result = origami(
            "compose",
            "connected-sum",
            fixture_path("cp2"),
            fixture_path("cp2-bar"),
            "--chamber",
            "xy",
            "--chamber2",
            "ab",
        )

        assert result.exit_code == 1, result.output
        assert result.stderr.startswith("ChamberNotPresent: ")


class TestTemplate:
    def test_triangles(self, origami, helpers, fixture_path):
        result = origami(
            "compose",
            "connected-sum",
            fixture_path("triangle-template"),
            fixture_path("negative-triangle-template"),
            "--vertex",
            "0,0",
            "--vertex2",
            "0,0",
            "--check",
        )

        assert result.exit_code == 0, result.output
        document = helpers.parse_json(result.stdout)
        assert document["folds"] == [{"pair": [[0, 3], [1, 3]]}]
        assert document["polytopes"][0]["polytope"]["facets"][3] == {"normal": [1, 1], "offset": "-1/2"}

    def test_same_orientation(self, origami, fixture_path):
        result = origami(
            "compose",
            "connected-sum",
            fixture_path("triangle-template"),
            fixture_path("triangle-template"),
            "--vertex",
            "0,0",
            "--vertex2",
            "0,0",
        )

        assert result.exit_code == 1, result.output
        assert result.stderr.startswith("SameOrientation: ")

    def test_malformed_vertex(self, origami, fixture_path):
        result = origami(
            "compose",
            "connected-sum",
            fixture_path("triangle-template"),
            fixture_path("negative-triangle-template"),
            "--vertex",
            "0",
            "--vertex2",
            "0,0",
        )

        assert result.exit_code == 2, result.output
