# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

import pytest

from origami.errors import ChamberNotPresent, DimensionMismatch, EdgeNotPresent
from origami.fans import MultiFan, WeightedChamber, canonical, disjoint_union
from origami.fans.model import fresh_label


class TestBuild:
    def test_faces_closed_under_subsets(self, cp2):
        assert len(cp2.faces) == 7
        assert frozenset() in cp2.faces
        assert frozenset({"a"}) in cp2.faces
        assert frozenset({"a", "b"}) in cp2.faces

    def test_extra_faces(self):
        mf = MultiFan.build(3, {"x": (1, 0, 0), "y": (0, 1, 0)}, faces=[["x", "y"]])

        assert mf.faces == {frozenset(), frozenset({"x"}), frozenset({"y"}), frozenset({"x", "y"})}
        assert mf.chambers == ()

    def test_vectors_are_tuples(self):
        mf = MultiFan.build(2, {"x": [1, 0]})

        assert mf.edges == {"x": (1, 0)}


class TestLookup:
    def test_vector(self, cp2):
        assert cp2.vector("c") == (-1, -1)

    def test_missing_edge(self, cp2):
        with pytest.raises(EdgeNotPresent, match="Edge `z` is not part of the multi-fan"):
            cp2.vector("z")

    def test_chamber(self, cp2):
        assert cp2.chamber("bc").labels == {"b", "c"}

    def test_missing_chamber(self, cp2):
        with pytest.raises(ChamberNotPresent):
            cp2.chamber("zz")

    def test_cone_is_sorted(self, cp2):
        assert cp2.cone(["a", "c"]) == ((-1, -1), (1, 0))

    def test_faces_containing(self, cp2):
        assert cp2.faces_containing(["a"]) == [frozenset({"a"}), frozenset({"a", "b"}), frozenset({"a", "c"})]

    def test_chambers_containing(self, cp2):
        assert sorted(c.id for c in cp2.chambers_containing(["b"])) == ["ab", "bc"]


class TestWeightedChamber:
    def test_defaults(self):
        chamber = WeightedChamber("c", frozenset({"a", "b"}))

        assert chamber.weight == (1, 0)
        assert chamber.net == 1

    def test_swapped(self):
        chamber = WeightedChamber("c", frozenset({"a", "b"}), 2, 1).swapped()

        assert chamber.weight == (1, 2)
        assert chamber.net == -1


class TestRelabel:
    def test_rename(self, cp2):
        renamed = cp2.relabel(str.upper, lambda chamber_id: f"x{chamber_id}")

        assert renamed.edges == {"A": (1, 0), "B": (0, 1), "C": (-1, -1)}
        assert renamed.chamber("xab").labels == {"A", "B"}
        assert frozenset({"B", "C"}) in renamed.faces

    def test_merge_conflicting_vectors(self, cp2):
        with pytest.raises(ValueError, match="Cannot merge edge"):
            cp2.relabel(lambda _: "x")


@pytest.mark.parametrize(
    ("existing", "expected"),
    [
        pytest.param([], "a", id="free"),
        pytest.param(["a"], "a.2", id="taken"),
        pytest.param(["a", "a.2"], "a.3", id="suffix taken"),
    ],
)
def test_fresh_label(existing, expected):
    assert fresh_label(existing, "a") == expected


class TestDisjointUnion:
    def test_renames_collisions(self, cp2):
        union, renamed = disjoint_union(cp2, cp2)

        assert renamed == {"a": "a.2", "b": "b.2", "c": "c.2"}
        assert len(union.edges) == 6
        assert sorted(c.id for c in union.chambers) == ["ab", "ab.2", "bc", "bc.2", "ca", "ca.2"]
        assert union.chamber("ab.2").labels == {"a.2", "b.2"}

    def test_dimension_mismatch(self, cp2):
        line = MultiFan.build(1, {"p": (1,)})

        with pytest.raises(DimensionMismatch):
            disjoint_union(cp2, line)


class TestCanonical:
    def test_labels(self, cp2):
        result = canonical(cp2)

        assert result.edges == {"e1": (-1, -1), "e2": (0, 1), "e3": (1, 0)}
        assert [(c.id, c.labels) for c in result.chambers] == [
            ("c1", {"e1", "e2"}),
            ("c2", {"e1", "e3"}),
            ("c3", {"e2", "e3"}),
        ]

    def test_independent_of_labels(self, cp2):
        renamed = cp2.relabel(str.upper, lambda chamber_id: chamber_id[::-1])

        assert canonical(renamed) == canonical(cp2)
