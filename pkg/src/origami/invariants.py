# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
"""
Fundamental group bounds for the manifold of an origami template.

The lattice quotient N/N_Δ and the free group of the orbit space bound π₁ from above: there is an
epimorphism (N/N_Δ) × F_{b1} -> π₁. Only the simply connected case and the coorientable case with a
fixed point (where π₁ is exactly F_{b1}) are reported as exact.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Literal

from msgspec import Struct

from origami.lattice import AbelianGroupSNF, IntegerMatrix, hermite_basis, quotient_group

if TYPE_CHECKING:
    from origami.fans.model import MultiFan
    from origami.lattice import LatticeVector
    from origami.templates.model import OrigamiTemplate


class Pi1Report(Struct, frozen=True, forbid_unknown_fields=True):
    orbit_free_rank: int
    n_delta_rank: int
    n_delta_quotient: AbelianGroupSNF
    simply_connected: bool | Literal["unknown"]
    free_group_exact: bool
    structure_note: str
    bound_only: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()


def n_delta(mf: MultiFan) -> tuple[IntegerMatrix, AbelianGroupSNF]:
    """
    Basis of the sublattice spanned by the edge vectors and the structure of the quotient N/N_Δ.
    """
    return _n_delta(list(mf.edges.values()), mf.dim)


def pi1_report(template: OrigamiTemplate) -> Pi1Report:
    from origami.templates.multifan import multifan_of_template
    from origami.templates.validation import classify, count_fixed_points, template_graph

    b1 = template_graph(template).b1
    kind = classify(template)
    if kind.oriented:
        generators = list(multifan_of_template(template).edges.values())
    else:
        generators = [
            piece.polytope.facets[j].normal
            for i, piece in enumerate(template.pieces)
            for j in range(len(piece.polytope.facets))
            if j not in template.folded_in(i)
        ]

    basis, quotient = _n_delta(generators, template.dim)
    fixed_points = count_fixed_points(template)
    notes = []
    if basis.cols < template.dim - 1:
        notes.append(f"N_Δ has rank {basis.cols}, below n - 1 = {template.dim - 1}")

    simply_connected: bool | Literal["unknown"]
    if kind.cooriented:
        simply_connected = b1 == 0
        free_group_exact = fixed_points > 0
        if kind.acyclic:
            notes.append("acyclic and coorientable: the odd cohomology vanishes")
    else:
        simply_connected = "unknown"
        free_group_exact = False
        notes.append("not coorientable: an acyclic template does not force simple connectivity")

    if simply_connected is True:
        note = "π₁ is trivial"
    elif free_group_exact:
        note = f"π₁ ≅ F_{b1} (free group of rank {b1})"
    else:
        note = f"π₁ is a quotient of ({quotient}) × F_{b1}"
        if kind.oriented and b1 > 0:
            note += "; being non-trivial it is a cyclic group times a non-trivial free group"

    return Pi1Report(
        orbit_free_rank=b1,
        n_delta_rank=basis.cols,
        n_delta_quotient=quotient,
        simply_connected=simply_connected,
        free_group_exact=free_group_exact,
        structure_note=note,
        bound_only=() if simply_connected is True or free_group_exact else ("structure_note",),
        notes=tuple(notes),
    )


def _n_delta(generators: list[LatticeVector], dim: int) -> tuple[IntegerMatrix, AbelianGroupSNF]:
    return hermite_basis(generators, dim), quotient_group(generators, dim)
