# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
"""
SVG pictures of 2-dimensional multi-fans, polytopes and templates.

Chambers are hatched sectors: weight on the positive side is drawn in black at 45 degrees, weight on
the negative side in red at 135 degrees. Template polytopes are filled according to their orientation
and folded facets are drawn as thick orange segments. Output only depends on the input.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import drawsvg as draw

from origami.errors import DimensionMismatch
from origami.fans.model import MultiFan
from origami.polytopes import DelzantPolytope
from origami.templates.model import OrigamiTemplate, TemplatePiece
from origami.unimodular.realization import RealizationCertificate
from origami.unimodular.sequence import UnimodularSequence

if TYPE_CHECKING:
    from collections.abc import Sequence

    from origami.lattice import LatticeVector, RationalVector

PANEL = 400
MARGIN = 30
HATCH_SPACING = 8

POSITIVE = "#000000"
NEGATIVE = "#c0392b"
FOLD = "#e67e22"
FILLS = {1: "#aed6f1", -1: "#f5b7b1", None: "#d5d8dc"}

Point = tuple[float, float]


def render_svg(obj: MultiFan | DelzantPolytope | OrigamiTemplate | UnimodularSequence | RealizationCertificate) -> str:
    """
    Templates are drawn next to their multi-fan when they are oriented.
    """
    from origami.templates.multifan import multifan_of_template
    from origami.templates.validation import classify
    from origami.unimodular.sequence import multifan_of_sequence

    if isinstance(obj, RealizationCertificate):
        obj = obj.template
    elif isinstance(obj, UnimodularSequence):
        obj = multifan_of_sequence(obj)

    dim = obj.dim
    if dim != 2:
        message = f"Only 2-dimensional objects can be rendered, got dimension {dim}"
        raise DimensionMismatch(message)

    if isinstance(obj, MultiFan):
        drawing = draw.Drawing(PANEL, PANEL)
        _background(drawing, PANEL)
        _draw_fan(drawing, obj, (PANEL / 2, PANEL / 2))
    elif isinstance(obj, DelzantPolytope):
        drawing = draw.Drawing(PANEL, PANEL)
        _background(drawing, PANEL)
        _draw_template(drawing, OrigamiTemplate((TemplatePiece(obj, 1),)))
    else:
        oriented = classify(obj).oriented
        width = 2 * PANEL if oriented else PANEL
        drawing = draw.Drawing(width, PANEL)
        _background(drawing, width)
        _draw_template(drawing, obj)
        if oriented:
            _draw_fan(drawing, multifan_of_template(obj), (PANEL * 1.5, PANEL / 2))

    return drawing.as_svg()


def _background(drawing: draw.Drawing, width: float) -> None:
    drawing.append(draw.Rectangle(0, 0, width, PANEL, fill="#ffffff"))


def _draw_fan(drawing: draw.Drawing, mf: MultiFan, center: Point) -> None:
    cx, cy = center
    radius = PANEL / 2 - MARGIN

    def tip(vector: LatticeVector, length: float = radius) -> Point:
        norm = math.hypot(*vector)
        return _round(cx + length * vector[0] / norm), _round(cy - length * vector[1] / norm)

    drawable = [c for c in mf.chambers if len(c.labels) == 2 and all(any(v) for v in mf.cone(c.labels))]
    for chamber in sorted(drawable, key=lambda c: (mf.cone(c.labels), c.weight, c.id)):
        first, second = mf.cone(chamber.labels)
        sector = [(cx, cy), tip(first), tip(second)]
        for weight, color, angle in ((chamber.w_plus, POSITIVE, 45), (chamber.w_minus, NEGATIVE, 135)):
            if not weight:
                continue

            for start, end in _hatch(sector, angle):
                drawing.append(draw.Line(*start, *end, stroke=color, stroke_width=0.8, stroke_opacity=0.6))

        middle = tuple(a + b for a, b in zip(_unit(first), _unit(second), strict=True))
        if any(abs(x) > 1e-9 for x in middle):
            x, y = tip(middle, radius * 0.6)  # type: ignore[arg-type]
            drawing.append(
                draw.Text(
                    _weight_label(chamber.w_plus, chamber.w_minus), 12, x, y, text_anchor="middle", fill=POSITIVE
                )
            )

    for label in sorted(mf.edges, key=lambda label: (mf.edges[label], label)):
        vector = mf.edges[label]
        if not any(vector):
            continue

        end = tip(vector)
        drawing.append(draw.Line(cx, cy, *end, stroke=POSITIVE, stroke_width=2))
        _arrowhead(drawing, end, math.atan2(-vector[1], vector[0]))
        x, y = tip(vector, radius + 14)
        drawing.append(draw.Text(f"{label} {list(vector)}", 10, x, y, text_anchor="middle", fill=POSITIVE))


def _draw_template(drawing: draw.Drawing, template: OrigamiTemplate) -> None:
    outlines = [_outline(piece.polytope) for piece in template.pieces]
    points = [p for outline in outlines for p in outline]
    low = [min(float(p[i]) for p in points) for i in range(2)]
    high = [max(float(p[i]) for p in points) for i in range(2)]
    extent = max(high[0] - low[0], high[1] - low[1]) or 1.0
    scale = (PANEL - 2 * MARGIN) / extent

    def place(p: RationalVector) -> Point:
        x = MARGIN + (float(p[0]) - low[0]) * scale
        y = PANEL - MARGIN - (float(p[1]) - low[1]) * scale
        return _round(x), _round(y)

    for index, (piece, outline) in enumerate(zip(template.pieces, outlines, strict=True)):
        coordinates = [c for p in outline for c in place(p)]
        drawing.append(
            draw.Lines(
                *coordinates,
                close=True,
                fill=FILLS[piece.orientation],
                fill_opacity=0.5,
                stroke=POSITIVE,
                stroke_width=1,
            )
        )
        x = sum(coordinates[0::2]) / len(outline)
        y = sum(coordinates[1::2]) / len(outline)
        sign = {1: "+", -1: "-", None: ""}[piece.orientation]
        drawing.append(draw.Text(f"P{index}{sign}", 12, _round(x), _round(y), text_anchor="middle", fill=POSITIVE))

    for ref in sorted(template.folded()):
        polytope = template.polytope(ref.polytope)
        ends = sorted(polytope.vertices[k].point for k in polytope.facet_vertices(ref.facet))
        if len(ends) == 2:
            drawing.append(draw.Line(*place(ends[0]), *place(ends[1]), stroke=FOLD, stroke_width=4))


def _outline(polytope: DelzantPolytope) -> list[RationalVector]:
    """
    Vertices in boundary order, walking from vertex to vertex along shared facets.
    """
    vertices = polytope.vertices
    order = [0]
    while len(order) < len(vertices):
        current = vertices[order[-1]]
        candidates = (k for k, vertex in enumerate(vertices) if k not in order and vertex.facets & current.facets)
        following = next(candidates, None)
        if following is None:
            break

        order.append(following)

    return [vertices[k].point for k in order]


def _hatch(polygon: Sequence[Point], angle: float) -> list[tuple[Point, Point]]:
    """
    Parallel segments at the given angle, clipped to a convex polygon.
    """
    direction = (math.cos(math.radians(angle)), -math.sin(math.radians(angle)))
    normal = (-direction[1], direction[0])
    levels = [p[0] * normal[0] + p[1] * normal[1] for p in polygon]
    segments = []
    level = math.ceil(min(levels) / HATCH_SPACING) * HATCH_SPACING
    while level <= max(levels):
        crossings = []
        edges = zip(polygon, (*polygon[1:], polygon[0]), levels, (*levels[1:], levels[0]), strict=True)
        for (x1, y1), (x2, y2), a, b in edges:
            if a == b or not min(a, b) <= level <= max(a, b):
                continue

            t = (level - a) / (b - a)
            crossings.append((x1 + t * (x2 - x1), y1 + t * (y2 - y1)))

        if len(crossings) >= 2:
            crossings.sort()
            start, end = crossings[0], crossings[-1]
            segments.append(((_round(start[0]), _round(start[1])), (_round(end[0]), _round(end[1]))))

        level += HATCH_SPACING

    return segments


def _arrowhead(drawing: draw.Drawing, point: Point, angle: float, size: float = 9) -> None:
    x, y = point
    corners = [
        (x - size * math.cos(angle - math.pi / 6), y - size * math.sin(angle - math.pi / 6)),
        (x - size * math.cos(angle + math.pi / 6), y - size * math.sin(angle + math.pi / 6)),
    ]
    coordinates = [x, y, *(_round(c) for corner in corners for c in corner)]
    drawing.append(draw.Lines(*coordinates, close=True, fill=POSITIVE, stroke="none"))


def _weight_label(w_plus: int, w_minus: int) -> str:
    return " ".join(part for part in (f"+{w_plus}" if w_plus else "", f"-{w_minus}" if w_minus else "") if part)


def _unit(vector: LatticeVector) -> Point:
    norm = math.hypot(*vector)
    return vector[0] / norm, vector[1] / norm


def _round(value: float) -> float:
    return round(value, 3)
