# -*- coding: utf-8 -*-
"""SVG rendering for crease patterns.

Mountains are drawn thick, valleys thin and unassigned creases thin and
dashed; vertices are small dots.
"""

import xml.etree.ElementTree as ET
from typing import Optional

from origami_mv.crease_model import MOUNTAIN, CreasePattern, MVAssignment

SVG_NS = "http://www.w3.org/2000/svg"
ET.register_namespace("", SVG_NS)

SCALE = 40.0
MARGIN = 10.0
VERTEX_RADIUS = 1.5

STYLE = (
    ".mountain { stroke: #000000; stroke-width: 2.0; }\n"
    ".valley { stroke: #000000; stroke-width: 0.8; }\n"
    ".unassigned { stroke: #000000; stroke-width: 0.8; stroke-dasharray: 4 3; }\n"
    ".vertex { fill: #000000; }\n"
)


def _q(tag: str) -> str:
    return f"{{{SVG_NS}}}{tag}"


def _fmt(value: float) -> str:
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def crease_class(mv: Optional[MVAssignment], crease_id: int) -> str:
    if mv is None or crease_id not in mv:
        return "unassigned"
    return "mountain" if mv[crease_id] == MOUNTAIN else "valley"


def render_svg(pattern: CreasePattern, mv: Optional[MVAssignment] = None) -> str:
    """
    Draw a crease pattern as SVG 1.1.

    Args:
        pattern: The crease pattern
        mv: Optional, possibly partial, assignment

    Returns:
        SVG document text with one line element per crease, in crease id order
    """
    if mv is not None:
        pattern.check_assignment(mv, total=False)

    xs = [v.x for v in pattern.vertices] or [0.0]
    ys = [v.y for v in pattern.vertices] or [0.0]
    min_x, max_y = min(xs), max(ys)
    width = (max(xs) - min_x) * SCALE + 2 * MARGIN
    height = (max_y - min(ys)) * SCALE + 2 * MARGIN

    def to_screen(x: float, y: float):
        # SVG y grows downward
        return (x - min_x) * SCALE + MARGIN, (max_y - y) * SCALE + MARGIN

    root = ET.Element(_q("svg"), {
        "version": "1.1",
        "width": _fmt(width),
        "height": _fmt(height),
        "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
    })
    style = ET.SubElement(root, _q("style"), {"type": "text/css"})
    style.text = STYLE

    creases = ET.SubElement(root, _q("g"), {"id": "creases"})
    for crease in pattern.creases:
        a = pattern.vertex(crease.v1)
        b = pattern.vertex(crease.v2)
        x1, y1 = to_screen(a.x, a.y)
        x2, y2 = to_screen(b.x, b.y)
        ET.SubElement(creases, _q("line"), {
            "class": crease_class(mv, crease.id),
            "x1": _fmt(x1), "y1": _fmt(y1), "x2": _fmt(x2), "y2": _fmt(y2),
        })

    vertices = ET.SubElement(root, _q("g"), {"id": "vertices"})
    for vertex in pattern.vertices:
        cx, cy = to_screen(vertex.x, vertex.y)
        ET.SubElement(vertices, _q("circle"), {
            "class": "vertex", "cx": _fmt(cx), "cy": _fmt(cy), "r": _fmt(VERTEX_RADIUS),
        })

    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"
