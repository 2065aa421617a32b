# -*- coding: utf-8 -*-
"""Example data for origami MV counting.

This module provides sample angle sequences, documents and colorings for
testing and demonstrating the package, and a builder for one-vertex crease
patterns.
"""

import math
from typing import Sequence

from origami_mv.crease_model import Crease, CreasePattern, Vertex, VertexKind, VertexStar

# One flat-foldable angle sequence per degree-4 class
sample_vertex_angles = {
    "square twist vertex": (45.0, 90.0, 135.0, 90.0),
    "Miura vertex": (60.0, 60.0, 120.0, 120.0),
    "grid vertex": (90.0, 90.0, 90.0, 90.0),
}

# Smallest well-formed CPT document: one mountain crease
sample_single_crease_cpt = """\
CPT 1
vertices 2
0 0 0 B
1 1 0 B
edges 1
0 0 1 M
"""

# A 2x2 Miura-ori proper coloring, rows top to bottom
sample_miura_coloring = "01\n12\n"


def single_vertex_pattern(angles: Sequence[float]) -> CreasePattern:
    """
    Build a crease pattern with one interior vertex and the given angles.

    The center sits at the origin and crease k runs to a boundary vertex on
    the unit circle at the direction sum(angles[:k]), so crease ids match
    star positions.

    Args:
        angles: Angle sequence in degrees, summing to 360

    Returns:
        Pattern with vertex 0 interior and vertices 1..n on the boundary
    """
    VertexStar.from_angles(angles)

    vertices = [Vertex(id=0, x=0.0, y=0.0, kind=VertexKind.INTERIOR)]
    creases = []
    direction = 0.0
    for k, angle in enumerate(angles):
        radians = math.radians(direction)
        vertices.append(Vertex(
            id=k + 1,
            x=round(math.cos(radians), 10) + 0.0,
            y=round(math.sin(radians), 10) + 0.0,
            kind=VertexKind.BOUNDARY,
        ))
        creases.append(Crease(id=k, v1=0, v2=k + 1))
        direction += angle
    return CreasePattern.build(vertices, creases)
