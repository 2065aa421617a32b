# -*- coding: utf-8 -*-
"""Pattern Generators Module.

This module builds the two parametric crease-pattern families counted by the
package: the m x n Miura-ori, dual to the m x n grid graph, and the m x n
square twist tessellation with mirrored neighbouring twists.
"""

import logging
import math
from typing import Dict, List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field

from origami_mv.crease_model import Crease, CreasePattern, Vertex, VertexKind
from origami_mv.utils import PatternError

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]
Point = Tuple[float, float]

# Square twist lattice pitch; each twist is a diamond of half-diagonal 1
TWIST_PITCH = 4
TWIST_MARGIN = 2

_DIAMOND = {"A": (0, -1), "B": (1, 0), "C": (0, 1), "D": (-1, 0)}
_CENTRAL_SIDES = (("A", "B"), ("B", "C"), ("C", "D"), ("D", "A"))


class MiuraPattern(BaseModel):
    """
    Schema for an m x n Miura-ori crease pattern and its grid-graph duality.

    Grid vertex (r, c) is the parallelogram in row r (top row 0), column c.
    `zigzag_creases[(r, c)]` is the crease between faces (r, c-1) and (r, c);
    `straight_creases[(r, c)]` is the crease between faces (r-1, c) and (r, c).
    """
    model_config = ConfigDict(frozen=True)

    base: CreasePattern = Field(description="The crease pattern.")
    rows: int = Field(ge=1, description="Number of parallelogram rows m.")
    cols: int = Field(ge=1, description="Number of parallelogram columns n.")
    alpha: float = Field(gt=0, lt=90, description="Acute parallelogram angle in degrees.")
    orientation: Literal["left"] = Field(
        default="left", description="Direction the top-row interior vertices point.")
    zigzag_creases: Dict[Cell, int] = Field(
        description="Horizontal grid edge (r, c-1)-(r, c) to crease id.")
    straight_creases: Dict[Cell, int] = Field(
        description="Vertical grid edge (r-1, c)-(r, c) to crease id.")
    interior_vertices: Dict[Cell, int] = Field(
        description="Zig-zag line k and straight line r to interior vertex id.")

    def crease_for_edge(self, a: Cell, b: Cell) -> int:
        """
        Crease dual to a grid-graph edge.

        Args:
            a: One grid vertex (row, col)
            b: A grid-adjacent vertex

        Returns:
            The crease id separating the two faces
        """
        (r1, c1), (r2, c2) = sorted((a, b))
        if r1 == r2 and c2 == c1 + 1 and (r1, c2) in self.zigzag_creases:
            return self.zigzag_creases[(r1, c2)]
        if c1 == c2 and r2 == r1 + 1 and (r2, c1) in self.straight_creases:
            return self.straight_creases[(r2, c1)]
        raise PatternError(f"grid cells {a} and {b} are not adjacent in a {self.rows}x{self.cols} grid")

    def face_corners(self, row: int, col: int) -> List[Point]:
        """Corners of the parallelogram face at (row, col), counterclockwise from top-left."""
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise PatternError(f"no face ({row}, {col}) in a {self.rows}x{self.cols} Miura-ori")
        delta = miura_offset(self.alpha)
        top_left = _miura_point(col, row, self.rows, delta)
        bottom_left = _miura_point(col, row + 1, self.rows, delta)
        bottom_right = _miura_point(col + 1, row + 1, self.rows, delta)
        top_right = _miura_point(col + 1, row, self.rows, delta)
        return [top_left, bottom_left, bottom_right, top_right]

    def metadata(self) -> Dict[str, object]:
        return {
            "family": "miura",
            "rows": self.rows,
            "cols": self.cols,
            "alpha": format(self.alpha, "g"),
            "orientation": self.orientation,
            "creases": len(self.base.creases),
            "interior_vertices": len(self.interior_vertices),
        }


class SquareTwistPattern(BaseModel):
    """Schema for an m x n square twist tessellation S(m, n)."""
    model_config = ConfigDict(frozen=True)

    base: CreasePattern = Field(description="The crease pattern.")
    rows: int = Field(ge=1, description="Number of twist rows m.")
    cols: int = Field(ge=1, description="Number of twist columns n.")
    unit_creases: Dict[Cell, List[int]] = Field(
        description="Per twist: 4 central-square creases then its 8 pleat creases.")
    mirrored: Dict[Cell, bool] = Field(
        description="Whether the twist at (row, col) is the mirror image of the base twist.")

    def twist_vertices(self) -> List[int]:
        """Ids of the 4mn twist corners, unit by unit."""
        return list(range(4 * self.rows * self.cols))

    def metadata(self) -> Dict[str, object]:
        return {
            "family": "square-twist",
            "rows": self.rows,
            "cols": self.cols,
            "pitch": TWIST_PITCH,
            "creases": len(self.base.creases),
            "twist_vertices": 4 * self.rows * self.cols,
        }


def miura_offset(alpha: float) -> float:
    """Horizontal zig-zag offset that makes the parallelogram's acute angle alpha."""
    return round(1.0 / math.tan(math.radians(alpha)), 10)


def _miura_point(k: int, r: int, rows: int, delta: float) -> Point:
    """Point where zig-zag line k meets straight line r (line 0 on top)."""
    x = k + (delta if r % 2 == 0 else 0.0)
    return (round(x, 10) + 0.0, float(rows - r))


def gen_miura(m: int, n: int, alpha: float = 60.0) -> MiuraPattern:
    """
    Generate the m x n Miura-ori.

    Straight creases are horizontal with row height 1; zig-zag lines shift by
    cot(alpha) on even straight lines, so top-row interior vertices point left.

    Args:
        m: Parallelogram rows
        n: Parallelogram columns
        alpha: Acute angle in degrees

    Returns:
        The Miura pattern with its grid-graph maps

    Raises:
        PatternError: If a dimension is not positive or alpha is not acute
    """
    if m < 1 or n < 1:
        raise PatternError(f"Miura-ori dimensions must be positive, got {m}x{n}")
    if not 0 < alpha < 90:
        raise PatternError(f"Miura-ori angle must lie strictly between 0 and 90, got {alpha}")

    delta = miura_offset(alpha)

    segments: List[Tuple[Cell, Cell, str, Cell]] = []
    for r in range(m):
        for k in range(1, n):
            segments.append(((k, r), (k, r + 1), "zigzag", (r, k)))
        if r + 1 < m:
            for k in range(n):
                segments.append(((k, r + 1), (k + 1, r + 1), "straight", (r + 1, k)))

    endpoints = sorted({p for a, b, _, _ in segments for p in (a, b)}, key=lambda p: (p[1], p[0]))
    vertex_ids = {p: i for i, p in enumerate(endpoints)}

    vertices = []
    interior = {}
    for (k, r), vid in vertex_ids.items():
        is_interior = 1 <= k <= n - 1 and 1 <= r <= m - 1
        x, y = _miura_point(k, r, m, delta)
        vertices.append(Vertex(
            id=vid, x=x, y=y, kind=VertexKind.INTERIOR if is_interior else VertexKind.BOUNDARY))
        if is_interior:
            interior[(k, r)] = vid

    creases = []
    zigzag = {}
    straight = {}
    for cid, (a, b, family, cell) in enumerate(segments):
        creases.append(Crease(id=cid, v1=vertex_ids[a], v2=vertex_ids[b]))
        (zigzag if family == "zigzag" else straight)[cell] = cid

    pattern = CreasePattern.build(vertices, creases)
    logger.debug("generated %dx%d Miura-ori: %d creases, %d interior vertices",
                 m, n, len(creases), len(interior))
    return MiuraPattern(
        base=pattern,
        rows=m,
        cols=n,
        alpha=alpha,
        zigzag_creases=zigzag,
        straight_creases=straight,
        interior_vertices=interior,
    )


def _twist_corner(r: int, c: int, label: str) -> Tuple[int, int]:
    dx, dy = _DIAMOND[label]
    if (r + c) % 2:
        dx = -dx
    return (c * TWIST_PITCH + dx, r * TWIST_PITCH + dy)


def _pleat_sources(r: int, c: int, direction: str) -> List[Tuple[int, int]]:
    """Corners a twist sends pleats from in one direction, as points."""
    mirrored = (r + c) % 2 == 1
    labels = {
        "right": ("D", "C") if mirrored else ("A", "B"),
        "left": ("A", "B") if mirrored else ("D", "C"),
        "up": ("C", "B"),
        "down": ("D", "A"),
    }[direction]
    return [_twist_corner(r, c, label) for label in labels]


def gen_square_twist(m: int, n: int) -> SquareTwistPattern:
    """
    Generate the m x n square twist tessellation.

    Twists sit on a lattice of pitch 4 with the twist at (row, col) mirrored
    when row + col is odd, so the two creases of every pleat meet the facing
    corners of the neighbouring twist. Outer pleats run to the bounding
    rectangle.

    Args:
        m: Twist rows
        n: Twist columns

    Returns:
        The tessellation with its per-twist crease lists

    Raises:
        PatternError: If a dimension is not positive
    """
    if m < 1 or n < 1:
        raise PatternError(f"square twist dimensions must be positive, got {m}x{n}")

    low = -TWIST_MARGIN
    right_edge = (n - 1) * TWIST_PITCH + TWIST_MARGIN
    top_edge = (m - 1) * TWIST_PITCH + TWIST_MARGIN

    points: Dict[Tuple[int, int], int] = {}
    kinds: Dict[int, VertexKind] = {}

    def vertex_at(point: Tuple[int, int], kind: VertexKind) -> int:
        if point not in points:
            points[point] = len(points)
            kinds[points[point]] = kind
        return points[point]

    units = [(r, c) for r in range(m) for c in range(n)]
    for r, c in units:
        for label in "ABCD":
            vertex_at(_twist_corner(r, c, label), VertexKind.INTERIOR)

    segments: List[Tuple[int, int]] = []
    unit_creases: Dict[Cell, List[int]] = {cell: [] for cell in units}

    def add_crease(a: Tuple[int, int], b: Tuple[int, int], owners: List[Cell]) -> None:
        segments.append((points[a], vertex_at(b, VertexKind.BOUNDARY)))
        for owner in owners:
            unit_creases[owner].append(len(segments) - 1)

    for r, c in units:
        for s, t in _CENTRAL_SIDES:
            add_crease(_twist_corner(r, c, s), _twist_corner(r, c, t), [(r, c)])

    # Horizontal pleats, row by row, gap c sits left of twist c
    for r in range(m):
        for c in range(n + 1):
            if c == 0:
                for x, y in sorted(_pleat_sources(r, 0, "left"), key=lambda p: p[1]):
                    add_crease((x, y), (low, y), [(r, 0)])
            elif c == n:
                for x, y in sorted(_pleat_sources(r, n - 1, "right"), key=lambda p: p[1]):
                    add_crease((x, y), (right_edge, y), [(r, n - 1)])
            else:
                ends = {p[1]: p for p in _pleat_sources(r, c, "left")}
                for start in sorted(_pleat_sources(r, c - 1, "right"), key=lambda p: p[1]):
                    add_crease(start, ends[start[1]], [(r, c - 1), (r, c)])

    # Vertical pleats, column by column, gap r sits below twist r
    for c in range(n):
        for r in range(m + 1):
            if r == 0:
                for x, y in sorted(_pleat_sources(0, c, "down")):
                    add_crease((x, y), (x, low), [(0, c)])
            elif r == m:
                for x, y in sorted(_pleat_sources(m - 1, c, "up")):
                    add_crease((x, y), (x, top_edge), [(m - 1, c)])
            else:
                ends = {p[0]: p for p in _pleat_sources(r, c, "down")}
                for start in sorted(_pleat_sources(r - 1, c, "up")):
                    add_crease(start, ends[start[0]], [(r - 1, c), (r, c)])

    vertices = [
        Vertex(id=vid, x=float(x), y=float(y), kind=kinds[vid]) for (x, y), vid in points.items()
    ]
    creases = [Crease(id=cid, v1=a, v2=b) for cid, (a, b) in enumerate(segments)]
    pattern = CreasePattern.build(vertices, creases)

    logger.debug("generated S(%d,%d): %d creases, %d vertices", m, n, len(creases), len(vertices))
    return SquareTwistPattern(
        base=pattern,
        rows=m,
        cols=n,
        unit_creases=unit_creases,
        mirrored={(r, c): (r + c) % 2 == 1 for r, c in units},
    )
