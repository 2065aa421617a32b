# -*- coding: utf-8 -*-
"""Miura Bijection Module.

This module maps locally flat-foldable MV assignments of the m x n Miura-ori
to proper 3-colorings of the m x n grid graph with the upper-left vertex
colored 0, and back. Colors follow a zig-zag path through the grid faces;
each crease value is the color difference across it, up to a fixed sign.
"""

import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from origami_mv.crease_model import MVAssignment
from origami_mv.enumeration import count_mv, enumerate_mv, valid_at_every_vertex
from origami_mv.generators import MiuraPattern, gen_miura
from origami_mv.utils import BijectionError, ColoringError, PatternError

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]
GridEdge = Tuple[Cell, Cell]


class GridColoring(BaseModel):
    """An m x n array over Z3, indexed by (row, col)."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1, description="Grid rows.")
    n: int = Field(ge=1, description="Grid columns.")
    colors: Tuple[Tuple[int, ...], ...] = Field(description="Colors row by row, each in {0, 1, 2}.")

    @model_validator(mode="after")
    def _check_shape(self) -> "GridColoring":
        if len(self.colors) != self.m or any(len(row) != self.n for row in self.colors):
            raise ValueError(f"colors do not form a {self.m}x{self.n} grid")
        if any(value not in (0, 1, 2) for row in self.colors for value in row):
            raise ValueError("colors must be 0, 1 or 2")
        return self

    def __getitem__(self, cell: Cell) -> int:
        return self.colors[cell[0]][cell[1]]

    @classmethod
    def from_cells(cls, m: int, n: int, cells: Dict[Cell, int]) -> "GridColoring":
        return cls(m=m, n=n, colors=tuple(tuple(cells[(r, c)] for c in range(n)) for r in range(m)))

    def shifted(self, k: int) -> "GridColoring":
        """Add k to every color, mod 3."""
        return GridColoring(m=self.m, n=self.n,
                            colors=tuple(tuple((v + k) % 3 for v in row) for row in self.colors))


class ZigzagOrder(BaseModel):
    """The zig-zag walk through the grid and the edges it does not use."""
    model_config = ConfigDict(frozen=True)

    path: List[Cell] = Field(description="Grid vertices v_1..v_mn in walk order.")
    path_edges: List[GridEdge] = Field(description="Consecutive path vertex pairs c_2..c_mn.")
    off_path: List[GridEdge] = Field(description="Vertical grid edges (above, below) off the path.")


def grid_edges(m: int, n: int) -> List[GridEdge]:
    """Every grid edge oriented left to right or top to bottom, row by row."""
    edges = []
    for r in range(m):
        for c in range(1, n):
            edges.append(((r, c - 1), (r, c)))
        if r + 1 < m:
            for c in range(n):
                edges.append(((r, c), (r + 1, c)))
    return edges


def zigzag_order(m: int, n: int) -> ZigzagOrder:
    """
    Walk the grid across the top row, down one, back across the next row and so on.

    Args:
        m: Grid rows
        n: Grid columns

    Returns:
        The walk with its path edges and the vertical edges left over
    """
    if m < 1 or n < 1:
        raise ColoringError(f"grid dimensions must be positive, got {m}x{n}")

    path = []
    for r in range(m):
        columns = range(n) if r % 2 == 0 else range(n - 1, -1, -1)
        path.extend((r, c) for c in columns)

    path_edges = list(zip(path, path[1:]))
    on_path = {frozenset(edge) for edge in path_edges}
    off_path = [edge for edge in grid_edges(m, n)
                if edge[0][0] != edge[1][0] and frozenset(edge) not in on_path]
    return ZigzagOrder(path=path, path_edges=path_edges, off_path=off_path)


def crease_sign(edge: GridEdge) -> int:
    """
    Sign relating a crease value to the color difference across it.

    For an edge oriented left to right or top to bottom, the crease value is
    this sign times (color of head - color of tail) read as +1 or -1. Zig-zag
    creases in odd rows flip; straight creases never do.

    Args:
        edge: Oriented grid edge (tail, head)

    Returns:
        +1 or -1
    """
    (r1, _), (r2, _) = edge
    if r1 == r2:
        return -1 if r1 % 2 else 1
    return 1


def _oriented(a: Cell, b: Cell) -> GridEdge:
    return (a, b) if a <= b else (b, a)


def _step(value: int) -> int:
    """Read a Z3 difference of 1 or 2 as +1 or -1."""
    return {1: 1, 2: -1}[value % 3]


def is_proper(coloring: GridColoring) -> bool:
    """Whether adjacent cells differ and the upper-left cell is 0."""
    if coloring[(0, 0)] != 0:
        return False
    return all(coloring[a] != coloring[b] for a, b in grid_edges(coloring.m, coloring.n))


def mv_to_coloring(mp: MiuraPattern, mv: MVAssignment) -> GridColoring:
    """
    Color the grid faces of a Miura-ori from a valid MV assignment.

    The upper-left face gets 0 and each step of the zig-zag path adds the
    value of the crease it crosses, so c(v_i) = c(v_i-1) + mu(c_i) mod 3.

    Args:
        mp: Miura pattern from gen_miura
        mv: Locally flat-foldable total assignment on mp

    Returns:
        Proper coloring with c(0, 0) = 0

    Raises:
        PatternError: If mv is not total or not locally flat-foldable
        BijectionError: If the coloring fails its runtime checks
    """
    _require_left(mp)
    if not valid_at_every_vertex(mp.base, mv):
        raise PatternError("assignment is not locally flat-foldable on this Miura-ori")

    order = zigzag_order(mp.rows, mp.cols)
    cells: Dict[Cell, int] = {(0, 0): 0}
    for previous, current in order.path_edges:
        edge = _oriented(previous, current)
        difference = crease_sign(edge) * mv[mp.crease_for_edge(*edge)]
        if current == edge[1]:
            cells[current] = (cells[previous] + difference) % 3
        else:
            cells[current] = (cells[previous] - difference) % 3

    coloring = GridColoring.from_cells(mp.rows, mp.cols, cells)
    if not is_proper(coloring):
        raise BijectionError("zig-zag coloring is not proper")
    for edge in order.off_path:
        implied = crease_sign(edge) * _step(coloring[edge[1]] - coloring[edge[0]])
        if implied != mv[mp.crease_for_edge(*edge)]:
            raise BijectionError(f"off-path crease between {edge[0]} and {edge[1]} disagrees with the coloring")
    return coloring


def coloring_to_mv(
    m: int,
    n: int,
    coloring: GridColoring,
    mp: Optional[MiuraPattern] = None
) -> MVAssignment:
    """
    Recover the MV assignment of the m x n Miura-ori from a proper coloring.

    Every crease takes the color difference across it, head minus tail, as
    +1 or -1, times the crease sign.

    Args:
        m: Grid rows
        n: Grid columns
        coloring: Proper coloring with c(0, 0) = 0
        mp: Miura pattern to assign, defaults to gen_miura(m, n)

    Returns:
        Total assignment on the pattern's creases

    Raises:
        ColoringError: If the coloring has the wrong shape or is not proper
        BijectionError: If the assignment is not locally flat-foldable
    """
    if (coloring.m, coloring.n) != (m, n):
        raise ColoringError(f"coloring is {coloring.m}x{coloring.n}, expected {m}x{n}")
    if not is_proper(coloring):
        raise ColoringError("coloring is not proper with the upper-left cell colored 0")

    if mp is None:
        mp = gen_miura(m, n)
    if (mp.rows, mp.cols) != (m, n):
        raise ColoringError(f"Miura-ori is {mp.rows}x{mp.cols}, expected {m}x{n}")
    _require_left(mp)

    values = {}
    for edge in grid_edges(m, n):
        values[mp.crease_for_edge(*edge)] = crease_sign(edge) * _step(coloring[edge[1]] - coloring[edge[0]])
    mv = MVAssignment(assignment=values)

    if not valid_at_every_vertex(mp.base, mv):
        raise BijectionError("coloring maps to an assignment that is not locally flat-foldable")
    return mv


def count_miura_mv(m: int, n: int, method: str = "transfer") -> int:
    """
    Count the locally flat-foldable MV assignments of the m x n Miura-ori.

    Args:
        m: Parallelogram rows
        n: Parallelogram columns
        method: "transfer" or "brute" to count grid colorings, "enumerate"
            to search the crease pattern directly

    Returns:
        The count
    """
    from origami_mv.coloring_count import count_colorings_brute, count_colorings_transfer

    if method == "transfer":
        return count_colorings_transfer(m, n)
    if method == "brute":
        return count_colorings_brute(m, n)
    if method == "enumerate":
        return count_mv(gen_miura(m, n).base)
    raise ValueError(f"unknown method {method!r}")


def parse_digit_grid(text: str) -> GridColoring:
    """
    Parse a coloring written as one row of digits per line.

    Args:
        text: Rows of 0/1/2 characters, no separators

    Returns:
        The coloring (not checked for properness)

    Raises:
        ColoringError: On empty input, bad characters or ragged rows
    """
    rows: List[Tuple[int, ...]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if any(ch not in "012" for ch in line):
            raise ColoringError(f"line {number}: colors must be digits 0, 1 or 2")
        if rows and len(line) != len(rows[0]):
            raise ColoringError(f"line {number}: expected {len(rows[0])} digits, got {len(line)}")
        rows.append(tuple(int(ch) for ch in line))
    if not rows:
        raise ColoringError("empty coloring")
    try:
        return GridColoring(m=len(rows), n=len(rows[0]), colors=tuple(rows))
    except ValidationError as exc:
        raise ColoringError(str(exc)) from exc


def format_digit_grid(coloring: GridColoring) -> str:
    return "".join("".join(str(v) for v in row) + "\n" for row in coloring.colors)


def _require_left(mp: MiuraPattern) -> None:
    if mp.orientation != "left":
        raise BijectionError(f"Miura-ori orientation {mp.orientation!r} is not supported")


def example_usage():
    """Demonstrate the bijection on the 2 x 2 Miura-ori."""
    from origami_mv.local_rules import format_mv_tuple

    mp = gen_miura(2, 2)
    ids = mp.base.crease_ids
    print(f"2x2 Miura-ori: {len(ids)} creases, {len(mp.interior_vertices)} interior vertex")
    for mv in enumerate_mv(mp.base):
        coloring = mv_to_coloring(mp, mv)
        back = coloring_to_mv(2, 2, coloring, mp)
        grid = format_digit_grid(coloring).strip().replace("\n", "/")
        print(f"  {format_mv_tuple(mv.values_for(ids))} -> {grid}  round trip ok: {back == mv}")

    for size in range(1, 6):
        print(f"{size}x{size}: {count_miura_mv(size, size)} valid assignments")


if __name__ == "__main__":
    example_usage()
