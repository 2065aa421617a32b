# -*- coding: utf-8 -*-
"""Origami Line Graph Module.

This module builds the origami line graph of a crease pattern: one node per
crease, a direct edge for every pair of creases forced to differ and a
two-edge gadget path for every pair forced to agree. Proper 2-colorings of
the graph are the admissible MV patterns, so a non-bipartite graph proves a
pattern cannot fold flat, and a determined pattern has 2^components valid
assignments.
"""

import logging
from enum import Enum
from typing import Dict, List, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from origami_mv.crease_model import CreasePattern, vertex_star
from origami_mv.enumeration import count_mv
from origami_mv.local_rules import blb_pairs, degree4_forced_same
from origami_mv.utils import (
    MAX_DETERMINED_CREASES,
    NotFlatFoldableError,
    SizeLimitError,
    UnsupportedVertexError,
)

logger = logging.getLogger(__name__)

CreasePair = Tuple[int, int]
Node = Tuple


class ConstraintKind(str, Enum):
    """Whether a constraint forces two creases to agree or to differ."""
    SAME = "Same"
    DIFFERENT = "Different"


class Constraint(BaseModel):
    """One forced relation between two creases, with its provenance."""
    model_config = ConfigDict(frozen=True)

    pair: CreasePair = Field(description="Crease ids, smaller first.")
    kind: ConstraintKind = Field(description="Same or Different.")
    source: int = Field(description="Interior vertex id that forces the relation.")
    applied: bool = Field(
        default=True, description="False when an existing even path already implies it.")


class ParityUnionFind:
    """
    Union-find whose elements carry their parity relative to the set root.

    Merging two elements records whether they must differ, so asking whether
    two elements are joined by a path of even length is a find on each.
    """

    def __init__(self, elements=None):
        self.parent: Dict[int, int] = {}
        self.rank: Dict[int, int] = {}
        self.parity: Dict[int, int] = {}
        self.contradictions = 0

        if elements:
            for element in elements:
                self.add(element)

    def add(self, element: int) -> None:
        if element not in self.parent:
            self.parent[element] = element
            self.rank[element] = 0
            self.parity[element] = 0

    def find(self, element: int) -> Tuple[int, int]:
        """
        Find the root of an element and its parity relative to the root.

        Args:
            element: The element to look up

        Returns:
            (root, parity) with parity 0 for the root's class, 1 otherwise
        """
        self.add(element)
        path = []
        while self.parent[element] != element:
            path.append(element)
            element = self.parent[element]
        root = element

        # Path compression, folding parities down the chain
        accumulated = 0
        for node in reversed(path):
            accumulated ^= self.parity[node]
            self.parity[node] = accumulated
            self.parent[node] = root
        return root, accumulated

    def union(self, a: int, b: int, differ: bool) -> bool:
        """
        Record that a and b are equal (differ=False) or opposite (differ=True).

        Args:
            a: First element
            b: Second element
            differ: Whether the two must end in different classes

        Returns:
            False if the relation contradicts what is already known
        """
        root_a, parity_a = self.find(a)
        root_b, parity_b = self.find(b)
        wanted = 1 if differ else 0

        if root_a == root_b:
            if parity_a ^ parity_b != wanted:
                self.contradictions += 1
                return False
            return True

        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.parity[root_b] = parity_a ^ parity_b ^ wanted
        if self.rank[root_a] == self.rank[root_b]:
            self.rank[root_a] += 1
        return True

    def even_path(self, a: int, b: int) -> bool:
        """True if a and b are connected with equal parity."""
        root_a, parity_a = self.find(a)
        root_b, parity_b = self.find(b)
        return root_a == root_b and parity_a == parity_b


class OrigamiLineGraph:
    """
    The origami line graph of a crease pattern plus its constraint log.

    Crease nodes are ("crease", id) and gadget nodes ("gadget", i, j).
    """

    def __init__(self, crease_ids: List[int]):
        self.graph = nx.Graph()
        self.constraints: List[Constraint] = []
        self.undetermined_vertices: List[int] = []
        self._edges: List[Tuple[Node, Node]] = []
        self._gadgets: List[Node] = []

        for crease_id in sorted(crease_ids):
            self.graph.add_node(crease_node(crease_id))

    def add_different(self, pair: CreasePair) -> None:
        a, b = crease_node(pair[0]), crease_node(pair[1])
        if not self.graph.has_edge(a, b):
            self.graph.add_edge(a, b)
            self._edges.append((a, b))

    def add_gadget(self, pair: CreasePair) -> None:
        gadget = gadget_node(*pair)
        if gadget in self.graph:
            return
        self.graph.add_node(gadget)
        self._gadgets.append(gadget)
        for end in pair:
            self.graph.add_edge(crease_node(end), gadget)
            self._edges.append((crease_node(end), gadget))

    @property
    def crease_nodes(self) -> List[Node]:
        return [node for node in self.graph.nodes if node[0] == "crease"]

    @property
    def gadget_nodes(self) -> List[Node]:
        return list(self._gadgets)

    @property
    def edges(self) -> List[Tuple[Node, Node]]:
        """Edges in the order they were added."""
        return list(self._edges)

    @property
    def skipped(self) -> List[Constraint]:
        return [c for c in self.constraints if not c.applied]

    def summary(self) -> Dict[str, object]:
        colorable = two_colorable(self)
        return {
            "crease_nodes": len(self.crease_nodes),
            "gadget_nodes": len(self._gadgets),
            "edges": len(self._edges),
            "components": component_count(self),
            "two_colorable": str(colorable).lower(),
            "skipped_gadgets": len(self.skipped),
        }


def crease_node(crease_id: int) -> Node:
    return ("crease", crease_id)


def gadget_node(i: int, j: int) -> Node:
    return ("gadget", i, j)


def build_line_graph(pattern: CreasePattern, skip_even_paths: bool = True) -> OrigamiLineGraph:
    """
    Build the origami line graph of a pattern.

    Different pairs from every vertex are added first as direct edges, then
    Same pairs as gadget paths, vertices by ascending id and pairs by
    ascending crease ids. A Same pair whose creases are already joined by an
    even path gets no gadget; a Same pair joined by an odd path still gets
    one, so the contradiction shows up in `two_colorable`.

    Args:
        pattern: Crease pattern whose interior vertices all have degree 4
        skip_even_paths: Apply the even-path rule (disable to compare graphs)

    Returns:
        The line graph with its constraint log

    Raises:
        UnsupportedVertexError: If an interior vertex does not have degree 4
    """
    stars = []
    for vertex in pattern.interior_vertices():
        degree = pattern.degree(vertex.id)
        if degree != 4:
            raise UnsupportedVertexError(
                f"vertex {vertex.id} has degree {degree}; the line graph needs degree 4")
        stars.append(vertex_star(pattern, vertex.id))

    lg = OrigamiLineGraph(pattern.crease_ids)
    parity = ParityUnionFind(pattern.crease_ids)

    for star in stars:
        pairs = sorted(blb_pairs(star))
        if not pairs:
            lg.undetermined_vertices.append(star.vertex)
        for pair in pairs:
            lg.constraints.append(Constraint(pair=pair, kind=ConstraintKind.DIFFERENT, source=star.vertex))
            lg.add_different(pair)
            parity.union(*pair, differ=True)

    for star in stars:
        for pair in sorted(degree4_forced_same(star)):
            if skip_even_paths and parity.even_path(*pair):
                logger.debug("vertex %d: creases %s already joined by an even path", star.vertex, pair)
                lg.constraints.append(Constraint(
                    pair=pair, kind=ConstraintKind.SAME, source=star.vertex, applied=False))
                continue
            lg.constraints.append(Constraint(pair=pair, kind=ConstraintKind.SAME, source=star.vertex))
            lg.add_gadget(pair)
            parity.union(*pair, differ=False)

    if parity.contradictions:
        logger.debug("%d constraints contradict earlier parity", parity.contradictions)
    logger.debug("line graph: %d nodes, %d edges, %d skipped gadgets",
                 lg.graph.number_of_nodes(), len(lg.edges), len(lg.skipped))
    return lg


def two_colorable(lg: OrigamiLineGraph) -> bool:
    """Whether the line graph is bipartite."""
    return nx.is_bipartite(lg.graph)


def component_count(lg: OrigamiLineGraph) -> int:
    """Connected components, isolated crease nodes included."""
    return nx.number_connected_components(lg.graph)


def count_mv_by_components(lg: OrigamiLineGraph) -> int:
    """
    Count MV assignments as 2 to the number of components.

    Args:
        lg: A 2-colorable origami line graph

    Returns:
        2 ** component_count(lg)

    Raises:
        NotFlatFoldableError: If the graph is not 2-colorable
    """
    if not two_colorable(lg):
        raise NotFlatFoldableError("origami line graph is not 2-colorable; the pattern cannot fold flat")
    if lg.undetermined_vertices:
        logger.warning(
            "vertices %s have no Big-Little-Big pair; the line graph does not capture their "
            "restrictions and the count is only an upper bound", lg.undetermined_vertices)
    return 2 ** component_count(lg)


def determined_check(pattern: CreasePattern) -> bool:
    """
    Certify that the line graph determines a pattern's valid assignments.

    Args:
        pattern: Crease pattern with at most MAX_DETERMINED_CREASES creases

    Returns:
        True iff exhaustive enumeration agrees with the component count (or
        with 0 when the line graph is not 2-colorable)

    Raises:
        SizeLimitError: If the pattern is too large for exhaustive enumeration
    """

    if len(pattern.creases) > MAX_DETERMINED_CREASES:
        raise SizeLimitError(
            f"{len(pattern.creases)} creases exceed the determinedness bound of {MAX_DETERMINED_CREASES}")

    lg = build_line_graph(pattern)
    expected = 2 ** component_count(lg) if two_colorable(lg) else 0
    actual = count_mv(pattern)
    logger.debug("determined check: enumeration %d, line graph %d", actual, expected)
    return actual == expected


def square_twist_count_formula(m: int, n: int) -> int:
    """Closed-form count 2^(2mn+m+n) for the m x n square twist tessellation."""
    return 2 ** (2 * m * n + m + n)


def to_dot(lg: OrigamiLineGraph) -> str:
    """
    Render the line graph as DOT text.

    Args:
        lg: The line graph

    Returns:
        An undirected DOT graph with crease nodes labelled by id and gadget
        nodes labelled g<i>_<j>
    """
    lines = ["graph origami_line_graph {"]
    for node in lg.crease_nodes:
        lines.append(f'  {_dot_id(node)} [label="{node[1]}"];')
    for node in lg.gadget_nodes:
        lines.append(f'  {_dot_id(node)} [label="{_dot_id(node)}", shape=point];')
    for a, b in lg.edges:
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(node: Node) -> str:
    if node[0] == "crease":
        return f"c{node[1]}"
    return f"g{node[1]}_{node[2]}"


def example_usage():
    """Demonstrate the square twist count on small tessellations."""
    from origami_mv.generators import gen_square_twist

    for m, n in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]:
        twist = gen_square_twist(m, n)
        lg = build_line_graph(twist.base)
        components = component_count(lg)
        count = count_mv_by_components(lg)

        print(f"S({m},{n}): {len(twist.base.creases)} creases, {components} components, "
              f"2-colorable={two_colorable(lg)}")
        print(f"  count {count} (formula {square_twist_count_formula(m, n)})")


if __name__ == "__main__":
    example_usage()
