# -*- coding: utf-8 -*-
"""Local Rules Module.

This module holds the single-vertex machinery: Maekawa's count, the
Big-Little-Big pairs, the degree-4 classification with its valid-assignment
sets, and a brute-force layer-ordering oracle that checks any degree-4
assignment by searching for a consistent stacking of the folded sectors.
"""

import itertools
import logging
from enum import Enum
from typing import FrozenSet, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from origami_mv.crease_model import VertexStar
from origami_mv.utils import (
    ANGLE_TOLERANCE,
    FULL_TURN_UNITS,
    UnsupportedVertexError,
    VertexClassificationError,
    snap_angle,
)

logger = logging.getLogger(__name__)

CreasePair = Tuple[int, int]
MVTuple = Tuple[int, ...]

# Alternating sums this close to zero count as flat
_KAWASAKI_SLACK = snap_angle(ANGLE_TOLERANCE)


class Degree4Variant(str, Enum):
    """Kinds of degree-4 angle sequences, by their smallest angles."""
    UNIQUE_MIN = "UniqueMin"
    DOUBLE_MIN = "DoubleMin"
    ALL_EQUAL = "AllEqual"


class Degree4Class(BaseModel):
    """
    Classification of a flat-foldable degree-4 vertex.

    For UniqueMin, `index` is the position of the strictly smallest angle
    (between creases `index` and `index + 1`). For DoubleMin it is the star
    position of the e4 crease, the one between the two obtuse angles. It is
    None for AllEqual.
    """
    model_config = ConfigDict(frozen=True)

    variant: Degree4Variant = Field(description="Which class the angle sequence falls in.")
    index: Optional[int] = Field(
        default=None, ge=0, le=3, description="Minimal-angle position or e4 crease position.")

    def __str__(self) -> str:
        if self.index is None:
            return self.variant.value
        return f"{self.variant.value}({self.index})"


def maekawa_ok(values: Sequence[int]) -> bool:
    """Mountains minus valleys is +2 or -2."""
    return sum(values) in (2, -2)


def blb_pairs(star: VertexStar) -> FrozenSet[CreasePair]:
    """
    Crease pairs forced to differ by the Big-Little-Big rule.

    Args:
        star: Vertex star of any degree

    Returns:
        The pairs {l_i, l_i+1} whose angle a_i is strictly smaller than both
        neighbouring angles, each pair as (smaller id, larger id)
    """
    units = star.angle_units
    n = len(units)
    pairs = set()
    for i in range(n):
        if units[i - 1] > units[i] < units[(i + 1) % n]:
            pairs.add(_pair(star.creases[i], star.creases[(i + 1) % n]))
    return frozenset(pairs)


def degree4_forced_same(star: VertexStar) -> FrozenSet[CreasePair]:
    """
    Crease pairs a degree-4 vertex forces to agree.

    When the Big-Little-Big rule pins exactly one pair, that pair adds zero to
    Maekawa's sum, so the remaining two creases must carry the same value.

    Args:
        star: Degree-4 vertex star

    Returns:
        The complementary pair, or the empty set when there is not exactly
        one Big-Little-Big pair

    Raises:
        UnsupportedVertexError: If the degree is not 4
    """
    _require_degree4(star)
    units = star.angle_units
    positions = [i for i in range(4) if units[i - 1] > units[i] < units[(i + 1) % 4]]
    if len(positions) != 1:
        return frozenset()
    i = positions[0]
    return frozenset({_pair(star.creases[(i + 2) % 4], star.creases[(i + 3) % 4])})


def classify_degree4(star: VertexStar) -> Degree4Class:
    """
    Classify a degree-4 vertex by its smallest angles.

    Args:
        star: Degree-4 vertex star

    Returns:
        UniqueMin(minimal angle position), DoubleMin(e4 crease position) or AllEqual

    Raises:
        UnsupportedVertexError: If the degree is not 4
        VertexClassificationError: If the angles cannot fold flat
    """
    _require_degree4(star)
    units = star.angle_units
    alternating = units[0] - units[1] + units[2] - units[3]
    if abs(alternating) > _KAWASAKI_SLACK:
        raise VertexClassificationError(
            f"vertex {star.vertex}: angles {star.angles} have nonzero alternating sum")

    smallest = min(units)
    minima = [i for i, u in enumerate(units) if u == smallest]

    if len(minima) == 1:
        return Degree4Class(variant=Degree4Variant.UNIQUE_MIN, index=minima[0])
    if len(minima) == 4:
        return Degree4Class(variant=Degree4Variant.ALL_EQUAL)
    if len(minima) == 2:
        first, second = minima
        if second - first == 1:
            return Degree4Class(variant=Degree4Variant.DOUBLE_MIN, index=(first + 3) % 4)
        if (first, second) == (0, 3):
            return Degree4Class(variant=Degree4Variant.DOUBLE_MIN, index=2)
        raise VertexClassificationError(
            f"vertex {star.vertex}: equal minimal angles at positions {first} and {second} are not adjacent")
    raise VertexClassificationError(
        f"vertex {star.vertex}: three equal minimal angles in {star.angles}")


def maekawa_tuples(degree: int = 4) -> List[MVTuple]:
    """All +-1 tuples of a given length satisfying Maekawa, in lexicographic order."""
    return [t for t in itertools.product((-1, 1), repeat=degree) if maekawa_ok(t)]


def sole_minority(values: Sequence[int]) -> Optional[int]:
    """Position of the crease outvoted by all others, if there is exactly one."""
    for sign in (-1, 1):
        positions = [i for i, v in enumerate(values) if v == sign]
        if len(positions) == 1 and len(values) > 2:
            return positions[0]
    return None


def vertex_valid_assignments(star: VertexStar) -> FrozenSet[MVTuple]:
    """
    The locally flat-foldable assignments of a degree-4 vertex.

    Tuples are indexed by star position, so entry k belongs to
    `star.creases[k]`.

    Args:
        star: Degree-4 vertex star

    Returns:
        4 tuples for UniqueMin, 6 for DoubleMin, 8 for AllEqual

    Raises:
        UnsupportedVertexError: If the degree is not 4
        VertexClassificationError: If the angles cannot fold flat
    """
    vertex_class = classify_degree4(star)
    tuples = maekawa_tuples(4)

    if vertex_class.variant == Degree4Variant.UNIQUE_MIN:
        allowed = {vertex_class.index, (vertex_class.index + 1) % 4}
        return frozenset(t for t in tuples if sole_minority(t) in allowed)
    if vertex_class.variant == Degree4Variant.DOUBLE_MIN:
        return frozenset(t for t in tuples if sole_minority(t) != vertex_class.index)
    return frozenset(tuples)


def layer_oracle(star: VertexStar, mv: Sequence[int]) -> bool:
    """
    Decide by exhaustive stacking search whether a degree-4 vertex folds flat.

    The sectors are laid on a circle with alternating orientation, each crease
    folding to the accumulated image of the angles before it. A stacking of
    the four sectors is accepted when every crease's two sectors are adjacent
    among the sectors passing its bend point, bends at one image on one side
    are nested or disjoint, and each crease turns the way `mv` says.

    Args:
        star: Degree-4 vertex star
        mv: Values in star position order, +1 mountain and -1 valley

    Returns:
        True iff some stacking satisfies all three conditions

    Raises:
        UnsupportedVertexError: If the degree is not 4
    """
    _require_degree4(star)
    if len(mv) != 4 or any(v not in (-1, 1) for v in mv):
        raise ValueError("mv must be four values of +1 or -1")

    units = star.angle_units
    n = len(units)
    orientation = [1 if i % 2 == 0 else -1 for i in range(n)]

    images = [0]
    for i in range(n):
        images.append(images[-1] + orientation[i] * units[i])
    if abs(images[n]) > _KAWASAKI_SLACK:
        return False
    images = [p % FULL_TURN_UNITS for p in images[:n]]

    arcs = []
    for i in range(n):
        start = images[i] if orientation[i] == 1 else images[(i + 1) % n]
        arcs.append((start, units[i]))

    # Crease k joins sector k-1 and sector k; both lie on side orientation[k]
    creases = [(k, (k - 1) % n, k, images[k], orientation[k]) for k in range(n)]
    witnesses = []
    for k, before, after, image, side in creases:
        covering = [j for j in range(n)
                    if j not in (before, after) and _covers(arcs[j], image, -side)]
        witnesses.append((before, after, covering))

    for order in itertools.permutations(range(n)):
        level = {sector: height for height, sector in enumerate(order)}

        if not all((level[k] < level[(k - 1) % n]) == (mv[k] * orientation[(k - 1) % n] == 1)
                   for k in range(n)):
            continue

        if any(_between(level[j], level[before], level[after])
               for before, after, covering in witnesses for j in covering):
            continue

        if _bends_interleave(creases, level):
            continue
        return True
    return False


def oracle_valid_assignments(star: VertexStar) -> FrozenSet[MVTuple]:
    """All tuples accepted by `layer_oracle`, searched over the 16 candidates."""
    return frozenset(t for t in itertools.product((-1, 1), repeat=4) if layer_oracle(star, t))


def _covers(arc: Tuple[int, int], point: int, offset_sign: int) -> bool:
    """Whether a sector arc contains the point just beyond `point` in direction `offset_sign`."""
    start, length = arc
    distance = (point - start) % FULL_TURN_UNITS
    if offset_sign < 0:
        return 0 < distance <= length
    return 0 <= distance < length


def _between(value: int, a: int, b: int) -> bool:
    return min(a, b) < value < max(a, b)


def _bends_interleave(creases, level) -> bool:
    for (_, b1, a1, p1, s1), (_, b2, a2, p2, s2) in itertools.combinations(creases, 2):
        if p1 != p2 or s1 != s2:
            continue
        lo1, hi1 = sorted((level[b1], level[a1]))
        lo2, hi2 = sorted((level[b2], level[a2]))
        if lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1:
            return True
    return False


def _pair(a: int, b: int) -> CreasePair:
    return (a, b) if a < b else (b, a)


def _require_degree4(star: VertexStar) -> None:
    if star.degree != 4:
        raise UnsupportedVertexError(
            f"vertex {star.vertex} has degree {star.degree}; only degree 4 is supported")


def format_mv_tuple(values: Sequence[int]) -> str:
    """Render a tuple as a string of M and V letters."""
    return "".join("M" if v == 1 else "V" for v in values)


def example_usage():
    """Demonstrate the single-vertex rules on the three degree-4 classes."""
    from origami_mv.example_data import sample_vertex_angles

    for name, angles in sample_vertex_angles.items():
        star = VertexStar.from_angles(angles)
        vertex_class = classify_degree4(star)
        valid = sorted(vertex_valid_assignments(star))
        oracle = oracle_valid_assignments(star)

        print(f"{name}: angles {angles} -> {vertex_class}")
        print(f"  Big-Little-Big pairs: {sorted(blb_pairs(star))}")
        print(f"  forced same pairs: {sorted(degree4_forced_same(star))}")
        print(f"  valid assignments ({len(valid)}): "
              + " ".join(format_mv_tuple(t) for t in valid))
        print(f"  layer oracle agrees: {oracle == frozenset(valid)}")


if __name__ == "__main__":
    example_usage()
