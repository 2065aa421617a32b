# -*- coding: utf-8 -*-
"""Enumeration Module.

This module counts and lists the locally flat-foldable MV assignments of a
crease pattern by exhaustive backtracking. It is the independent oracle every
formula-based count in the package is checked against.
"""

import itertools
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from origami_mv.crease_model import CreasePattern, MVAssignment, vertex_star
from origami_mv.local_rules import MVTuple, vertex_valid_assignments
from origami_mv.utils import (
    MAX_ENUMERATION_CREASES,
    PatternError,
    SizeLimitError,
    UnsupportedVertexError,
)

logger = logging.getLogger(__name__)


class EnumerationResult(BaseModel):
    """Count of valid assignments, with the assignments when materialized."""
    count: int = Field(ge=0, description="Number of valid assignments.")
    assignments: Optional[List[MVAssignment]] = Field(
        default=None, description="Valid assignments in lexicographic order, if requested.")
    crease_order: List[int] = Field(
        default_factory=list, description="Crease ids in search order, ascending.")


class _VertexConstraint:
    """The creases of one interior vertex in star order and their valid tuples."""

    def __init__(self, vertex: int, creases: Tuple[int, ...], valid: frozenset):
        self.vertex = vertex
        self.creases = creases
        self.valid = valid
        self.last = max(creases)

    def allows(self, values: Dict[int, int], partial: bool) -> bool:
        if not partial:
            if any(c not in values for c in self.creases):
                return True
            return tuple(values[c] for c in self.creases) in self.valid
        fixed = [(p, values[c]) for p, c in enumerate(self.creases) if c in values]
        return any(all(t[p] == v for p, v in fixed) for t in self.valid)


class MVSearch:
    """
    Backtracking search over a pattern's creases in ascending id order.

    Valleys are tried before mountains, so results come out in lexicographic
    order with -1 < +1. A vertex is checked as soon as all its creases are set;
    with `prune` it is also checked after every partial assignment.
    """

    def __init__(self, pattern: CreasePattern, prune: bool = True):
        if len(pattern.creases) > MAX_ENUMERATION_CREASES:
            raise SizeLimitError(
                f"{len(pattern.creases)} creases exceed the enumeration bound of {MAX_ENUMERATION_CREASES}")

        self.pattern = pattern
        self.prune = prune
        self.order: List[int] = pattern.crease_ids
        self.constraints: List[_VertexConstraint] = []
        self.touching: Dict[int, List[_VertexConstraint]] = {c: [] for c in self.order}

        for vertex in pattern.interior_vertices():
            degree = pattern.degree(vertex.id)
            if degree != 4:
                raise UnsupportedVertexError(
                    f"vertex {vertex.id} has degree {degree}; enumeration needs degree 4")
            star = vertex_star(pattern, vertex.id)
            constraint = _VertexConstraint(vertex.id, star.creases, vertex_valid_assignments(star))
            self.constraints.append(constraint)
            for crease_id in star.creases:
                self.touching[crease_id].append(constraint)

        self.free = {c for c, touched in self.touching.items() if not touched}
        self.visited = 0

    def _prefix_map(self, prefix: Optional[Sequence[int]]) -> Dict[int, int]:
        if prefix is None:
            return {}
        if len(prefix) > len(self.order) or any(v not in (-1, 1) for v in prefix):
            raise PatternError("prefix must be at most one +1/-1 value per crease")
        return dict(zip(self.order, prefix))

    def _consistent(self, crease_id: int, values: Dict[int, int]) -> bool:
        for constraint in self.touching[crease_id]:
            if self.prune or constraint.last == crease_id:
                if not constraint.allows(values, partial=self.prune):
                    return False
        return True

    def count(self, prefix: Optional[Sequence[int]] = None) -> int:
        """
        Count valid assignments, optionally under a fixed prefix.

        Creases that touch no interior vertex contribute a factor of 2 each
        instead of being branched on.

        Args:
            prefix: Values for the first creases of the search order

        Returns:
            Number of valid total assignments extending the prefix
        """
        fixed = self._prefix_map(prefix)
        values: Dict[int, int] = {}
        self.visited = 0

        def descend(index: int) -> int:
            if index == len(self.order):
                return 1
            crease_id = self.order[index]
            if crease_id in self.free and crease_id not in fixed:
                return 2 * descend(index + 1)

            total = 0
            for value in ((fixed[crease_id],) if crease_id in fixed else (-1, 1)):
                self.visited += 1
                values[crease_id] = value
                if self._consistent(crease_id, values):
                    total += descend(index + 1)
                del values[crease_id]
            return total

        result = descend(0)
        logger.debug("counted %d assignments over %d creases, %d nodes visited",
                     result, len(self.order), self.visited)
        return result

    def assignments(self, prefix: Optional[Sequence[int]] = None) -> Iterator[MVAssignment]:
        """Yield every valid assignment extending the prefix, lexicographically."""
        fixed = self._prefix_map(prefix)
        values: Dict[int, int] = {}

        def descend(index: int) -> Iterator[MVAssignment]:
            if index == len(self.order):
                yield MVAssignment(assignment=dict(values))
                return
            crease_id = self.order[index]
            for value in ((fixed[crease_id],) if crease_id in fixed else (-1, 1)):
                values[crease_id] = value
                if self._consistent(crease_id, values):
                    yield from descend(index + 1)
                del values[crease_id]

        return descend(0)


def count_mv(pattern: CreasePattern, prune: bool = True) -> int:
    """
    Count the locally flat-foldable MV assignments of a pattern.

    Args:
        pattern: Crease pattern whose interior vertices all have degree 4
        prune: Reject partial assignments early

    Returns:
        The number of valid total assignments

    Raises:
        SizeLimitError: If the pattern has more than MAX_ENUMERATION_CREASES creases
        UnsupportedVertexError: If an interior vertex does not have degree 4
    """
    return MVSearch(pattern, prune=prune).count()


def enumerate_mv(
    pattern: CreasePattern,
    limit: Optional[int] = None,
    prune: bool = True
) -> Iterator[MVAssignment]:
    """
    Stream the valid MV assignments of a pattern in lexicographic order.

    Errors are raised on the call, before the first assignment is produced.

    Args:
        pattern: Crease pattern whose interior vertices all have degree 4
        limit: Stop after this many assignments
        prune: Reject partial assignments early

    Returns:
        Iterator over the assignments

    Raises:
        SizeLimitError: If the pattern has more than MAX_ENUMERATION_CREASES creases
        UnsupportedVertexError: If an interior vertex does not have degree 4
    """
    if limit is not None and limit < 0:
        raise ValueError("limit must not be negative")
    stream = MVSearch(pattern, prune=prune).assignments()
    if limit is None:
        return stream
    return itertools.islice(stream, limit)


def solve(pattern: CreasePattern, materialize: bool = False, prune: bool = True) -> EnumerationResult:
    """Run the search once, keeping the assignments when asked to."""
    search = MVSearch(pattern, prune=prune)
    if materialize:
        found = list(search.assignments())
        return EnumerationResult(count=len(found), assignments=found, crease_order=search.order)
    return EnumerationResult(count=search.count(), crease_order=search.order)


def valid_at_every_vertex(pattern: CreasePattern, mv: MVAssignment) -> bool:
    """
    Check a total assignment against the valid set of every interior vertex.

    Args:
        pattern: Crease pattern whose interior vertices all have degree 4
        mv: Total assignment on the pattern's creases

    Returns:
        True iff every interior vertex restriction is a valid tuple
    """
    pattern.check_assignment(mv)
    for vertex in pattern.interior_vertices():
        star = vertex_star(pattern, vertex.id)
        restriction: MVTuple = mv.values_for(star.creases)
        if restriction not in vertex_valid_assignments(star):
            return False
    return True


def format_assignment_block(pattern: CreasePattern, mv: MVAssignment) -> str:
    """One CPT-style edge line per crease, as written by `enumerate --out`."""
    letters = {1: "M", -1: "V"}
    return "".join(f"{c.id} {c.v1} {c.v2} {letters[mv[c.id]]}\n" for c in pattern.creases)
