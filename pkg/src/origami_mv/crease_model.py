# -*- coding: utf-8 -*-
"""Crease Pattern Model Module.

This module holds the core data model: crease patterns as planar straight-line
graphs, mountain-valley assignments, the vertex stars derived from the pattern
geometry, local angle validation and the CPT v1 interchange format.
"""

import logging
import math
from decimal import Decimal
from enum import Enum
from typing import Dict, Iterable, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationError, model_validator

from origami_mv.utils import (
    ANGLE_TOLERANCE,
    FULL_TURN_UNITS,
    CptParseError,
    PatternError,
    UnsupportedVertexError,
    direction_units,
    snap_angle,
    units_to_degrees,
)

logger = logging.getLogger(__name__)

MOUNTAIN = 1
VALLEY = -1

CreasePair = Tuple[int, int]


class VertexKind(str, Enum):
    """Whether a vertex lies on the paper boundary or in its interior."""
    BOUNDARY = "B"
    INTERIOR = "I"


class Vertex(BaseModel):
    """Schema for a crease pattern vertex."""
    model_config = ConfigDict(frozen=True)

    id: int = Field(ge=0, description="Vertex id, 0-based.")
    x: float = Field(allow_inf_nan=False, description="Horizontal coordinate.")
    y: float = Field(allow_inf_nan=False, description="Vertical coordinate.")
    kind: VertexKind = Field(description="Boundary or interior vertex.")


class Crease(BaseModel):
    """Schema for a straight crease segment between two vertices."""
    model_config = ConfigDict(frozen=True)

    id: int = Field(ge=0, description="Crease id, 0-based.")
    v1: int = Field(ge=0, description="First endpoint vertex id.")
    v2: int = Field(ge=0, description="Second endpoint vertex id.")

    @property
    def endpoints(self) -> Tuple[int, int]:
        return (self.v1, self.v2)

    def other(self, vertex: int) -> int:
        """Return the endpoint opposite to `vertex`."""
        if vertex == self.v1:
            return self.v2
        if vertex == self.v2:
            return self.v1
        raise PatternError(f"crease {self.id} does not touch vertex {vertex}")


class CreasePattern(BaseModel):
    """
    Planar straight-line graph of vertices and crease segments.

    Vertices and creases are kept sorted by id. The geometric invariant that
    creases meet only at shared endpoints is checked by `crossings()` and
    reported by `validate`, not on construction.
    """
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[Vertex, ...] = Field(
        default=(), description="Vertices sorted by id.")
    creases: Tuple[Crease, ...] = Field(
        default=(), description="Creases sorted by id.")

    _vertex_index: Dict[int, Vertex] = PrivateAttr(default_factory=dict)
    _crease_index: Dict[int, Crease] = PrivateAttr(default_factory=dict)
    _incidence: Dict[int, List[int]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def _sort_by_id(cls, data):
        if isinstance(data, dict):
            data = dict(data)
            for key in ("vertices", "creases"):
                items = data.get(key)
                if items is not None:
                    data[key] = tuple(sorted(
                        items, key=lambda item: item["id"] if isinstance(item, dict) else item.id))
        return data

    @model_validator(mode="after")
    def _check_references(self) -> "CreasePattern":
        vertex_ids = [v.id for v in self.vertices]
        if len(set(vertex_ids)) != len(vertex_ids):
            raise ValueError("duplicate vertex ids")
        crease_ids = [c.id for c in self.creases]
        if len(set(crease_ids)) != len(crease_ids):
            raise ValueError("duplicate crease ids")

        known = set(vertex_ids)
        seen_pairs = set()
        for crease in self.creases:
            for endpoint in crease.endpoints:
                if endpoint not in known:
                    raise ValueError(
                        f"crease {crease.id} references unknown vertex {endpoint}")
            if crease.v1 == crease.v2:
                raise ValueError(f"crease {crease.id} is a self-loop")
            pair = frozenset(crease.endpoints)
            if pair in seen_pairs:
                raise ValueError(f"crease {crease.id} duplicates another crease")
            seen_pairs.add(pair)
        return self

    def model_post_init(self, __context) -> None:
        self._vertex_index = {v.id: v for v in self.vertices}
        self._crease_index = {c.id: c for c in self.creases}
        incidence: Dict[int, List[int]] = {v.id: [] for v in self.vertices}
        for crease in self.creases:
            incidence[crease.v1].append(crease.id)
            incidence[crease.v2].append(crease.id)
        self._incidence = incidence

    @classmethod
    def build(cls, vertices: Iterable[Vertex], creases: Iterable[Crease]) -> "CreasePattern":
        """
        Construct a pattern, converting validation failures to PatternError.

        Args:
            vertices: Vertex records
            creases: Crease records

        Returns:
            The validated pattern
        """
        try:
            return cls(vertices=tuple(vertices), creases=tuple(creases))
        except ValidationError as exc:
            raise PatternError(_first_error(exc)) from exc

    def vertex(self, vertex_id: int) -> Vertex:
        try:
            return self._vertex_index[vertex_id]
        except KeyError:
            raise PatternError(f"unknown vertex {vertex_id}") from None

    def crease(self, crease_id: int) -> Crease:
        try:
            return self._crease_index[crease_id]
        except KeyError:
            raise PatternError(f"unknown crease {crease_id}") from None

    @property
    def crease_ids(self) -> List[int]:
        return [c.id for c in self.creases]

    def interior_vertices(self) -> List[Vertex]:
        return [v for v in self.vertices if v.kind == VertexKind.INTERIOR]

    def incident_creases(self, vertex_id: int) -> List[int]:
        """Crease ids touching a vertex, ascending."""
        self.vertex(vertex_id)
        return sorted(self._incidence[vertex_id])

    def degree(self, vertex_id: int) -> int:
        return len(self.incident_creases(vertex_id))

    def crossings(self) -> List[CreasePair]:
        """
        Find crease pairs that meet anywhere other than a shared endpoint.

        Returns:
            Sorted list of (crease id, crease id) pairs violating planarity
        """
        segments = []
        for crease in self.creases:
            a = self._vertex_index[crease.v1]
            b = self._vertex_index[crease.v2]
            segments.append((crease, (a.x, a.y), (b.x, b.y)))

        found = []
        for i, (c1, p1, p2) in enumerate(segments):
            for c2, q1, q2 in segments[i + 1:]:
                if max(p1[0], p2[0]) < min(q1[0], q2[0]) or max(q1[0], q2[0]) < min(p1[0], p2[0]):
                    continue
                if max(p1[1], p2[1]) < min(q1[1], q2[1]) or max(q1[1], q2[1]) < min(p1[1], p2[1]):
                    continue
                shared = set(c1.endpoints) & set(c2.endpoints)
                if _segments_conflict(p1, p2, q1, q2, bool(shared)):
                    found.append((c1.id, c2.id))
        return found

    def check_assignment(self, mv: "MVAssignment", total: bool = True) -> None:
        """
        Verify an assignment refers to this pattern's creases.

        Args:
            mv: The assignment to check
            total: Also require every crease to be assigned

        Raises:
            PatternError: If the assignment names unknown creases or is partial
        """
        unknown = sorted(set(mv.assignment) - set(self._crease_index))
        if unknown:
            raise PatternError(f"assignment references unknown crease {unknown[0]}")
        if total:
            missing = sorted(set(self._crease_index) - set(mv.assignment))
            if missing:
                raise PatternError(f"assignment leaves crease {missing[0]} unassigned")


class MVAssignment(BaseModel):
    """Mapping from crease id to +1 (mountain) or -1 (valley)."""
    model_config = ConfigDict(frozen=True)

    assignment: Dict[int, Literal[-1, 1]] = Field(
        default_factory=dict, description="Crease id to mountain (+1) / valley (-1).")

    def __getitem__(self, crease_id: int) -> int:
        return self.assignment[crease_id]

    def __contains__(self, crease_id: int) -> bool:
        return crease_id in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def values_for(self, crease_ids: Sequence[int]) -> Tuple[int, ...]:
        """Values of the given creases, in the given order."""
        return tuple(self.assignment[c] for c in crease_ids)

    def negated(self) -> "MVAssignment":
        return MVAssignment(assignment={c: -v for c, v in self.assignment.items()})

    def sort_key(self) -> Tuple[int, ...]:
        """Lexicographic key by ascending crease id, valley before mountain."""
        return tuple(self.assignment[c] for c in sorted(self.assignment))

    @classmethod
    def from_values(cls, crease_ids: Sequence[int], values: Sequence[int]) -> "MVAssignment":
        return cls(assignment=dict(zip(crease_ids, values)))


class VertexStar(BaseModel):
    """
    The cyclically ordered creases and angle sequence around one vertex.

    `angles[i]` is the angle between `creases[i]` and `creases[i + 1]`
    (indices mod degree), counterclockwise.
    """
    model_config = ConfigDict(frozen=True)

    vertex: int = Field(description="Vertex id.")
    creases: Tuple[int, ...] = Field(description="Crease ids counterclockwise.")
    angles: Tuple[float, ...] = Field(description="Angle sequence in degrees.")

    @model_validator(mode="after")
    def _check_angles(self) -> "VertexStar":
        if len(self.creases) != len(self.angles):
            raise ValueError("creases and angles differ in length")
        if len(self.creases) < 2:
            raise ValueError("a star needs at least two creases")
        if not all(math.isfinite(a) for a in self.angles):
            raise ValueError("star angles must be finite")
        if any(snap_angle(a) <= 0 for a in self.angles):
            raise ValueError("star angles must be positive")
        if abs(sum(self.angles) - 360.0) > ANGLE_TOLERANCE * len(self.angles):
            raise ValueError(f"star angles sum to {sum(self.angles)}, not 360")
        return self

    @property
    def degree(self) -> int:
        return len(self.creases)

    @property
    def angle_units(self) -> Tuple[int, ...]:
        """Angles on the snapping lattice, for exact comparisons."""
        return tuple(snap_angle(a) for a in self.angles)

    @classmethod
    def from_angles(
        cls,
        angles: Sequence[float],
        creases: Optional[Sequence[int]] = None,
        vertex: int = 0
    ) -> "VertexStar":
        """
        Build a star straight from an angle sequence.

        Args:
            angles: Angle sequence in degrees
            creases: Crease ids, defaults to 0..degree-1
            vertex: Vertex id recorded on the star

        Returns:
            The validated star
        """
        crease_ids = tuple(creases) if creases is not None else tuple(range(len(angles)))
        try:
            return cls(vertex=vertex, creases=crease_ids, angles=tuple(float(a) for a in angles))
        except ValidationError as exc:
            raise PatternError(_first_error(exc)) from exc


class VertexCheck(BaseModel):
    """Local angle checks for one interior vertex."""
    vertex: int = Field(description="Vertex id.")
    degree: int = Field(description="Number of incident creases.")
    even_degree: bool = Field(description="Whether the degree is even.")
    angle_sum: Optional[float] = Field(
        default=None, description="Sum of the star angles in degrees.")
    angle_sum_deviation: Optional[float] = Field(
        default=None, description="Absolute deviation of the angle sum from 360.")
    alternating_sum: Optional[float] = Field(
        default=None, description="a1 - a2 + ... - an for even degree.")
    alternating_ok: Optional[bool] = Field(
        default=None, description="Whether the alternating sum is 0 within tolerance.")


class ValidationReport(BaseModel):
    """Result of validating a crease pattern."""
    vertices: List[VertexCheck] = Field(default_factory=list)
    crossings: List[CreasePair] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    errors: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.warnings and not self.errors


def vertex_star(pattern: CreasePattern, vertex: int) -> VertexStar:
    """
    Derive the star of an interior vertex from the pattern geometry.

    Args:
        pattern: The crease pattern
        vertex: Interior vertex id

    Returns:
        The star, creases sorted counterclockwise starting from the smallest
        direction angle

    Raises:
        UnsupportedVertexError: If the vertex is on the boundary or has degree < 2
        PatternError: If two creases leave the vertex in the same direction
    """
    center = pattern.vertex(vertex)
    if center.kind != VertexKind.INTERIOR:
        raise UnsupportedVertexError(f"vertex {vertex} is a boundary vertex")

    incident = pattern.incident_creases(vertex)
    if len(incident) < 2:
        raise UnsupportedVertexError(
            f"vertex {vertex} has degree {len(incident)}; stars need at least 2")

    rays = []
    for crease_id in incident:
        far = pattern.vertex(pattern.crease(crease_id).other(vertex))
        rays.append((direction_units(far.x - center.x, far.y - center.y), crease_id))
    rays.sort()

    units = []
    for (d1, _), (d2, _) in zip(rays, rays[1:] + rays[:1]):
        units.append((d2 - d1) % FULL_TURN_UNITS)
    if any(u == 0 for u in units):
        raise PatternError(f"two creases leave vertex {vertex} in the same direction")

    return VertexStar(
        vertex=vertex,
        creases=tuple(c for _, c in rays),
        angles=tuple(units_to_degrees(u) for u in units),
    )


def validate(pattern: CreasePattern) -> ValidationReport:
    """
    Check the necessary local angle conditions at every interior vertex.

    Odd degree and a nonzero alternating angle sum are warnings; a degree
    below 2, an angle-sum deviation and crossing creases are errors.

    Args:
        pattern: The crease pattern

    Returns:
        The validation report
    """
    report = ValidationReport()

    for v in pattern.interior_vertices():
        degree = pattern.degree(v.id)
        check = VertexCheck(vertex=v.id, degree=degree, even_degree=degree % 2 == 0)
        if degree % 2:
            report.warnings.append(f"vertex {v.id}: odd degree {degree}")

        if degree < 2:
            report.errors.append(f"vertex {v.id}: degree {degree} below 2")
            report.vertices.append(check)
            continue

        try:
            star = vertex_star(pattern, v.id)
        except PatternError as exc:
            report.errors.append(f"vertex {v.id}: {exc}")
            report.vertices.append(check)
            continue

        check.angle_sum = sum(star.angles)
        check.angle_sum_deviation = abs(check.angle_sum - 360.0)
        if check.angle_sum_deviation > ANGLE_TOLERANCE:
            report.errors.append(
                f"vertex {v.id}: angle sum deviates from 360 by {check.angle_sum_deviation:g}")

        if degree % 2 == 0:
            units = star.angle_units
            alternating = sum(u if i % 2 == 0 else -u for i, u in enumerate(units))
            check.alternating_sum = units_to_degrees(alternating)
            check.alternating_ok = abs(check.alternating_sum) <= ANGLE_TOLERANCE
            if not check.alternating_ok:
                report.warnings.append(
                    f"vertex {v.id}: alternating angle sum {check.alternating_sum:g} is not 0")
        report.vertices.append(check)

    report.crossings = pattern.crossings()
    for a, b in report.crossings:
        report.errors.append(f"creases {a} and {b} cross")

    logger.debug("validated %d interior vertices: %d warnings, %d errors",
                 len(report.vertices), len(report.warnings), len(report.errors))
    return report


def parse_cpt(text: str) -> Tuple[CreasePattern, Optional[MVAssignment]]:
    """
    Parse a CPT v1 document.

    Args:
        text: Document text

    Returns:
        The pattern, and the partial assignment of creases flagged M or V
        (None when every crease is U)

    Raises:
        CptParseError: On any syntax or reference error, with its line number
    """
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content.split()))

    cursor = iter(lines)

    def next_line(expected: str) -> Tuple[int, List[str]]:
        try:
            return next(cursor)
        except StopIteration:
            last = lines[-1][0] if lines else 1
            raise CptParseError(last, f"unexpected end of document, expected {expected}") from None

    number, tokens = next_line("header")
    if tokens != ["CPT", "1"]:
        raise CptParseError(number, "expected header 'CPT 1'")

    vertex_count = _section_header(next_line("vertices section"), "vertices")
    vertices = []
    vertex_ids = set()
    for _ in range(vertex_count):
        number, tokens = next_line("vertex line")
        if len(tokens) != 4:
            raise CptParseError(number, "vertex line needs '<id> <x> <y> <B|I>'")
        vid = _parse_id(number, tokens[0])
        if vid in vertex_ids:
            raise CptParseError(number, f"duplicate vertex id {vid}")
        if tokens[3] not in ("B", "I"):
            raise CptParseError(number, f"vertex kind must be B or I, got {tokens[3]!r}")
        vertices.append(Vertex(id=vid, x=_parse_real(number, tokens[1]),
                               y=_parse_real(number, tokens[2]), kind=VertexKind(tokens[3])))
        vertex_ids.add(vid)

    crease_count = _section_header(next_line("edges section"), "edges")
    creases = []
    crease_ids = set()
    pairs = set()
    letters: Dict[int, int] = {}
    for _ in range(crease_count):
        number, tokens = next_line("edge line")
        if len(tokens) != 4:
            raise CptParseError(number, "edge line needs '<id> <v1> <v2> <M|V|U>'")
        cid = _parse_id(number, tokens[0])
        v1 = _parse_id(number, tokens[1])
        v2 = _parse_id(number, tokens[2])
        if cid in crease_ids:
            raise CptParseError(number, f"duplicate edge id {cid}")
        for endpoint in (v1, v2):
            if endpoint not in vertex_ids:
                raise CptParseError(number, f"edge {cid} references undeclared vertex {endpoint}")
        if v1 == v2:
            raise CptParseError(number, f"edge {cid} is a self-loop")
        if frozenset((v1, v2)) in pairs:
            raise CptParseError(number, f"edge {cid} duplicates another edge")
        if tokens[3] not in ("M", "V", "U"):
            raise CptParseError(number, f"edge flag must be M, V or U, got {tokens[3]!r}")
        if tokens[3] != "U":
            letters[cid] = MOUNTAIN if tokens[3] == "M" else VALLEY
        creases.append(Crease(id=cid, v1=v1, v2=v2))
        crease_ids.add(cid)
        pairs.add(frozenset((v1, v2)))

    extra = next(cursor, None)
    if extra is not None:
        raise CptParseError(extra[0], "content after the declared edges")

    pattern = CreasePattern(vertices=tuple(vertices), creases=tuple(creases))
    mv = MVAssignment(assignment=letters) if letters else None
    return pattern, mv


def serialize_cpt(pattern: CreasePattern, mv: Optional[MVAssignment] = None) -> str:
    """
    Emit the canonical CPT v1 text of a pattern.

    Args:
        pattern: The crease pattern
        mv: Optional (possibly partial) assignment; unassigned creases get U

    Returns:
        Canonical document text with ascending ids

    Raises:
        PatternError: If mv names a crease outside the pattern
    """
    if mv is not None:
        pattern.check_assignment(mv, total=False)

    out = ["CPT 1", f"vertices {len(pattern.vertices)}"]
    for v in pattern.vertices:
        out.append(f"{v.id} {format_real(v.x)} {format_real(v.y)} {v.kind.value}")
    out.append(f"edges {len(pattern.creases)}")
    for c in pattern.creases:
        out.append(f"{c.id} {c.v1} {c.v2} {mv_letter(mv, c.id)}")
    return "\n".join(out) + "\n"


def mv_letter(mv: Optional[MVAssignment], crease_id: int) -> str:
    """M, V or U for one crease."""
    if mv is None or crease_id not in mv:
        return "U"
    return "M" if mv[crease_id] == MOUNTAIN else "V"


def format_real(value: float) -> str:
    """Shortest round-tripping plain decimal text for a float."""
    text = format(Decimal(repr(float(value) + 0.0)).normalize(), "f")
    return text


def _section_header(line: Tuple[int, List[str]], name: str) -> int:
    number, tokens = line
    if len(tokens) != 2 or tokens[0] != name:
        raise CptParseError(number, f"expected '{name} <count>'")
    try:
        if not tokens[1].isascii():
            raise ValueError(tokens[1])
        count = int(tokens[1])
    except ValueError:
        raise CptParseError(number, f"{name} count must be an integer") from None
    if count < 0:
        raise CptParseError(number, f"{name} count must not be negative")
    return count


def _parse_id(number: int, token: str) -> int:
    if not (token.isascii() and token.isdigit()):
        raise CptParseError(number, f"expected a non-negative integer id, got {token!r}")
    return int(token)


def _parse_real(number: int, token: str) -> float:
    try:
        if not token.isascii():
            raise ValueError(token)
        value = float(token)
    except ValueError:
        raise CptParseError(number, f"expected a decimal number, got {token!r}") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise CptParseError(number, f"expected a finite number, got {token!r}")
    return value


def _orientation(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _on_segment(p, q, r) -> bool:
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def _segments_conflict(p1, p2, q1, q2, share_endpoint: bool) -> bool:
    eps = 1e-12
    d1 = _orientation(q1, q2, p1)
    d2 = _orientation(q1, q2, p2)
    d3 = _orientation(p1, p2, q1)
    d4 = _orientation(p1, p2, q2)

    if abs(d1) <= eps and abs(d2) <= eps:
        # Collinear: conflict unless they only touch at the shared endpoint
        touching = [pt for pt in (q1, q2) if _on_segment(p1, p2, pt)]
        touching += [pt for pt in (p1, p2) if _on_segment(q1, q2, pt)]
        distinct = {(round(x, 9), round(y, 9)) for x, y in touching}
        return len(distinct) > (1 if share_endpoint else 0)

    if share_endpoint:
        return False

    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
            ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True
    for d, a, b, pt in ((d1, q1, q2, p1), (d2, q1, q2, p2), (d3, p1, p2, q1), (d4, p1, p2, q2)):
        if abs(d) <= eps and _on_segment(a, b, pt):
            return True
    return False


def _first_error(exc: ValidationError) -> str:
    errors = exc.errors()
    if not errors:
        return str(exc)
    message = errors[0].get("msg", str(exc))
    return message.removeprefix("Value error, ")
