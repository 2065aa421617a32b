# -*- coding: utf-8 -*-
"""Utilities for origami MV counting.

This module provides the shared constants, angle helpers, logging setup and
the exception hierarchy used across the package.
"""

import logging
import math
from typing import Any, Dict

# Snapping lattice for angles, in degrees
ANGLE_QUANTUM = 1e-6
ANGLE_TOLERANCE = 1e-6
FULL_TURN_UNITS = 360_000_000
HALF_TURN_UNITS = 180_000_000

# Exhaustive oracle bounds
MAX_ENUMERATION_CREASES = 30
MAX_DETERMINED_CREASES = 24
MAX_BRUTE_CELLS = 20
# 20x20 transfer counts run for about an hour
MAX_TRANSFER_HEIGHT = 20
MAX_MATRIX_HEIGHT = 8
MAX_LIEB_N = 20

LIEB_CONSTANT = (4.0 / 3.0) ** 1.5

LOG_FORMAT = "[%(levelname)s] - %(module)s.%(funcName)s - %(message)s"


def snap_angle(degrees: float) -> int:
    """
    Snap an angle in degrees onto the integer micro-degree lattice.

    Args:
        degrees: Angle in degrees

    Returns:
        The angle as an integer count of ANGLE_QUANTUM units
    """
    return int(round(degrees / ANGLE_QUANTUM))


def units_to_degrees(units: int) -> float:
    """Convert lattice units back to degrees."""
    return units * ANGLE_QUANTUM


def direction_units(dx: float, dy: float) -> int:
    """
    Direction of the vector (dx, dy) on the lattice, normalized to [0, 360).

    Args:
        dx: Horizontal component
        dy: Vertical component

    Returns:
        Direction in lattice units, counterclockwise from the positive x axis
    """
    units = snap_angle(math.degrees(math.atan2(dy, dx))) % FULL_TURN_UNITS
    return units


def big_log(value: int) -> float:
    """
    Natural logarithm of a positive arbitrary-precision integer.

    The integer is split into a float-sized mantissa and a power-of-two
    exponent so values far beyond float range never overflow.

    Args:
        value: Positive integer

    Returns:
        ln(value)
    """
    if value <= 0:
        raise ValueError("big_log requires a positive integer")
    shift = max(value.bit_length() - 53, 0)
    mantissa = value >> shift
    return math.log(mantissa) + shift * math.log(2.0)


def format_metadata(parameters: Dict[str, Any]) -> str:
    """
    Format a metadata dictionary as key=value lines.

    Args:
        parameters: Dictionary of metadata entries, emitted in insertion order

    Returns:
        Newline-terminated text, one entry per line
    """
    return "".join(f"{k}={v}\n" for k, v in parameters.items())


def configure_logging(verbose: bool = False) -> logging.Logger:
    """
    Attach a stderr handler to the package logger.

    Calling this more than once only updates the level.

    Args:
        verbose: Log at DEBUG instead of WARNING

    Returns:
        The package logger
    """
    logger = logging.getLogger("origami_mv")
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)

    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)

    for handler in logger.handlers:
        handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return logger


class OrigamiMVError(Exception):
    """Base exception class for origami MV counting errors."""
    pass


class CptParseError(OrigamiMVError):
    """Exception raised for malformed CPT documents."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class PatternError(OrigamiMVError):
    """Exception raised when a pattern or assignment breaks an invariant."""
    pass


class UnsupportedVertexError(OrigamiMVError):
    """Exception raised for vertices outside the supported kind or degree."""
    pass


class VertexClassificationError(OrigamiMVError):
    """Exception raised when a degree-4 angle sequence cannot fold flat."""
    pass


class NotFlatFoldableError(OrigamiMVError):
    """Exception raised when the origami line graph is not 2-colorable."""
    pass


class SizeLimitError(OrigamiMVError):
    """Exception raised when an exhaustive search would be too large."""
    pass


class ColoringError(OrigamiMVError):
    """Exception raised for malformed or improper grid colorings."""
    pass


class BijectionError(OrigamiMVError):
    """Exception raised when a Miura bijection runtime check fails."""
    pass
