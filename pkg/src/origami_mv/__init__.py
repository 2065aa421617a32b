"""
Origami MV Package.

This package counts and enumerates the mountain-valley assignments of flat
origami crease patterns: local vertex rules, the origami line graph, an
exhaustive enumeration oracle, the Miura-ori bijection with grid colorings
and transfer-matrix coloring counts.
"""

# Core model
from .crease_model import (
    MOUNTAIN,
    VALLEY,
    CreasePattern,
    Crease,
    Vertex,
    VertexKind,
    MVAssignment,
    VertexStar,
    ValidationReport,
    parse_cpt,
    serialize_cpt,
    validate,
    vertex_star
)
from .generators import MiuraPattern, SquareTwistPattern, gen_miura, gen_square_twist
from .local_rules import (
    Degree4Class,
    Degree4Variant,
    blb_pairs,
    classify_degree4,
    degree4_forced_same,
    layer_oracle,
    maekawa_ok,
    vertex_valid_assignments
)
from .line_graph import (
    OrigamiLineGraph,
    build_line_graph,
    count_mv_by_components,
    determined_check,
    square_twist_count_formula,
    to_dot
)
from .enumeration import EnumerationResult, count_mv, enumerate_mv, solve
from .miura_bijection import GridColoring, coloring_to_mv, count_miura_mv, mv_to_coloring
from .coloring_count import (
    count_colorings_brute,
    count_colorings_matrix,
    count_colorings_transfer,
    lieb_table
)

# Workflows and output
from .workflows import CrossValidation, ParallelEnumeration, VerificationReport
from .render import render_svg

# Common utilities
from .utils import OrigamiMVError, configure_logging

__all__ = [
    'MOUNTAIN',
    'VALLEY',
    'CreasePattern',
    'Crease',
    'Vertex',
    'VertexKind',
    'MVAssignment',
    'VertexStar',
    'ValidationReport',
    'parse_cpt',
    'serialize_cpt',
    'validate',
    'vertex_star',
    'MiuraPattern',
    'SquareTwistPattern',
    'gen_miura',
    'gen_square_twist',
    'Degree4Class',
    'Degree4Variant',
    'blb_pairs',
    'classify_degree4',
    'degree4_forced_same',
    'layer_oracle',
    'maekawa_ok',
    'vertex_valid_assignments',
    'OrigamiLineGraph',
    'build_line_graph',
    'count_mv_by_components',
    'determined_check',
    'square_twist_count_formula',
    'to_dot',
    'EnumerationResult',
    'count_mv',
    'enumerate_mv',
    'solve',
    'GridColoring',
    'coloring_to_mv',
    'count_miura_mv',
    'mv_to_coloring',
    'count_colorings_brute',
    'count_colorings_matrix',
    'count_colorings_transfer',
    'lieb_table',
    'CrossValidation',
    'ParallelEnumeration',
    'VerificationReport',
    'render_svg',
    'OrigamiMVError',
    'configure_logging'
]
