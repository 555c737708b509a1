"""Crossing-free straight-line drawings of graphs on the integer grid [m]^3."""

from ._kernels import BACKEND
from .counting import (CensusResult, PrimitiveNormal, count_collinear_ksets, count_coplanar_4sets,
                       count_coplanar_origin_triples, fit_growth_exponent, hyperplane_count)
from .drawing import (ConflictReport, DrawingParams, DrawResult, Embedding, choose_parameters,
                      draw, draw_blowup_greedy, draw_first_moment, find_conflicts, random_embedding)
from .geometry import (ConflictKind, GridPoint, Segment, collinear, coplanar, segments_conflict,
                       strictly_between, vertex_edge_conflict)
from .graph import (BlowupGraph, DegeneracyOrdering, Graph, blowup, degeneracy_ordering,
                    generate_family, parse_graph, serialize_graph)
from .verify import VerificationVerdict, drawing_stats, verify_drawing

__version__ = "0.1.0"
