"""Inertia sets of graphs: T-notation algebra, closed forms, cut-vertex recursion
and a matrix-realization oracle."""

from .algebra import (InertiaPoint, InertiaSet, T, Trapezoid, add, cap, decompose, expand,
                      is_trapezoidal, minkowski, min_rank, min_rank_line, trapezoid_add_formula, union)
from .dsl import format_family_spec, parse_family_spec
from .engine import InertiaEngine, JoinInputs, join_inertia, recursive_inertia
from .errors import (Disconnected, EmptySet, InertiaKitError, InvalidSpec, NonSymmetric, NotRepresentable,
                     OutOfRange, ParseError, PatternViolation, TooLarge, TooSmall, Unsupported,
                     UnsupportedBlock)
from .formulas import (FormulaResult, inertia_binary_star, inertia_bipartite_join, inertia_bouquet,
                       inertia_complete_bipartite, inertia_cycle, inertia_disjoint_paths, inertia_formula,
                       inertia_generalized_star, inertia_path, inertia_pulsar, inertia_supernova)
from .graphs import (BinaryStar, BipartiteJoin, Bouquet, CompleteBipartite, Cycle, DisjointPaths,
                     DisjointUnion, GeneralizedStar, Graph, Join, Path, Pulsar, Supernova, build,
                     cut_vertex_blocks, delete_vertex, disjoint_union, is_isomorphic, vertex_join)
from .notation import format_t_notation, parse_t_notation
from .oracle import (AttainedReport, MatrixInertia, Realization, enumerate_realizations, exact_rank,
                     matrix_inertia, verify_containment, witness_max_rank, witness_minrank_path)
from .render import render_ascii, render_svg

__version__ = "0.1.0"
