"""Exact census of rational lines against surfaces in P^3 over F_q.

Layered bottom-up: field arithmetic, sparse polynomials, projective
geometry, a small Groebner engine, exact bound arithmetic, the line
census itself, the surface gallery, and an HTTP/CLI front end.
"""

from .bounds import BOUND_NAMES, BoundRow, BoundSheet, line_total
from .census import (CLASS_NAMES, CONTAINED, RATIONAL_TANGENT,
                     SPECIAL_TANGENT, TRANSVERSE, CensusReport,
                     LineClassification, aux_surface, classify_line,
                     full_census, gamma_dimension, hessian_vanishes_on,
                     is_frobenius_classical)
from .errors import LineCensusError
from .field import (FieldElement, FieldSpec, embed, enumerate_field,
                    frobenius, make_field)
from .gallery import (SearchOutcome, fermat_surface, katz_surface,
                      nonreflexive_family, random_smooth_surface,
                      search_smooth_spacefilling, seeded_nonreflexive,
                      seeded_spacefilling, spacefilling_surface)
from .groebner import (INCONCLUSIVE, SINGULAR, SMOOTH, GroebnerBasis,
                       buchberger, certify_smooth, lt_ideal_dimension,
                       projective_dimension)
from .poly import (BinaryForm, Polynomial, compose_linear, divides,
                   evaluate, format_poly, frobenius_substitute, gradient,
                   hessian_det, is_pth_power, parse_poly,
                   partial_derivative, rational_multiplicities,
                   restrict_to_line, squarefree_binary, try_divide,
                   variables)
from .projgeom import (LineRep, PlaneRep, ProjectivePoint,
                       count_common_zeros, count_points_on,
                       enumerate_lines, enumerate_points,
                       find_singular_point, line_count, line_from_index,
                       lines_contained_in, parse_line_literal, point_count,
                       tangent_plane)

__version__ = "0.1.0"

__all__ = [
    "BOUND_NAMES", "BoundRow", "BoundSheet", "line_total",
    "CLASS_NAMES", "CONTAINED", "TRANSVERSE", "RATIONAL_TANGENT",
    "SPECIAL_TANGENT", "CensusReport", "LineClassification",
    "aux_surface", "classify_line", "full_census", "gamma_dimension",
    "hessian_vanishes_on", "is_frobenius_classical",
    "LineCensusError",
    "FieldElement", "FieldSpec", "embed", "enumerate_field", "frobenius",
    "make_field",
    "SearchOutcome", "fermat_surface", "katz_surface",
    "nonreflexive_family", "random_smooth_surface",
    "search_smooth_spacefilling", "seeded_nonreflexive",
    "seeded_spacefilling", "spacefilling_surface",
    "SMOOTH", "SINGULAR", "INCONCLUSIVE", "GroebnerBasis", "buchberger",
    "certify_smooth", "lt_ideal_dimension", "projective_dimension",
    "BinaryForm", "Polynomial", "compose_linear", "divides", "evaluate",
    "format_poly", "frobenius_substitute", "gradient", "hessian_det",
    "is_pth_power", "parse_poly", "partial_derivative",
    "rational_multiplicities", "restrict_to_line", "squarefree_binary",
    "try_divide", "variables",
    "LineRep", "PlaneRep", "ProjectivePoint", "count_common_zeros",
    "count_points_on", "enumerate_lines", "enumerate_points",
    "find_singular_point", "line_count", "line_from_index",
    "lines_contained_in", "parse_line_literal", "point_count",
    "tangent_plane",
    "__version__",
]
