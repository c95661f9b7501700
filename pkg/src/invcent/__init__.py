"""Inverse eigenvector centrality: decide, construct, verify.

Given a connected simple graph and a positive rational target vector,
decide whether strictly positive edge weights exist that make the target
the eigenvector centrality (spectral radius normalized to 1), construct
such weights exactly when they exist, and verify candidates.
"""

from .errors import (
    NotConvergedError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    ValidationError,
)
from .feasibility import FeasibilityVerdict, check_feasibility, explain
from .fstab import (
    ExtremeRay,
    FarkasScan,
    FstabVertex,
    brute_force_vertices,
    enumerate_fstab_vertices,
    extreme_rays,
    farkas_scan,
)
from .graphs import Graph, external_neighborhood, has_odd_cycle, is_stable, parse_graph
from .simplex import SimplexResult, SolveStatus, simplex_solve
from .special import StructureKind, StructureTag, detect_structure
from .spectral import (
    SpectralReport,
    WeightedAdjacency,
    build_matrix,
    check_irreducible,
    power_iteration,
    spectral_report,
    verify_exact,
)
from .stable_sets import (
    Family,
    StableSetRecord,
    classify,
    enumerate_stable_sets,
    reduce_family,
    reduced_family,
)
from .targets import CentralityTarget, parse_rational, parse_target
from .weight_lp import (
    LpResult,
    LpStatus,
    WeightAssignment,
    farkas_certificate,
    solve_max_min_weight,
)

__all__ = [
    "CentralityTarget",
    "ExtremeRay",
    "Family",
    "FarkasScan",
    "FeasibilityVerdict",
    "FstabVertex",
    "Graph",
    "LpResult",
    "LpStatus",
    "NotConvergedError",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
    "SimplexResult",
    "SolveStatus",
    "SpectralReport",
    "StableSetRecord",
    "StructureKind",
    "StructureTag",
    "ValidationError",
    "WeightAssignment",
    "WeightedAdjacency",
    "brute_force_vertices",
    "build_matrix",
    "check_feasibility",
    "check_irreducible",
    "classify",
    "detect_structure",
    "enumerate_fstab_vertices",
    "enumerate_stable_sets",
    "explain",
    "external_neighborhood",
    "extreme_rays",
    "farkas_certificate",
    "farkas_scan",
    "has_odd_cycle",
    "is_stable",
    "parse_graph",
    "parse_rational",
    "parse_target",
    "power_iteration",
    "reduce_family",
    "reduced_family",
    "simplex_solve",
    "solve_max_min_weight",
    "spectral_report",
    "verify_exact",
]
