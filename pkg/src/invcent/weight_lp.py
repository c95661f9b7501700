"""Constructive solver for the weight system A c = c, w > 0.

The decision "do strictly positive weights exist" is answered by one
linear program: shift each weight by the minimum weight value and
maximize that minimum. With w_ij = z_ij + eps the vertex equations
(scaled by c_j) become

    sum_{i in N(j)} z_ij c_i c_j  +  eps * sum_{i in N(j)} c_i c_j  =  c_j^2

over z >= 0, eps >= 0, so the optimum eps* is positive exactly when the
target is realizable, zero when only boundary (some-zero) weights exist,
and the LP is infeasible when no nonnegative weights exist at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import ValidationError
from .graphs import Edge, Graph
from .simplex import SimplexResult, SolveStatus, simplex_solve
from .targets import CentralityTarget


class LpStatus(Enum):
    STRICTLY_FEASIBLE = "StrictlyFeasible"
    BOUNDARY_ONLY = "BoundaryOnly"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class WeightAssignment:
    """Strictly positive weights, one per edge of the graph."""

    weights: Dict[Edge, Fraction]

    def min_weight(self) -> Fraction:
        return min(self.weights.values())

    def __getitem__(self, edge: Edge) -> Fraction:
        i, j = edge
        return self.weights[(i, j) if i < j else (j, i)]


@dataclass(frozen=True)
class LpResult:
    status: LpStatus
    epsilon_star: Optional[Fraction]  # defined unless INFEASIBLE
    assignment: Optional[WeightAssignment]  # present iff STRICTLY_FEASIBLE
    weights: Optional[Dict[Edge, Fraction]]  # optimal nonnegative weights


def _check_dims(g: Graph, c: CentralityTarget) -> None:
    if c.n != g.n:
        raise ValidationError(f"target has {c.n} entries, graph has {g.n} vertices")


def _vertex_rows(g: Graph, c: CentralityTarget) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Equation rows over variables (z_e for each edge, eps)."""
    edge_index = {e: k for k, e in enumerate(g.edges)}
    nvars = g.m + 1
    rows = []
    rhs = []
    for j in g.vertices():
        row = [Fraction(0)] * nvars
        coupling = Fraction(0)
        for i in g.neighbors(j):
            cij = c.value(i) * c.value(j)
            e = (i, j) if i < j else (j, i)
            row[edge_index[e]] = cij
            coupling += cij
        row[g.m] = coupling
        rows.append(row)
        rhs.append(c.square(j))
    return rows, rhs


def solve_max_min_weight(g: Graph, c: CentralityTarget) -> LpResult:
    """Maximize the minimum edge weight subject to the vertex equations.

    Always bounded (each vertex equation caps eps), so the outcome is one
    of: strictly feasible with a positive assignment, boundary-only with
    eps* = 0 and some zero weights, or infeasible.
    """
    _check_dims(g, c)
    rows, rhs = _vertex_rows(g, c)
    objective = [Fraction(0)] * g.m + [Fraction(1)]
    res = simplex_solve(rows, rhs, objective, maximize=True, want_farkas=False)
    if res.status is SolveStatus.INFEASIBLE:
        return LpResult(
            status=LpStatus.INFEASIBLE, epsilon_star=None, assignment=None, weights=None
        )
    if res.status is SolveStatus.UNBOUNDED:
        raise AssertionError("min-weight LP is bounded by construction")
    eps = res.solution[g.m]
    weights = {e: res.solution[k] + eps for k, e in enumerate(g.edges)}
    if eps > 0:
        return LpResult(
            status=LpStatus.STRICTLY_FEASIBLE,
            epsilon_star=eps,
            assignment=WeightAssignment(weights),
            weights=weights,
        )
    return LpResult(
        status=LpStatus.BOUNDARY_ONLY, epsilon_star=eps, assignment=None, weights=weights
    )


def farkas_certificate(
    g: Graph, c: CentralityTarget, eps: Fraction | int
) -> Optional[Tuple[Fraction, ...]]:
    """Infeasibility certificate for the weight system at a fixed eps.

    Considers the shifted system B z = q(eps), z >= 0 over the scaled
    vertex equations. When it is infeasible, returns x with qᵀx > 0 and
    Bᵀx <= 0 (from the phase-1 dual); otherwise None.
    """
    _check_dims(g, c)
    eps = Fraction(eps)
    if eps < 0:
        raise ValidationError(f"eps must be nonnegative, got {eps}")
    rows, rhs = _vertex_rows(g, c)
    # Fix eps: drop its column and move the coupling term to the rhs.
    b_rows = [row[: g.m] for row in rows]
    q = [rhs[j] - eps * rows[j][g.m] for j in range(g.n)]
    res = simplex_solve(
        b_rows, q, [Fraction(0)] * g.m, maximize=False, want_farkas=True
    )
    if res.status is not SolveStatus.INFEASIBLE:
        return None
    return res.farkas
