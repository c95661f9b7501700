"""Exact rational simplex for standard-form LPs.

Solves max/min of a linear objective over {A x = b, x >= 0} with
rational data, via a two-phase tableau method with Bland's anticycling
rule. The tableau is kept as scaled integers with one shared denominator
(integer pivoting), so every division in a pivot step is exact and no
floating point is involved anywhere. On infeasibility the phase-1 dual
is returned as a certificate y with yᵀA <= 0 and yᵀb > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence, Tuple

from .errors import ValidationError

Rational = Fraction | int


class SolveStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class SimplexResult:
    status: SolveStatus
    objective: Optional[Fraction]
    solution: Optional[Tuple[Fraction, ...]]
    farkas: Optional[Tuple[Fraction, ...]]


def _scale_row(row: Sequence[Rational]) -> tuple[list[int], int]:
    """Clear denominators; returns (integer row, positive multiplier)."""
    fracs = [Fraction(x) for x in row]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * mult) for f in fracs], mult


def _pivot(rows: list[list[int]], d: int, r: int, k: int) -> int:
    """Integer Gauss-Jordan pivot on (r, k); returns the new denominator.

    Every entry division is exact (Edmonds-style integer pivoting); the
    pivot row itself is left unchanged and the pivot entry becomes the
    new shared denominator.
    """
    prow = rows[r]
    piv = prow[k]
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[k]
        if f:
            rows[i] = [(piv * a - f * b) // d for a, b in zip(row, prow)]
        elif piv != d:
            rows[i] = [piv * a // d for a in row]
    return piv


def _run_phase(
    rows: list[list[int]],
    d: int,
    basis: list[int],
    ncons: int,
    obj: int,
    ncols_eligible: int,
) -> tuple[int, bool]:
    """Bland-rule pivoting until optimal or unbounded.

    Entering candidates are columns 0..ncols_eligible-1 with negative
    reduced cost in the objective row `obj`; returns (d, bounded).
    """
    while True:
        orow = rows[obj]
        enter = -1
        for j in range(ncols_eligible):
            if orow[j] < 0:
                enter = j
                break
        if enter < 0:
            return d, True
        leave = -1
        for i in range(ncons):
            a = rows[i][enter]
            if a > 0:
                if leave < 0:
                    leave = i
                else:
                    lhs = rows[i][-1] * rows[leave][enter]
                    rhs = rows[leave][-1] * a
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                        leave = i
        if leave < 0:
            return d, False
        d = _pivot(rows, d, leave, enter)
        basis[leave] = enter


def simplex_solve(
    constraints: Sequence[Sequence[Rational]],
    rhs: Sequence[Rational],
    objective: Sequence[Rational],
    maximize: bool = True,
    want_farkas: bool = True,
) -> SimplexResult:
    """Solve max/min objᵀx subject to A x = b, x >= 0, exactly.

    Returns the exact optimum with an optimal basic solution, or an
    INFEASIBLE / UNBOUNDED status. With want_farkas, an infeasible system
    comes with a certificate vector y such that yᵀA <= 0 and yᵀb > 0.
    """
    m = len(constraints)
    nvars = len(objective)
    if len(rhs) != m:
        raise ValidationError(f"{m} constraint rows but {len(rhs)} rhs entries")
    for row in constraints:
        if len(row) != nvars:
            raise ValidationError("constraint row length does not match objective")

    # Integer rows with per-row multiplier; flip signs so rhs >= 0. The
    # multiplier (including the sign) maps the phase-1 dual back onto the
    # caller's unscaled rows.
    int_rows: list[list[int]] = []
    row_mult: list[Fraction] = []
    for i in range(m):
        scaled, t = _scale_row(list(constraints[i]) + [rhs[i]])
        if scaled[-1] < 0:
            scaled = [-x for x in scaled]
            row_mult.append(Fraction(-t))
        else:
            row_mult.append(Fraction(t))
        int_rows.append(scaled)

    obj_scaled, _ = _scale_row(objective)
    cost = [-x for x in obj_scaled] if maximize else list(obj_scaled)

    # Tableau layout: struct columns, optional artificial columns, rhs.
    # Row m is the phase-1 objective, row m+1 the phase-2 objective; both
    # are carried through every pivot so their reduced costs stay exact.
    nart = m if want_farkas else 0
    rows: list[list[int]] = []
    for i in range(m):
        art = [0] * nart
        if want_farkas:
            art[i] = 1
        rows.append(int_rows[i][:-1] + art + [int_rows[i][-1]])
    phase1 = [-sum(int_rows[i][j] for i in range(m)) for j in range(nvars)]
    phase1 += [0] * nart + [-sum(int_rows[i][-1] for i in range(m))]
    phase2 = cost + [0] * nart + [0]
    rows.append(phase1)
    rows.append(phase2)

    d = 1
    basis = [nvars + m + i for i in range(m)]  # artificial ids, columns optional

    d, bounded = _run_phase(rows, d, basis, m, m, nvars)
    if not bounded:
        raise AssertionError("phase 1 objective is bounded below by zero")
    if rows[m][-1] < 0:  # artificial sum still positive: system infeasible
        farkas = None
        if want_farkas:
            ys = [
                Fraction(d - rows[m][nvars + i], d) * row_mult[i] for i in range(m)
            ]
            farkas = tuple(ys)
        return SimplexResult(
            status=SolveStatus.INFEASIBLE, objective=None, solution=None, farkas=farkas
        )

    # Drive artificial variables out of the basis; rows that cannot be
    # pivoted are redundant equations and are dropped.
    art_floor = nvars + m
    keep = []
    for r in range(m):
        if basis[r] < art_floor:
            keep.append(r)
            continue
        enter = next((j for j in range(nvars) if rows[r][j]), None)
        if enter is None:
            continue  # all-zero constraint at zero rhs
        if rows[r][enter] < 0:
            rows[r] = [-x for x in rows[r]]
        d = _pivot(rows, d, r, enter)
        basis[r] = enter
        keep.append(r)

    # Discard the phase-1 objective row and any artificial columns.
    cons = [rows[r] for r in keep]
    obj_row = rows[m + 1]
    if want_farkas:
        cons = [row[:nvars] + [row[-1]] for row in cons]
        obj_row = obj_row[:nvars] + [obj_row[-1]]
    rows = cons + [obj_row]
    basis = [basis[r] for r in keep]
    ncons = len(keep)

    d, bounded = _run_phase(rows, d, basis, ncons, ncons, nvars)
    if not bounded:
        return SimplexResult(
            status=SolveStatus.UNBOUNDED, objective=None, solution=None, farkas=None
        )

    solution = [Fraction(0)] * nvars
    for r in range(ncons):
        solution[basis[r]] = Fraction(rows[r][-1], d)
    value = sum(
        (Fraction(objective[j]) * solution[j] for j in range(nvars)), Fraction(0)
    )
    return SimplexResult(
        status=SolveStatus.OPTIMAL,
        objective=value,
        solution=tuple(solution),
        farkas=None,
    )
