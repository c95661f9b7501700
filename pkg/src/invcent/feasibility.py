"""Combinatorial decision procedure for target realizability.

A positive target c is realizable by strictly positive edge weights iff
for every covering stable set S the squared sums over S and N(S) are
equal, and for every non-covering stable set they satisfy a strict
inequality. All comparisons are exact rational arithmetic: the strict
inequalities make floating-point tolerances ambiguous exactly on the
interesting boundary instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .errors import ResourceLimitError, ValidationError
from .graphs import Graph
from .stable_sets import (
    DEFAULT_ENUM_BOUND,
    Family,
    StableSetRecord,
    _extendable,
    _is_covering,
    _record,
    _splittable,
    _stable_masks,
)
from .targets import CentralityTarget

Violation = Tuple[StableSetRecord, Fraction, Fraction]


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    witness: Optional[StableSetRecord]
    lhs: Optional[Fraction]  # sum of squares over the witness set
    rhs: Optional[Fraction]  # sum of squares over its neighborhood
    conditions_checked: int
    violations: Tuple[Violation, ...] = field(default=())


def _mask_square_sum(squares: tuple[Fraction, ...], mask: int) -> Fraction:
    total = Fraction(0)
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        total += squares[v - 1]
    return total


def _witness_key(smask: int) -> tuple[int, int]:
    # Larger sets first (their conditions subsume smaller ones'), then by
    # mask for determinism.
    return (-smask.bit_count(), smask)


def check_feasibility(
    g: Graph,
    c: CentralityTarget,
    use_reduced: bool = False,
    all_witnesses: bool = False,
    bound: int = DEFAULT_ENUM_BOUND,
) -> FeasibilityVerdict:
    """Decide realizability of c on g by scanning stable-set conditions.

    The witness (when infeasible) is deterministic: the violating set
    that comes first by descending size, then ascending bitmask. With
    use_reduced, the strict inequalities are checked only on the reduced
    family; the equality conditions are always checked in full.
    """
    if c.n != g.n:
        raise ValidationError(f"target has {c.n} entries, graph has {g.n} vertices")
    if g.n > bound:
        raise ResourceLimitError(
            f"stable-set enumeration bound is {bound} vertices, graph has {g.n}"
        )
    squares = c.squares
    checked = 0
    violations: list[tuple[tuple[int, int], int, int, Fraction, Fraction]] = []

    kept = None
    if use_reduced:
        kept = {
            smask
            for smask, nbhd in _stable_masks(g)
            if not _is_covering(g, smask)
            and not _splittable(g, smask)
            and not _extendable(g, smask, nbhd)
        }

    best = None
    for smask, nbhd in _stable_masks(g):
        covering = _is_covering(g, smask)
        if not covering and kept is not None and smask not in kept:
            continue
        checked += 1
        lhs = _mask_square_sum(squares, smask)
        rhs = _mask_square_sum(squares, nbhd)
        ok = lhs == rhs if covering else lhs < rhs
        if not ok:
            entry = (_witness_key(smask), smask, nbhd, lhs, rhs)
            if all_witnesses:
                violations.append(entry)
            if best is None or entry[0] < best[0]:
                best = entry

    if best is not None:
        _, smask, nbhd, lhs, rhs = best
        keep = sorted(violations) if all_witnesses else [best]
        return FeasibilityVerdict(
            feasible=False,
            witness=_record(g, smask, nbhd),
            lhs=lhs,
            rhs=rhs,
            conditions_checked=checked,
            violations=tuple(
                (_record(g, sm, nb), left, right) for _, sm, nb, left, right in keep
            ),
        )
    return FeasibilityVerdict(
        feasible=True, witness=None, lhs=None, rhs=None, conditions_checked=checked
    )


def explain(verdict: FeasibilityVerdict) -> str:
    """Human-readable report for a feasibility verdict."""
    if verdict.feasible:
        return f"feasible: all {verdict.conditions_checked} stable-set conditions hold"
    rec = verdict.witness
    members = "{" + ",".join(str(v) for v in sorted(rec.members)) + "}"
    nbhd = "{" + ",".join(str(v) for v in sorted(rec.neighborhood)) + "}"
    if rec.family is Family.COVERING:
        relation = "must equal"
        failure = f"{verdict.lhs} != {verdict.rhs}"
    else:
        relation = "must be strictly less than"
        failure = f"{verdict.lhs} >= {verdict.rhs}"
    lines = [
        f"infeasible: stable set {members} ({rec.family.value}) violates its condition",
        f"  sum of squares over {members} {relation} sum over neighborhood {nbhd}",
        f"  {failure}",
    ]
    if len(verdict.violations) > 1:
        lines.append(f"  ({len(verdict.violations)} violated conditions in total)")
    return "\n".join(lines)
