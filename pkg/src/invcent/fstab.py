"""Fractional stable set polytope vertices and the ray scan.

FSTAB = {y >= 0, y_i + y_j <= 1 on edges} has vertices with entries in
{0, 1/2, 1}: the ones form a stable set S, the zeros cover N(S), and
every connected component induced by the halves contains an odd cycle.
Mapping x = 2y - 1 sends the nonzero vertices onto the extreme rays of
the cone {x : x_i + x_j <= 0 on edges}; scanning qᵀx <= 0 over those
rays decides feasibility of the shifted weight system at a given eps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from .errors import ResourceLimitError, ValidationError
from .graphs import Graph, has_odd_cycle, induced_components, vertices_of
from .stable_sets import _stable_masks
from .targets import CentralityTarget

DEFAULT_VERTEX_BOUND = 14

HALF = Fraction(1, 2)
ONE = Fraction(1)
ZERO = Fraction(0)


class RayClass(Enum):
    NONPOSITIVE = "nonpositive"  # entries in {-1, 0}
    PLUS_MINUS = "plus-minus"  # entries in {-1, 1}
    MIXED = "mixed"  # both a zero and a one present


@dataclass(frozen=True)
class FstabVertex:
    coords: Tuple[Fraction, ...]
    ones: FrozenSet[int]
    zeros: FrozenSet[int]
    halves: FrozenSet[int]


@dataclass(frozen=True)
class ExtremeRay:
    coords: Tuple[int, ...]  # entries in {-1, 0, 1}

    @property
    def ray_class(self) -> RayClass:
        if 1 not in self.coords:
            return RayClass.NONPOSITIVE
        if 0 not in self.coords:
            return RayClass.PLUS_MINUS
        return RayClass.MIXED


@dataclass(frozen=True)
class RayViolation:
    ray: ExtremeRay
    ray_class: RayClass
    value: Fraction  # qᵀx, positive for a violation


@dataclass(frozen=True)
class FarkasScan:
    passed: bool
    epsilon: Fraction
    checked: int
    first_violation: Optional[RayViolation]
    violations: Tuple[RayViolation, ...]


def _half_masks(g: Graph, pool_mask: int) -> List[int]:
    """Subsets H of the pool whose induced components all have odd cycles."""
    pool = sorted(vertices_of(pool_mask))
    out = []
    for size in range(0, len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            members = frozenset(combo)
            if all(has_odd_cycle(g, comp) for comp in induced_components(g, members)):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                out.append(mask)
    return out


def enumerate_fstab_vertices(
    g: Graph, bound: int = DEFAULT_VERTEX_BOUND
) -> List[FstabVertex]:
    """All FSTAB vertices, built from the {0, 1/2, 1} characterization.

    Iterates stable sets (including the empty one) as the ones-part and
    odd-cycle-component subsets of the untouched vertices as the halves;
    everything else is zero. Results are sorted by coordinate vector.
    """
    if g.n > bound:
        raise ResourceLimitError(
            f"vertex enumeration bound is {bound} vertices, graph has {g.n}"
        )
    seen = set()
    vertices = []
    ones_choices = [(0, 0)] + list(_stable_masks(g))
    for smask, nbhd in ones_choices:
        pool = g.full_mask() & ~smask & ~nbhd
        for hmask in _half_masks(g, pool):
            key = (smask, hmask)
            if key in seen:
                continue
            seen.add(key)
            coords = tuple(
                ONE if (smask >> v) & 1 else HALF if (hmask >> v) & 1 else ZERO
                for v in g.vertices()
            )
            vertices.append(
                FstabVertex(
                    coords=coords,
                    ones=vertices_of(smask),
                    zeros=vertices_of(g.full_mask() & ~smask & ~hmask),
                    halves=vertices_of(hmask),
                )
            )
    vertices.sort(key=lambda v: v.coords)
    return vertices


def extreme_rays(g: Graph, bound: int = DEFAULT_VERTEX_BOUND) -> List[ExtremeRay]:
    """Extreme rays of {x : x_i + x_j <= 0 on edges}, via x = 2y - 1.

    The all-zeros FSTAB vertex maps to the all-(-1) ray and is kept; the
    excluded point is the null vector (image of the all-halves vertex,
    when that vertex exists).
    """
    rays = []
    for v in enumerate_fstab_vertices(g, bound):
        coords = tuple(int(2 * y - 1) for y in v.coords)
        if any(coords):
            rays.append(ExtremeRay(coords=coords))
    return rays


def shift_vector(g: Graph, c: CentralityTarget, eps: Fraction | int) -> Tuple[Fraction, ...]:
    """q(eps): squared targets minus eps times the coupling sums."""
    eps = Fraction(eps)
    out = []
    for j in g.vertices():
        coupling = sum((c.value(i) * c.value(j) for i in g.neighbors(j)), Fraction(0))
        out.append(c.square(j) - eps * coupling)
    return tuple(out)


def farkas_scan(
    g: Graph,
    c: CentralityTarget,
    eps: Fraction | int,
    full: bool = False,
    bound: int = DEFAULT_VERTEX_BOUND,
) -> FarkasScan:
    """Check qᵀx <= 0 over every extreme ray at the given eps.

    Passing is equivalent to feasibility of the shifted weight system at
    eps. Rays are scanned in canonical (sorted) order; with full=True the
    scan continues past the first violation and reports all of them.
    """
    if c.n != g.n:
        raise ValidationError(f"target has {c.n} entries, graph has {g.n} vertices")
    eps = Fraction(eps)
    if eps < 0:
        raise ValidationError(f"eps must be nonnegative, got {eps}")
    q = shift_vector(g, c, eps)
    violations = []
    checked = 0
    for ray in extreme_rays(g, bound):
        checked += 1
        value = sum((qj * xj for qj, xj in zip(q, ray.coords)), Fraction(0))
        if value > 0:
            violations.append(RayViolation(ray=ray, ray_class=ray.ray_class, value=value))
            if not full:
                break
    return FarkasScan(
        passed=not violations,
        epsilon=eps,
        checked=checked,
        first_violation=violations[0] if violations else None,
        violations=tuple(violations),
    )


def brute_force_vertices(g: Graph) -> List[Tuple[Fraction, ...]]:
    """Vertex oracle: basic feasible solutions of the FSTAB inequalities.

    Enumerates n-subsets of the constraints {y_i >= 0} and
    {y_i + y_j <= 1}, keeps the subsets of full rank, solves the active
    equality system, and filters by feasibility. Independent of the
    constructive enumeration; intended for small n only.
    """
    if g.n > 8:
        raise ResourceLimitError("brute-force vertex oracle is limited to n <= 8")
    n = g.n
    # Constraint list: (coefficient row, rhs) with the row active as equality.
    cons: list[tuple[tuple[int, ...], int]] = []
    for v in range(n):
        row = [0] * n
        row[v] = 1
        cons.append((tuple(row), 0))  # y_v = 0 when active
    for i, j in g.edges:
        row = [0] * n
        row[i - 1] = 1
        row[j - 1] = 1
        cons.append((tuple(row), 1))  # y_i + y_j = 1 when active

    found = set()
    # Depth-first over constraint subsets in index order, keeping a
    # row-reduced copy so rank-deficient branches die immediately.
    def extend(start: int, rref: list[list[Fraction]], chosen: int) -> None:
        if chosen == n:
            point = _solve_rref(rref, n)
            if point is not None and _fstab_feasible(g, point):
                found.add(point)
            return
        for idx in range(start, len(cons)):
            if len(cons) - idx < n - chosen:
                break
            row, rhs = cons[idx]
            reduced = _reduce_against(rref, row, rhs, n)
            if reduced is None:
                continue
            rref.append(reduced)
            extend(idx + 1, rref, chosen + 1)
            rref.pop()

    extend(0, [], 0)
    return sorted(found)


def _reduce_against(
    rref: list[list[Fraction]], row: Tuple[int, ...], rhs: int, n: int
) -> Optional[list[Fraction]]:
    """Reduce (row | rhs) against the current echelon rows; None if dependent."""
    work = [Fraction(x) for x in row] + [Fraction(rhs)]
    for basis_row in rref:
        lead = next(k for k in range(n) if basis_row[k])
        f = work[lead]
        if f:
            work = [a - f * b for a, b in zip(work, basis_row)]
    lead = next((k for k in range(n) if work[k]), None)
    if lead is None:
        return None
    inv = 1 / work[lead]
    return [a * inv for a in work]


def _solve_rref(rref: list[list[Fraction]], n: int) -> Optional[Tuple[Fraction, ...]]:
    """Back-substitute a full-rank echelon system into a point."""
    rows = [list(r) for r in rref]
    rows.sort(key=lambda r: next(k for k in range(n) if r[k]))
    x = [Fraction(0)] * n
    for r in reversed(rows):
        lead = next(k for k in range(n) if r[k])
        x[lead] = r[n] - sum(r[k] * x[k] for k in range(lead + 1, n))
    return tuple(x)


def _fstab_feasible(g: Graph, y: Tuple[Fraction, ...]) -> bool:
    if any(v < 0 for v in y):
        return False
    return all(y[i - 1] + y[j - 1] <= 1 for i, j in g.edges)
