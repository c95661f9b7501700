"""Closed-form feasibility for structured graphs.

Complete graphs, complete bipartite graphs, stars, and chains admit
closed-form conditions equivalent to the general stable-set system;
detecting them gives both a fast path and an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, Optional, Sequence, Tuple

from .errors import PreconditionError
from .graphs import Graph, bipartition
from .targets import CentralityTarget


class StructureKind(Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    STAR = "star"
    CHAIN = "chain"
    GENERAL = "general"


@dataclass(frozen=True)
class StructureTag:
    kind: StructureKind
    parts: Optional[Tuple[FrozenSet[int], FrozenSet[int]]] = None  # bipartite
    center: Optional[int] = None  # star
    order: Optional[Tuple[int, ...]] = None  # chain, endpoint to endpoint


def detect_structure(g: Graph) -> StructureTag:
    """Most specific structure tag for g.

    Precedence: complete > star > complete bipartite > chain > general.
    Complete requires n >= 3: on two vertices every stable set covers the
    single edge, so the equality rule (the star/bipartite one) applies,
    not the complete-graph inequality.
    """
    n = g.n
    if n >= 3 and g.m == n * (n - 1) // 2:
        return StructureTag(kind=StructureKind.COMPLETE)

    degrees = [g.degree(v) for v in g.vertices()]
    centers = [v for v in g.vertices() if g.degree(v) == n - 1]
    if n >= 2 and centers and all(
        g.degree(v) == 1 for v in g.vertices() if v != centers[0]
    ):
        return StructureTag(kind=StructureKind.STAR, center=centers[0])

    parts = bipartition(g)
    if parts is not None:
        p, q = parts
        if g.m == len(p) * len(q):
            return StructureTag(kind=StructureKind.COMPLETE_BIPARTITE, parts=(p, q))

    if n >= 2 and sorted(degrees) == [1, 1] + [2] * (n - 2):
        ends = [v for v in g.vertices() if g.degree(v) == 1]
        order = [min(ends)]
        prev = None
        while len(order) < n:
            nxt = next(u for u in g.neighbors(order[-1]) if u != prev)
            prev = order[-1]
            order.append(nxt)
        return StructureTag(kind=StructureKind.CHAIN, order=tuple(order))

    return StructureTag(kind=StructureKind.GENERAL)


def check_complete(c: CentralityTarget) -> bool:
    """Feasible on a complete graph iff 2 max c_j^2 < sum c_j^2."""
    return 2 * max(c.squares) < sum(c.squares)


def check_complete_bipartite(
    c: CentralityTarget, parts: Tuple[FrozenSet[int], FrozenSet[int]]
) -> bool:
    """Feasible on a complete bipartite graph iff the part sums of squares tie."""
    p, q = parts
    return c.sum_squares(p) == c.sum_squares(q)


def check_star(c: CentralityTarget, center: int) -> bool:
    """Feasible on a star iff the center square equals the leaf square sum."""
    leaves = [v for v in range(1, c.n + 1) if v != center]
    return c.square(center) == c.sum_squares(leaves)


def check_chain(c: CentralityTarget, order: Sequence[int]) -> bool:
    """Feasible on a path iff the alternating prefix sums interleave.

    Walking the path, t_k = sum of squares of every other vertex ending
    at position k. The condition is t_1 < t_2 < ... < t_{n-1} and
    t_n = t_{n-1}, i.e. the odd- and even-position totals tie at the end.
    """
    n = len(order)
    if n != c.n:
        raise PreconditionError("chain order must list every vertex")
    prefix = []
    for k, v in enumerate(order):
        prev = prefix[k - 2] if k >= 2 else Fraction(0)
        prefix.append(prev + c.square(v))
    for k in range(n - 2):
        if not prefix[k] < prefix[k + 1]:
            return False
    if n >= 2 and prefix[n - 1] != prefix[n - 2]:
        return False
    return True


def check_structured(g: Graph, c: CentralityTarget, tag: StructureTag) -> bool:
    """Dispatch the closed-form check for a detected structure."""
    if tag.kind is StructureKind.COMPLETE:
        return check_complete(c)
    if tag.kind is StructureKind.STAR:
        return check_star(c, tag.center)
    if tag.kind is StructureKind.COMPLETE_BIPARTITE:
        return check_complete_bipartite(c, tag.parts)
    if tag.kind is StructureKind.CHAIN:
        return check_chain(c, tag.order)
    raise PreconditionError("no closed form for a general graph")
