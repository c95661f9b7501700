"""Enumeration and classification of nonempty stable sets.

Every nonempty stable set induces one constraint on the squared target
values: stable sets touching every edge of the graph (family S1) induce
an equality, the rest (family S2) a strict inequality. The reduction
drops S2 sets whose inequalities are implied by others.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterator, Sequence, Tuple

from .errors import PreconditionError, ResourceLimitError
from .graphs import Graph, is_stable, mask_of, vertices_of

DEFAULT_ENUM_BOUND = 25


class Family(Enum):
    """Constraint family of a stable set; values are the wire tokens."""

    COVERING = "S1"  # every edge has an endpoint in the set -> equality
    NON_COVERING = "S2"  # some edge avoids the set -> strict inequality


@dataclass(frozen=True)
class StableSetRecord:
    members: FrozenSet[int]
    neighborhood: FrozenSet[int]
    family: Family
    mask: int  # bitmask of members; enumeration/order key


def _stable_masks(g: Graph) -> Iterator[tuple[int, int]]:
    """Yield (set_mask, neighborhood_mask) for every nonempty stable set.

    Masks come out in ascending numeric order, which is the canonical
    enumeration order used for deterministic witness selection.
    """
    adj_masks = g.adj_masks

    def rec(k: int, cur: int, nbhd: int) -> Iterator[tuple[int, int]]:
        if k == 0:
            if cur:
                yield cur, nbhd
            return
        yield from rec(k - 1, cur, nbhd)
        bit = 1 << k
        if not nbhd & bit:
            yield from rec(k - 1, cur | bit, nbhd | adj_masks[k])

    return rec(g.n, 0, 0)


def _is_covering(g: Graph, smask: int) -> bool:
    # S touches every edge iff the complement V\S induces no edge.
    rest = g.full_mask() & ~smask
    scan = rest
    while scan:
        v = (scan & -scan).bit_length() - 1
        scan &= scan - 1
        if g.adj_masks[v] & rest:
            return False
    return True


def _record(g: Graph, smask: int, nbhd: int) -> StableSetRecord:
    family = Family.COVERING if _is_covering(g, smask) else Family.NON_COVERING
    return StableSetRecord(
        members=vertices_of(smask),
        neighborhood=vertices_of(nbhd),
        family=family,
        mask=smask,
    )


def enumerate_stable_sets(
    g: Graph, bound: int = DEFAULT_ENUM_BOUND
) -> Iterator[StableSetRecord]:
    """Yield every nonempty stable set exactly once, in canonical order."""
    if g.n > bound:
        raise ResourceLimitError(
            f"stable-set enumeration bound is {bound} vertices, graph has {g.n}"
        )
    for smask, nbhd in _stable_masks(g):
        yield _record(g, smask, nbhd)


def classify(g: Graph, s: FrozenSet[int] | Sequence[int]) -> Family:
    """Family of a nonempty stable set s."""
    members = frozenset(s)
    if not members:
        raise PreconditionError("cannot classify the empty set")
    if not is_stable(g, members):
        raise PreconditionError(f"set {sorted(members)} is not stable")
    smask = mask_of(members)
    return Family.COVERING if _is_covering(g, smask) else Family.NON_COVERING


def _splittable(g: Graph, smask: int) -> bool:
    """True iff S partitions into S', S'' with disjoint neighborhoods.

    Equivalent to disconnectedness of the overlap graph on members of S
    (u ~ v iff N({u}) and N({v}) intersect).
    """
    members = []
    rest = smask
    while rest:
        members.append((rest & -rest).bit_length() - 1)
        rest &= rest - 1
    if len(members) <= 1:
        return False
    reached = {members[0]}
    frontier = [members[0]]
    while frontier:
        v = frontier.pop()
        for u in members:
            if u not in reached and g.adj_masks[v] & g.adj_masks[u]:
                reached.add(u)
                frontier.append(u)
    return len(reached) < len(members)


def _extendable(g: Graph, smask: int, nbhd: int) -> bool:
    """True iff some stable superset of S has the same neighborhood.

    Any such superset can be grown one vertex at a time, so it suffices
    to look for a single vertex outside S and N(S) whose neighbors all
    lie in N(S).
    """
    pool = g.full_mask() & ~smask & ~nbhd
    while pool:
        v = (pool & -pool).bit_length() - 1
        pool &= pool - 1
        if not g.adj_masks[v] & ~nbhd:
            return True
    return False


def reduce_family(
    g: Graph, records: Sequence[StableSetRecord]
) -> Tuple[StableSetRecord, ...]:
    """Drop redundant S2 records, keeping the reduced family.

    A record is redundant if its set splits into parts with disjoint
    neighborhoods (its inequality is the sum of the parts') or if a
    stable strict superset has the same neighborhood (its inequality is
    implied by the superset's condition).
    """
    survivors = []
    for rec in records:
        if rec.family is not Family.NON_COVERING:
            raise PreconditionError("reduce_family expects only S2 records")
        nbhd_mask = mask_of(rec.neighborhood)
        if _splittable(g, rec.mask):
            continue
        if _extendable(g, rec.mask, nbhd_mask):
            continue
        survivors.append(rec)
    return tuple(survivors)


def reduced_family(g: Graph, bound: int = DEFAULT_ENUM_BOUND) -> Tuple[StableSetRecord, ...]:
    """Enumerate, keep the S2 family, and reduce it."""
    s2 = [r for r in enumerate_stable_sets(g, bound) if r.family is Family.NON_COVERING]
    return reduce_family(g, s2)
