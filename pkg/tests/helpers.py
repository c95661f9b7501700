"""Brute-force oracles and hypothesis strategies shared by the tests.

The oracles here deliberately avoid the package's own algorithms: stable
sets come from scanning all subsets, bipartiteness from trying every
2-coloring, LP optima from enumerating basic solutions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from invcent.graphs import Graph


def brute_stable_sets(g: Graph) -> list[frozenset]:
    """All nonempty stable sets by scanning every vertex subset."""
    out = []
    vertices = list(g.vertices())
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(vertices, size):
            if all(not g.has_edge(i, j) for i, j in itertools.combinations(combo, 2)):
                out.append(frozenset(combo))
    return out


def brute_neighborhood(g: Graph, s) -> frozenset:
    s = set(s)
    return frozenset(
        j for j in g.vertices() if j not in s and any(g.has_edge(i, j) for i in s)
    )


def brute_is_covering(g: Graph, s) -> bool:
    s = set(s)
    return all(i in s or j in s for i, j in g.edges)


def brute_bipartite(g: Graph, vertices) -> bool:
    """Exhaustive 2-coloring of the induced subgraph."""
    members = sorted(vertices)
    edges = [(i, j) for i, j in g.edges if i in set(members) and j in set(members)]
    for colors in itertools.product((0, 1), repeat=len(members)):
        cmap = dict(zip(members, colors))
        if all(cmap[i] != cmap[j] for i, j in edges):
            return True
    return False


def brute_reduced_family(g: Graph) -> set[frozenset]:
    """Survivors of the two redundancy prunings, checked by definition."""
    stable = brute_stable_sets(g)
    s2 = [s for s in stable if not brute_is_covering(g, s)]
    stable_set = set(stable)
    survivors = set()
    for s in s2:
        ns = brute_neighborhood(g, s)
        splittable = False
        members = sorted(s)
        for size in range(1, len(members)):
            for part in itertools.combinations(members, size):
                s1 = frozenset(part)
                s2_ = frozenset(s) - s1
                if not (brute_neighborhood(g, s1) & brute_neighborhood(g, s2_)):
                    splittable = True
                    break
            if splittable:
                break
        extendable = any(
            s < sup and brute_neighborhood(g, sup) == ns for sup in stable_set
        )
        if not splittable and not extendable:
            survivors.add(frozenset(s))
    return survivors


def _rank(rows: list[list[Fraction]]) -> int:
    work = [list(r) for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def brute_lp_optimum(constraints, rhs, objective):
    """Oracle for max objᵀx over {Ax = b, x >= 0}: scan basic solutions.

    Returns ("infeasible", None) or ("feasible", best basic value). For a
    bounded feasible LP the optimum is attained at a basic feasible
    solution, so the best value equals the true optimum.
    """
    m = len(constraints)
    n = len(objective)
    a = [[Fraction(x) for x in row] for row in constraints]
    b = [Fraction(x) for x in rhs]
    rank = _rank([row + [bb] for row, bb in zip(a, b)]) if m else 0
    arank = _rank(a) if m else 0
    if m and arank < rank:
        return "infeasible", None
    best = None
    for cols in itertools.combinations(range(n), arank):
        sub = [[a[r][c] for c in cols] for r in range(m)]
        if _rank(sub) < arank:
            continue
        x = _solve_least(sub, b)
        if x is None:
            continue
        if any(v < 0 for v in x):
            continue
        full = [Fraction(0)] * n
        for c, v in zip(cols, x):
            full[c] = v
        if any(
            sum(a[r][j] * full[j] for j in range(n)) != b[r] for r in range(m)
        ):
            continue
        value = sum(Fraction(objective[j]) * full[j] for j in range(n))
        if best is None or value > best:
            best = value
    if best is None and arank == 0:
        # no constraints bind; x = 0 is feasible
        if all(bb == 0 for bb in b):
            best = Fraction(0)
    return ("feasible", best) if best is not None else ("infeasible", None)


def _solve_least(a: list[list[Fraction]], b: list[Fraction]):
    """Solve a (possibly overdetermined) consistent system; None if inconsistent."""
    m = len(a)
    n = len(a[0]) if a else 0
    work = [list(row) + [bb] for row, bb in zip(a, b)]
    pivots = []
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, m) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(m):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [u - f * v for u, v in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, m):
        if work[r][n]:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = work[r][n]
    return x


# ---------------------------------------------------------------------------
# hypothesis strategies

positive_rationals = st.fractions(
    min_value=Fraction(1, 8), max_value=Fraction(9), max_denominator=8
)


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {e for e, take in zip(pairs, picks) if take}
    order = draw(st.permutations(list(range(1, n + 1))))
    for k in range(1, n):
        i, j = order[k - 1], order[k]
        edges.add((i, j) if i < j else (j, i))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graph_with_target(draw, min_n=2, max_n=7):
    from invcent.targets import CentralityTarget

    g = draw(connected_graphs(min_n=min_n, max_n=max_n))
    values = draw(
        st.lists(positive_rationals, min_size=g.n, max_size=g.n)
    )
    return g, CentralityTarget.from_values(values)
