"""Graph and target generators for experiments, tests, and the CLI.

Everything here is deterministic given the seed. The exhaustive
generator walks edge subsets of the complete graph and keeps the
connected ones, which is the instance family the cross-check experiments
run on.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterator, List, Tuple

from .errors import ValidationError
from .graphs import Edge, Graph
from .targets import CentralityTarget


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def star_graph(n: int) -> Graph:
    """Star with center 1 and leaves 2..n."""
    return Graph.from_edges(n, [(1, j) for j in range(2, n + 1)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    """Parts {1..p} and {p+1..p+q}."""
    edges = [(i, p + j) for i in range(1, p + 1) for j in range(1, q + 1)]
    return Graph.from_edges(p + q, edges)


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on vertices 1..n.

    Generated as edge subsets of the complete graph, connectivity
    filtered; subsets leaving an isolated vertex are dropped by the
    connectivity test.
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if n == 1:
        yield Graph.from_edges(1, [])
        return
    for picks in itertools.product((False, True), repeat=len(pairs)):
        edges = [e for e, take in zip(pairs, picks) if take]
        if len(edges) < n - 1:
            continue
        if _connected(n, edges):
            yield Graph.from_edges(n, edges)


def _connected(n: int, edges: List[Edge]) -> bool:
    parent = list(range(n + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = n
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            comps -= 1
    return comps == 1


def random_connected_graph(n: int, rng: random.Random, extra_edges: int | None = None) -> Graph:
    """Random spanning tree plus a few extra edges."""
    edges = set()
    vertices = list(range(1, n + 1))
    rng.shuffle(vertices)
    for k in range(1, n):
        other = vertices[rng.randrange(k)]
        v = vertices[k]
        edges.add((v, other) if v < other else (other, v))
    if extra_edges is None:
        extra_edges = rng.randrange(0, max(1, n))
    candidates = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if (i, j) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    return Graph.from_edges(n, sorted(edges))


def random_target(
    n: int, rng: random.Random, max_numerator: int = 9, max_denominator: int = 4
) -> CentralityTarget:
    """Random positive rational vector with small numerators/denominators."""
    return CentralityTarget.from_values(
        Fraction(rng.randint(1, max_numerator), rng.randint(1, max_denominator))
        for _ in range(n)
    )


def structured_instance(kind: str, n: int, seed: int = 0) -> tuple[Graph, CentralityTarget, str]:
    """Graph plus a target for the CLI generator.

    For the four closed-form structures the target is constructed to
    satisfy the corresponding feasibility condition exactly; for
    random-connected it is sampled and left unclassified. Returns
    (graph, target, label).
    """
    if n < 2:
        raise ValidationError("generator requires n >= 2")
    if kind == "complete":
        return complete_graph(n), CentralityTarget.from_values([1] * n), "feasible"
    if kind == "star":
        return star_graph(n), _star_target(n), "feasible"
    if kind == "chain":
        return path_graph(n), _chain_target(n), "feasible"
    if kind == "bipartite":
        p = (n + 1) // 2
        q = n - p
        return complete_bipartite_graph(p, q), _bipartite_target(p, q), "feasible"
    if kind == "random-connected":
        rng = random.Random(seed)
        g = random_connected_graph(n, rng)
        return g, random_target(n, rng), "unclassified"
    raise ValidationError(f"unknown structure kind: {kind!r}")


def _star_target(n: int) -> CentralityTarget:
    # center^2 must equal the sum of leaf squares
    if n == 2:
        return CentralityTarget.from_values([1, 1])
    if n == 3:
        return CentralityTarget.from_values([5, 3, 4])
    half = Fraction(n - 1, 2), Fraction(n - 3, 2)
    values = [half[0]] + [Fraction(1)] * (n - 2) + [half[1]]
    return CentralityTarget.from_values(values)


def _chain_target(n: int) -> CentralityTarget:
    # alternating prefix sums strictly interleave, final totals tie
    if n == 2:
        return CentralityTarget.from_values([1, 1])
    if n == 3:
        return CentralityTarget.from_values([3, 5, 4])
    values = [Fraction(k) for k in range(1, n - 1)]
    gap = Fraction(0)
    for k in range(1, n - 1):  # gap g_k = k^2 - g_{k-1}, g_0 = 0
        gap = Fraction(k * k) - gap
    values.append((gap + 1) / 2)
    values.append((gap - 1) / 2)
    return CentralityTarget.from_values(values)


def _bipartite_target(p: int, q: int) -> CentralityTarget:
    if p == q:
        return CentralityTarget.from_values([1] * (p + q))
    # p = q + 1: all ones except one entry per part, chosen so the part
    # sums of squares agree: (5/4)^2 - (3/4)^2 = 1.
    assert p == q + 1
    left = [Fraction(1)] * (p - 1) + [Fraction(3, 4)]
    right = [Fraction(1)] * (q - 1) + [Fraction(5, 4)]
    return CentralityTarget.from_values(left + right)
