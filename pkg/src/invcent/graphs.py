"""Connected simple undirected graphs with 1-indexed vertices.

Vertices are 1..n everywhere (matching the I/O formats); bitmask
representations use bit v for vertex v, bit 0 unused.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from .errors import ParseError, PreconditionError, ValidationError

Edge = Tuple[int, int]


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with bit v set for each vertex v."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> FrozenSet[int]:
    """Vertex set encoded by a bitmask."""
    out = []
    v = 0
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.append(v)
        mask &= mask - 1
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph on vertices 1..n.

    Immutable after construction; build via :meth:`from_edges` or
    :func:`parse_graph`, which validate the invariants (no self-loops,
    no duplicates, connectivity).
    """

    n: int
    edges: Tuple[Edge, ...]  # sorted pairs (i, j) with i < j
    adj: Tuple[FrozenSet[int], ...]  # adj[v] = neighbors of v; adj[0] unused
    adj_masks: Tuple[int, ...]  # adj_masks[v] = bitmask of neighbors of v

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        if n < 1:
            raise ValidationError(f"vertex count must be >= 1, got {n}")
        normalized = []
        seen = set()
        for i, j in edges:
            if i == j:
                raise ValidationError(f"self-loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValidationError(f"edge ({i},{j}) out of range 1..{n}")
            e = (i, j) if i < j else (j, i)
            if e in seen:
                raise ValidationError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        normalized.sort()
        neighbors = [set() for _ in range(n + 1)]
        for i, j in normalized:
            neighbors[i].add(j)
            neighbors[j].add(i)
        adj = tuple(frozenset(s) for s in neighbors)
        g = cls(
            n=n,
            edges=tuple(normalized),
            adj=adj,
            adj_masks=tuple(mask_of(s) for s in adj),
        )
        if not g.is_connected():
            raise ValidationError("graph is not connected")
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def full_mask(self) -> int:
        return ((1 << self.n) - 1) << 1

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = 1 << 1
        queue = deque([1])
        while queue:
            v = queue.popleft()
            new = self.adj_masks[v] & ~seen
            seen |= new
            while new:
                u = (new & -new).bit_length() - 1
                new &= new - 1
                queue.append(u)
        return seen == self.full_mask()


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    First content line is "n m"; each following line "i j" with
    1 <= i < j <= n. Lines starting with '#' and blank lines are skipped.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty graph document")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"header must be two integers, got {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"declared {m} edges, found {len(lines) - 1} edge lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be 'i j', got {ln!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"edge line must be two integers, got {ln!r}") from exc
        if i >= j:
            raise ValidationError(f"edge endpoints must satisfy i < j, got ({i},{j})")
        edges.append((i, j))
    return Graph.from_edges(n, edges)


def external_neighborhood(g: Graph, s: Iterable[int]) -> FrozenSet[int]:
    """Vertices outside s adjacent to at least one member of s."""
    smask = mask_of(s)
    nbhd = 0
    rest = smask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        nbhd |= g.adj_masks[v]
    return vertices_of(nbhd & ~smask)


def is_stable(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of g has both endpoints in s."""
    smask = mask_of(s)
    rest = smask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if g.adj_masks[v] & smask:
            return False
    return True


def induced_components(g: Graph, s: Iterable[int]) -> list[FrozenSet[int]]:
    """Connected components of the subgraph induced by s."""
    smask = mask_of(s)
    comps = []
    rest = smask
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = 1 << start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            new = g.adj_masks[v] & smask & ~comp
            comp |= new
            while new:
                u = (new & -new).bit_length() - 1
                new &= new - 1
                queue.append(u)
        comps.append(vertices_of(comp))
        rest &= ~comp
    return comps


def has_odd_cycle(g: Graph, s: Iterable[int]) -> bool:
    """True iff the connected subgraph induced by s contains an odd cycle.

    Decided by 2-coloring. Raises PreconditionError if the induced
    subgraph is not connected.
    """
    members = frozenset(s)
    if not members:
        raise PreconditionError("odd-cycle check requires a nonempty vertex set")
    comps = induced_components(g, members)
    if len(comps) != 1:
        raise PreconditionError("induced subgraph is not connected")
    smask = mask_of(members)
    color = {}
    start = next(iter(members))
    color[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if not (smask >> u) & 1:
                continue
            if u not in color:
                color[u] = color[v] ^ 1
                queue.append(u)
            elif color[u] == color[v]:
                return True
    return False


def bipartition(g: Graph) -> tuple[FrozenSet[int], FrozenSet[int]] | None:
    """Two-color the whole graph; None if it contains an odd cycle.

    The first part is the one containing vertex 1.
    """
    color = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in color:
                color[u] = color[v] ^ 1
                queue.append(u)
            elif color[u] == color[v]:
                return None
    part0 = frozenset(v for v, c in color.items() if c == 0)
    part1 = frozenset(v for v, c in color.items() if c == 1)
    return part0, part1
