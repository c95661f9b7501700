"""Verification that a weight assignment realizes the target exactly.

The authoritative checks are exact: zero rational residual in the
eigen-equations, strictly positive weight on every edge, and an
irreducible (connected-support) matrix. Floating-point power iteration
is attached as a confirmatory diagnostic only; no float threshold can
change the verdict.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple

import numpy as np

from .errors import NotConvergedError, ValidationError
from .graphs import Edge, Graph
from .targets import CentralityTarget

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10**6


@dataclass(frozen=True)
class WeightedAdjacency:
    n: int
    entries: Tuple[Tuple[Fraction, ...], ...]  # symmetric, zero diagonal

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])


@dataclass(frozen=True)
class SpectralReport:
    passed: bool
    exact_residual_zero: bool
    support_full: bool
    irreducible: bool
    rho_estimate: float
    perron_cosine: float
    gap_estimate: float
    converged: bool


def build_matrix(g: Graph, weights: Mapping[Edge, Fraction]) -> WeightedAdjacency:
    """Symmetric weighted adjacency matrix from per-edge weights.

    Weights may be zero (boundary solutions are representable); a missing
    edge raises KeyError.
    """
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        w = Fraction(weights[(i, j)])
        rows[i - 1][j - 1] = w
        rows[j - 1][i - 1] = w
    return WeightedAdjacency(n=g.n, entries=tuple(tuple(r) for r in rows))


def _residual_zero(g: Graph, weights: Mapping[Edge, Fraction], c: CentralityTarget) -> bool:
    """Eigen-equation residual check alone; missing edges count as weight 0."""
    for j in g.vertices():
        total = Fraction(0)
        for i in g.neighbors(j):
            e = (i, j) if i < j else (j, i)
            total += Fraction(weights.get(e, 0)) * c.value(i)
        if total != c.value(j):
            return False
    return True


def _support_full(g: Graph, weights: Mapping[Edge, Fraction]) -> bool:
    return all(e in weights and Fraction(weights[e]) > 0 for e in g.edges)


def verify_exact(g: Graph, weights: Mapping[Edge, Fraction], c: CentralityTarget) -> bool:
    """True iff the eigen-equations hold exactly and every weight is positive."""
    if c.n != g.n:
        raise ValidationError(f"target has {c.n} entries, graph has {g.n} vertices")
    return _support_full(g, weights) and _residual_zero(g, weights, c)


def check_irreducible(a: WeightedAdjacency) -> bool:
    """True iff the support graph of the matrix is connected."""
    if a.n == 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in range(a.n):
            if u not in seen and a.entries[v][u] != 0:
                seen.add(u)
                queue.append(u)
    return len(seen) == a.n


def power_iteration(
    a: WeightedAdjacency,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[float, np.ndarray]:
    """Dominant eigenpair of a nonnegative symmetric matrix.

    Iterates on A + I: a bipartite support graph makes -rho an eigenvalue
    of A and the raw iteration oscillates, while the shift makes rho + 1
    strictly dominant. Returns (rho, unit vector); raises
    NotConvergedError when successive iterates keep differing by >= tol
    in max-norm.
    """
    m = a.to_float() + np.eye(a.n)
    v = np.full(a.n, 1.0 / np.sqrt(a.n))
    for _ in range(max_iter):
        w = m @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            break
        w /= norm
        if np.max(np.abs(w - v)) < tol:
            v = w
            rho = float(v @ (m @ v)) - 1.0
            return rho, v
        v = w
    raise NotConvergedError(f"power iteration did not converge in {max_iter} steps")


def spectral_report(
    g: Graph,
    weights: Mapping[Edge, Fraction],
    c: CentralityTarget,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SpectralReport:
    """Full verification report for a candidate weight assignment.

    Pass/fail depends only on the exact checks; the spectral estimates
    are diagnostics (nan when the iteration is skipped or fails).
    """
    if c.n != g.n:
        raise ValidationError(f"target has {c.n} entries, graph has {g.n} vertices")
    exact = _residual_zero(g, weights, c)
    support = _support_full(g, weights)
    a = build_matrix(g, {e: Fraction(weights.get(e, 0)) for e in g.edges})
    irreducible = check_irreducible(a)

    rho = float("nan")
    cosine = float("nan")
    gap = float("nan")
    converged = False
    if irreducible:
        try:
            rho, v = power_iteration(a, tol=tol, max_iter=max_iter)
            converged = True
            cvec = np.array([float(x) for x in c.values])
            cvec /= np.linalg.norm(cvec)
            cosine = float(v @ cvec)
            gap = _second_modulus_ratio(a, rho, v, tol, max_iter)
        except NotConvergedError:
            pass
    return SpectralReport(
        passed=exact and support and irreducible,
        exact_residual_zero=exact,
        support_full=support,
        irreducible=irreducible,
        rho_estimate=rho,
        perron_cosine=cosine,
        gap_estimate=gap,
        converged=converged,
    )


def _second_modulus_ratio(
    a: WeightedAdjacency, rho: float, v: np.ndarray, tol: float, max_iter: int
) -> float:
    """|second eigenvalue| / rho via one deflation of the shifted matrix."""
    if a.n == 1 or rho <= 0:
        return float("nan")
    m = a.to_float() + np.eye(a.n)
    m -= (rho + 1.0) * np.outer(v, v)
    u = np.full(a.n, 1.0 / np.sqrt(a.n))
    lam = 0.0
    for _ in range(max_iter):
        w = m @ u
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        w /= norm
        done = np.max(np.abs(w - u)) < tol or np.max(np.abs(w + u)) < tol
        u = w
        if done:
            break
    lam = float(u @ (m @ u))
    return abs(lam - 1.0) / rho
