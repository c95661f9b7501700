"""Cross-check experiments between the independent decision procedures.

The combinatorial checker, the exact LP, and the ray scan must agree on
every instance; these sweeps run the agreement checks over exhaustive
families of small connected graphs with randomized rational targets.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .feasibility import check_feasibility
from .fstab import farkas_scan
from .graphs import Graph
from .instances import all_connected_graphs, random_target
from .targets import CentralityTarget
from .weight_lp import LpStatus, solve_max_min_weight

Disagreement = Tuple[int, Tuple, Tuple, str]


@dataclass(frozen=True)
class SweepStats:
    graphs: int
    instances: int
    disagreements: Tuple[Disagreement, ...]


def _targets_for(n: int, seed: str, count: int) -> List[CentralityTarget]:
    rng = random.Random(seed)
    return [random_target(n, rng) for _ in range(count)]


def _equivalence_chunk(args) -> tuple[int, list[Disagreement]]:
    n, edge_lists, seed, targets_per_graph = args
    bad: list[Disagreement] = []
    count = 0
    for idx, edges in edge_lists:
        g = Graph.from_edges(n, edges)
        for c in _targets_for(n, f"{seed}:{n}:{idx}", targets_per_graph):
            count += 1
            combinatorial = check_feasibility(g, c).feasible
            lp = solve_max_min_weight(g, c)
            strict = lp.status is LpStatus.STRICTLY_FEASIBLE
            if combinatorial != strict:
                bad.append((n, tuple(edges), tuple(c.values), "checker-vs-lp"))
    return count, bad


def equivalence_sweep(
    max_n: int = 6,
    targets_per_graph: int = 20,
    seed: int = 0,
    workers: int = 1,
) -> SweepStats:
    """Checker vs LP strict-feasibility over all connected graphs up to max_n."""
    graphs = 0
    instances = 0
    bad: list[Disagreement] = []
    for n in range(2, max_n + 1):
        batch = [(idx, g.edges) for idx, g in enumerate(all_connected_graphs(n))]
        graphs += len(batch)
        if workers <= 1 or len(batch) < 64:
            count, found = _equivalence_chunk((n, batch, seed, targets_per_graph))
            instances += count
            bad.extend(found)
        else:
            chunk_size = (len(batch) + workers * 8 - 1) // (workers * 8)
            chunks = [
                (n, batch[k : k + chunk_size], seed, targets_per_graph)
                for k in range(0, len(batch), chunk_size)
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for count, found in pool.map(_equivalence_chunk, chunks):
                    instances += count
                    bad.extend(found)
    return SweepStats(graphs=graphs, instances=instances, disagreements=tuple(bad))


def proof_chain_sweep(
    max_n: int = 5,
    targets_per_graph: int = 20,
    seed: int = 0,
) -> SweepStats:
    """LP optimum vs ray scan over all connected graphs up to max_n.

    For each instance: when eps* > 0 the scan must pass at eps*/2 and the
    checker must agree; the scan must fail (exhibit a violated ray) at
    any eps strictly above eps*, and at eps = 0 for LP-infeasible
    systems.
    """
    graphs = 0
    instances = 0
    bad: list[Disagreement] = []
    for n in range(2, max_n + 1):
        for idx, g in enumerate(all_connected_graphs(n)):
            graphs += 1
            for c in _targets_for(n, f"{seed}:{n}:{idx}", targets_per_graph):
                instances += 1
                lp = solve_max_min_weight(g, c)
                feasible = check_feasibility(g, c).feasible
                problem = _proof_chain_instance(g, c, lp, feasible)
                if problem is not None:
                    bad.append((n, tuple(g.edges), tuple(c.values), problem))
    return SweepStats(graphs=graphs, instances=instances, disagreements=tuple(bad))


def _proof_chain_instance(g, c, lp, feasible: bool) -> str | None:
    if lp.status is LpStatus.INFEASIBLE:
        if farkas_scan(g, c, 0).passed:
            return "scan passed at 0 on an infeasible system"
        if feasible:
            return "checker feasible but LP infeasible"
        return None
    eps_star = lp.epsilon_star
    if eps_star > 0:
        if not farkas_scan(g, c, eps_star / 2).passed:
            return "scan failed below eps*"
        if not feasible:
            return "scan passed but checker infeasible"
    else:
        if feasible:
            return "checker feasible on a boundary-only system"
    above = farkas_scan(g, c, eps_star + 1, full=False)
    if above.passed:
        return "scan passed above eps*"
    if above.first_violation is None:
        return "failed scan reported no violated ray"
    return None
