"""Command-line interface: check / solve / verify / fstab / reduce / gen.

Exit codes: 0 = feasible/verified/success, 1 = infeasible or failed
verification (with a witness in the report), 2 = usage, I/O, or parse
errors. JSON mode emits a single document with sorted keys so identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Tuple

from .errors import (
    NotConvergedError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    ValidationError,
)
from .feasibility import check_feasibility, explain
from .fstab import DEFAULT_VERTEX_BOUND, enumerate_fstab_vertices, extreme_rays, farkas_scan
from .graphs import Graph, parse_graph
from .instances import structured_instance
from .special import StructureKind, check_structured, detect_structure
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, spectral_report
from .stable_sets import DEFAULT_ENUM_BOUND, reduced_family
from .targets import CentralityTarget, parse_rational, parse_target
from .weight_lp import LpStatus, solve_max_min_weight

GEN_KINDS = ("complete", "bipartite", "star", "chain", "random-connected")


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph_path: Optional[str] = None
    cvec_path: Optional[str] = None
    weights_path: Optional[str] = None
    kind: Optional[str] = None
    size: int = 0
    reduced: bool = False
    fast: bool = False
    json_out: bool = False
    all_witnesses: bool = False
    rays: bool = False
    scan: Optional[Tuple[str, str]] = None
    full: bool = False
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    seed: int = 0
    enum_bound: int = DEFAULT_ENUM_BOUND
    out_prefix: Optional[str] = None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invcent",
        description="Realize a positive vector as an eigenvector centrality "
        "by choosing strictly positive edge weights.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether the target is realizable")
    p.add_argument("graph")
    p.add_argument("cvec")
    p.add_argument("--reduced", action="store_true", help="check the reduced family")
    p.add_argument("--fast", action="store_true", help="use closed forms on special structures")
    p.add_argument("--all-witnesses", action="store_true", dest="all_witnesses")
    p.add_argument("--json", action="store_true", dest="json_out")
    p.add_argument("--enum-bound", type=int, default=DEFAULT_ENUM_BOUND, dest="enum_bound")

    p = sub.add_parser("solve", help="maximize the minimum edge weight")
    p.add_argument("graph")
    p.add_argument("cvec")
    p.add_argument("--json", action="store_true", dest="json_out")

    p = sub.add_parser("verify", help="verify a weight assignment exactly")
    p.add_argument("graph")
    p.add_argument("cvec")
    p.add_argument("weights")
    p.add_argument("--json", action="store_true", dest="json_out")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER, dest="max_iter")

    p = sub.add_parser("fstab", help="polytope vertices, rays, and the ray scan")
    p.add_argument("graph")
    p.add_argument("--rays", action="store_true")
    p.add_argument("--scan", nargs=2, metavar=("CVEC", "EPS"))
    p.add_argument("--full", action="store_true", help="report every violated ray")
    p.add_argument("--json", action="store_true", dest="json_out")
    p.add_argument("--enum-bound", type=int, default=DEFAULT_VERTEX_BOUND, dest="enum_bound")

    p = sub.add_parser("reduce", help="print the reduced stable-set family")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true", dest="json_out")
    p.add_argument("--enum-bound", type=int, default=DEFAULT_ENUM_BOUND, dest="enum_bound")

    p = sub.add_parser("gen", help="generate a graph plus a target vector")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", dest="out_prefix", help="write PREFIX.graph and PREFIX.cvec")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        graph_path=getattr(args, "graph", None),
        cvec_path=getattr(args, "cvec", None),
        weights_path=getattr(args, "weights", None),
        kind=getattr(args, "kind", None),
        size=getattr(args, "n", 0),
        reduced=getattr(args, "reduced", False),
        fast=getattr(args, "fast", False),
        json_out=getattr(args, "json_out", False),
        all_witnesses=getattr(args, "all_witnesses", False),
        rays=getattr(args, "rays", False),
        scan=tuple(args.scan) if getattr(args, "scan", None) else None,
        full=getattr(args, "full", False),
        tol=getattr(args, "tol", DEFAULT_TOL),
        max_iter=getattr(args, "max_iter", DEFAULT_MAX_ITER),
        seed=getattr(args, "seed", 0),
        enum_bound=getattr(args, "enum_bound", DEFAULT_ENUM_BOUND),
        out_prefix=getattr(args, "out_prefix", None),
    )


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_graph(config: RunConfig) -> Graph:
    return parse_graph(_read(config.graph_path))


def _load_target(path: str) -> CentralityTarget:
    return parse_target(_read(path))


def _load_weights(path: str) -> dict:
    """Weights file: one line per edge, "i j p/q"."""
    weights = {}
    for ln in _read(path).splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"weight line must be 'i j value', got {ln!r}")
        i, j = int(parts[0]), int(parts[1])
        if i >= j:
            raise ValidationError(f"weight endpoints must satisfy i < j, got ({i},{j})")
        key = (i, j)
        if key in weights:
            raise ValidationError(f"duplicate weight for edge {key}")
        weights[key] = parse_rational(parts[2])
    return weights


def _fmt_set(vertices) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertices)) + "}"


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _run_check(config: RunConfig) -> int:
    g = _load_graph(config)
    c = _load_target(config.cvec_path)
    if c.n != g.n:
        raise ValidationError(f"target has {c.n} entries, graph has {g.n} vertices")

    path = "theorem:reduced" if config.reduced else "theorem:full"
    tag = None
    if config.fast:
        tag = detect_structure(g)
        if tag.kind is not StructureKind.GENERAL:
            path = f"corollary:{tag.kind.value}"
            feasible = check_structured(g, c, tag)
            if config.json_out:
                _emit_json(
                    {
                        "feasible": feasible,
                        "witness_set": None,
                        "witness_family": None,
                        "lhs": None,
                        "rhs": None,
                        "conditions_checked": 1,
                        "decision_path": path,
                    }
                )
            else:
                print(f"decision path: {path}")
                verdict = "feasible" if feasible else "infeasible"
                print(f"{verdict}: closed-form condition for {tag.kind.value} graph")
            return 0 if feasible else 1

    verdict = check_feasibility(
        g,
        c,
        use_reduced=config.reduced,
        all_witnesses=config.all_witnesses,
        bound=config.enum_bound,
    )
    if config.json_out:
        doc = {
            "feasible": verdict.feasible,
            "witness_set": sorted(verdict.witness.members) if verdict.witness else None,
            "witness_family": verdict.witness.family.value if verdict.witness else None,
            "lhs": str(verdict.lhs) if verdict.lhs is not None else None,
            "rhs": str(verdict.rhs) if verdict.rhs is not None else None,
            "conditions_checked": verdict.conditions_checked,
            "decision_path": path,
        }
        if config.all_witnesses:
            doc["witnesses"] = [
                {
                    "set": sorted(rec.members),
                    "family": rec.family.value,
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                }
                for rec, lhs, rhs in verdict.violations
            ]
        _emit_json(doc)
    else:
        print(f"decision path: {path}")
        print(explain(verdict))
    return 0 if verdict.feasible else 1


def _run_solve(config: RunConfig) -> int:
    g = _load_graph(config)
    c = _load_target(config.cvec_path)
    result = solve_max_min_weight(g, c)
    if config.json_out:
        _emit_json(
            {
                "status": result.status.value,
                "epsilon_star": str(result.epsilon_star)
                if result.epsilon_star is not None
                else None,
                "weights": {
                    f"{i}-{j}": str(w) for (i, j), w in result.weights.items()
                }
                if result.weights is not None
                else None,
            }
        )
    else:
        print(f"status: {result.status.value}")
        if result.epsilon_star is not None:
            print(f"max-min weight: {result.epsilon_star}")
        if result.weights is not None:
            for (i, j), w in sorted(result.weights.items()):
                print(f"  w[{i},{j}] = {w}")
    return 0 if result.status is LpStatus.STRICTLY_FEASIBLE else 1


def _run_verify(config: RunConfig) -> int:
    g = _load_graph(config)
    c = _load_target(config.cvec_path)
    weights = _load_weights(config.weights_path)
    missing = [e for e in g.edges if e not in weights]
    if missing:
        raise ValidationError(f"weights file missing edges: {missing}")
    extra = [e for e in weights if e not in set(g.edges)]
    if extra:
        raise ValidationError(f"weights file has non-edges: {extra}")
    report = spectral_report(g, weights, c, tol=config.tol, max_iter=config.max_iter)
    if config.json_out:
        _emit_json(
            {
                "pass": report.passed,
                "exact_residual_zero": report.exact_residual_zero,
                "support_full": report.support_full,
                "irreducible": report.irreducible,
                "rho_estimate": report.rho_estimate,
                "perron_cosine": report.perron_cosine,
                "gap_estimate": report.gap_estimate,
                "converged": report.converged,
            }
        )
    else:
        print(f"exact eigen-equations: {'ok' if report.exact_residual_zero else 'FAIL'}")
        print(f"full positive support: {'ok' if report.support_full else 'FAIL'}")
        print(f"irreducible:           {'ok' if report.irreducible else 'FAIL'}")
        if report.converged:
            print(f"spectral radius estimate: {report.rho_estimate:.12f}")
            print(f"target cosine:            {report.perron_cosine:.12f}")
            print(f"eigenvalue gap estimate:  {report.gap_estimate:.6f}")
        else:
            print("power iteration: skipped or not converged")
        print("verdict: pass" if report.passed else "verdict: FAIL")
    return 0 if report.passed else 1


def _run_fstab(config: RunConfig) -> int:
    g = _load_graph(config)
    vertices = enumerate_fstab_vertices(g, bound=config.enum_bound)
    doc: dict = {}
    if config.json_out:
        doc["vertices"] = [[str(x) for x in v.coords] for v in vertices]
    else:
        for v in vertices:
            print(" ".join(str(x) for x in v.coords))
    if config.rays:
        rays = extreme_rays(g, bound=config.enum_bound)
        if config.json_out:
            doc["rays"] = [[str(x) for x in r.coords] for r in rays]
        else:
            print("# extreme rays")
            for r in rays:
                print(" ".join(str(x) for x in r.coords))
    exit_code = 0
    if config.scan is not None:
        c = _load_target(config.scan[0])
        eps = parse_rational(config.scan[1])
        scan = farkas_scan(g, c, eps, full=config.full, bound=config.enum_bound)
        if config.json_out:
            doc["scan"] = {
                "passed": scan.passed,
                "epsilon": str(scan.epsilon),
                "checked": scan.checked,
                "violations": [
                    {
                        "ray": list(v.ray.coords),
                        "class": v.ray_class.value,
                        "value": str(v.value),
                    }
                    for v in scan.violations
                ],
            }
        else:
            if scan.passed:
                print(f"scan: pass ({scan.checked} rays at eps={eps})")
            else:
                v = scan.first_violation
                print(
                    f"scan: FAIL at eps={eps}: ray {' '.join(str(x) for x in v.ray.coords)}"
                    f" ({v.ray_class.value}) gives {v.value} > 0"
                )
                if config.full:
                    print(f"  {len(scan.violations)} violated rays in total")
        exit_code = 0 if scan.passed else 1
    if config.json_out:
        _emit_json(doc)
    return exit_code


def _run_reduce(config: RunConfig) -> int:
    g = _load_graph(config)
    family = reduced_family(g, bound=config.enum_bound)
    if config.json_out:
        _emit_json(
            {
                "reduced_family": [
                    {
                        "set": sorted(rec.members),
                        "neighborhood": sorted(rec.neighborhood),
                        "family": rec.family.value,
                    }
                    for rec in family
                ]
            }
        )
    else:
        for rec in family:
            print(
                f"{_fmt_set(rec.members)} N={_fmt_set(rec.neighborhood)} {rec.family.value}"
            )
    return 0


def _run_gen(config: RunConfig) -> int:
    g, c, label = structured_instance(config.kind, config.size, seed=config.seed)
    graph_lines = [f"{g.n} {g.m}"] + [f"{i} {j}" for i, j in g.edges]
    cvec_lines = [str(v) for v in c.values]
    header = f"# kind={config.kind} n={config.size} seed={config.seed} target={label}"
    if config.out_prefix:
        Path(config.out_prefix + ".graph").write_text(
            header + "\n" + "\n".join(graph_lines) + "\n", encoding="utf-8"
        )
        Path(config.out_prefix + ".cvec").write_text(
            header + "\n" + "\n".join(cvec_lines) + "\n", encoding="utf-8"
        )
        print(f"wrote {config.out_prefix}.graph and {config.out_prefix}.cvec")
    else:
        print(header)
        print("\n".join(graph_lines))
        print("# target")
        print("\n".join(cvec_lines))
    return 0


_HANDLERS = {
    "check": _run_check,
    "solve": _run_solve,
    "verify": _run_verify,
    "fstab": _run_fstab,
    "reduce": _run_reduce,
    "gen": _run_gen,
}


def run(config: RunConfig) -> int:
    return _HANDLERS[config.command](config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    config = _config_from_args(args)
    try:
        return run(config)
    except (
        ParseError,
        ValidationError,
        PreconditionError,
        ResourceLimitError,
        NotConvergedError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
