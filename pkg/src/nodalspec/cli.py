"""Command-line entry point: ``nodalspec <command> [options]``.

Every command writes a JSON report (or a plain value / CSV where noted) to
``--out`` or standard output.  Exit status is 0 when all checks pass, 1 when
any check fails and 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import certify, equiangular, formats, nodal, radius_order, spectra
from .errors import NodalSpecError, TheoremViolation
from .families import parse_family
from .graph import Graph, is_connected, random_connected_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    tol: float = 1e-8
    seed: int = 0
    jobs: int = 1
    output_path: str | None = None
    input_path: str | None = None
    fmt: str = "edges"
    json: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


class UsageError(Exception):
    pass


def _plain(obj):
    """Convert numpy scalars and arrays, sets and infinities for JSON."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
    return obj


def graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def result(name: str, ok: bool, details: dict) -> dict:
    return {"name": name, "ok": bool(ok), "details": details}


def make_report(command: str, cfg: RunConfig, results: list[dict], g: Graph | None = None) -> dict:
    report = {"command": command, "config": {"tol": cfg.tol, "seed": cfg.seed, "jobs": cfg.jobs}}
    if g is not None:
        report["graph"] = graph_json(g)
    report["results"] = results
    return report


def dump_report(report: dict) -> str:
    return json.dumps(_plain(report), indent=2) + "\n"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output_path:
        Path(cfg.output_path).write_text(text)
    else:
        sys.stdout.write(text)


# -- graph input ------------------------------------------------------------------

def _read_input(cfg: RunConfig) -> bytes:
    if cfg.input_path in (None, "-"):
        return sys.stdin.buffer.read()
    return Path(cfg.input_path).read_bytes()


def load_graph(args, cfg: RunConfig) -> Graph:
    if getattr(args, "family", None):
        return parse_family(args.family)
    if cfg.input_path is None:
        raise UsageError("give a graph with --family KIND:PARAMS or --in FILE")
    data = _read_input(cfg)
    if cfg.fmt == "g6":
        graphs = list(formats.iter_graph6(data.splitlines()))
        if len(graphs) != 1:
            raise UsageError(f"expected one graph in {cfg.input_path}, found {len(graphs)}")
        return graphs[0]
    return formats.read_graph(data, cfg.fmt)


def load_graphs(cfg: RunConfig) -> list[Graph]:
    data = _read_input(cfg)
    if cfg.fmt == "g6":
        return list(formats.iter_graph6(data.splitlines()))
    return [formats.read_graph(data, cfg.fmt)]


# -- commands -------------------------------------------------------------------

def cmd_family(args, cfg):
    g = parse_family(args.spec)
    if cfg.json:
        return make_report("family", cfg, [result("build", True, {"spec": args.spec})], g), True
    return formats.write_graph(g, cfg.fmt).decode(), True


def cmd_spectrum(args, cfg):
    g = load_graph(args, cfg)
    summary = spectra.adjacency_eigen(g, method=args.method)
    groups = [{"value": grp.value, "multiplicity": grp.multiplicity, "index": grp.index}
              for grp in summary.groups]
    details = {"eigenvalues": summary.values.tolist(), "groups": groups, "group_tol": summary.tol}
    return make_report("spectrum", cfg, [result("spectrum", True, details)], g), True


def cmd_spider_radius(args, cfg):
    r = spectra.spider_radius(args.ell)
    if cfg.json:
        details = {"ell": args.ell, "radius": r, "limit": spectra.SPIDER_LIMIT}
        return make_report("spider-radius", cfg, [result("spider_radius", True, details)]), True
    return f"{r:.15g}\n", True


def cmd_n_lambda(args, cfg):
    nl = spectra.n_lambda(args.lam)
    if cfg.json:
        return make_report("n-lambda", cfg, [result("n_lambda", True, {"lambda": args.lam, "n_lambda": nl})]), True
    return f"{nl}\n", True


def cmd_kappa(args, cfg):
    source = load_graphs(cfg) if cfg.input_path else None
    res = radius_order.kappa_search(args.lam, args.n_max, args.match_tol, source)
    details = {"lambda": args.lam, "verdict": res.verdict(), "kappa": res.kappa,
               "residual": res.residual, "scanned": res.scanned,
               "certificate": graph_json(res.certificate) if res.certificate else None}
    return make_report("kappa", cfg, [result("kappa_search", True, details)]), True


def _certificate_details(cert: nodal.NodalCertificate) -> dict:
    return {"eigenvalue": cert.eigenvalue, "multiplicity": cert.multiplicity, "group": cert.group,
            "index": cert.index, "root": cert.tree.root, "pivots": list(cert.pivots),
            "count_tree": cert.count_tree, "count_graph": cert.count_graph,
            "max_degree": cert.max_degree, "cyclomatic": cert.cyclomatic,
            "residual": cert.residual, "checks": cert.checks, "vector": cert.g.tolist()}


def cmd_nodal(args, cfg):
    g = load_graph(args, cfg)
    cert = nodal.nodal_maximizer(g, k=args.k)
    details = _certificate_details(cert)
    if not cert.ok:
        details["edges"] = g.edge_list()
    return make_report("nodal", cfg, [result("nodal_maximizer", cert.ok, details)], g), cert.ok


def audit_one(item) -> dict:
    """Audit a single graph; module level so worker processes can run it."""
    n, edges, seed, samples = item
    g = Graph(n, tuple(map(tuple, edges)))
    try:
        rep = nodal.multiplicity_audit(g, seed=seed, samples=samples)
    except TheoremViolation as exc:
        return {"n": n, "edges": [list(e) for e in edges], "ok": False, "error": str(exc)}
    return rep


def _audit_items(args, cfg) -> list[tuple]:
    graphs: list[Graph] = []
    if args.exhaustive_n:
        graphs.extend(radius_order.enumerate_connected_upto(args.exhaustive_n))
    if args.random:
        rng = np.random.default_rng(cfg.seed)
        for _ in range(args.random):
            n = int(rng.integers(2, args.max_n + 1))
            extra = int(rng.integers(0, n + 1))
            graphs.append(random_connected_graph(n, extra, int(rng.integers(0, 2 ** 31))))
    if cfg.input_path:
        graphs.extend(g for g in load_graphs(cfg) if is_connected(g))
    if not graphs:
        raise UsageError("audit needs --exhaustive-n, --random or --in")
    return [(g.n, [list(e) for e in g.edges], cfg.seed, args.samples) for g in graphs]


def run_pool(fn, items, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


LOWER_CHECKS = ("residual", "pivot_signs", "count_tree_ge_m", "count_graph_ge_m_minus_ell")


def _audit_summary(reports: list[dict]) -> list[dict]:
    """Split per-graph audits into the multiplicity bound, the constructive
    certificate invariants and the nodal-count upper bound."""
    buckets = {"multiplicity_bound": [], "nodal_certificates": [], "nodal_count_bound": []}
    groups = 0
    for rep in reports:
        if "groups" not in rep:
            # the construction itself broke down
            buckets["nodal_certificates"].append({"n": rep["n"], "edges": rep["edges"], "error": rep["error"]})
            continue
        for e in rep["groups"]:
            groups += 1
            where = {"n": rep["n"], "edges": rep["edges"], "group": e["group"], "index": e["index"],
                     "eigenvalue": e["eigenvalue"], "multiplicity": e["multiplicity"]}
            checks = e["certificate"]["checks"]
            if not e["multiplicity_ok"]:
                buckets["multiplicity_bound"].append({**where, "bound": e["bound"]})
            if not all(checks[c] for c in LOWER_CHECKS):
                buckets["nodal_certificates"].append({**where, "checks": checks})
            if not (e["samples_ok"] and checks["count_graph_le_nodal_bound"]):
                buckets["nodal_count_bound"].append(
                    {**where, "nodal_bound": e["nodal_bound"], "count_graph": e["certificate"]["count_graph"],
                     "sample_counts": e["sample_counts"]})
    ordinal = sum(1 for r in reports for e in r.get("groups", ()) if e["multiplicity"] > e["ordinal_bound"])
    out = []
    for name, failures in buckets.items():
        details = {"graphs": len(reports), "groups_checked": groups, "violations": len(failures)}
        if name == "multiplicity_bound":
            details["ordinal_bound_violations"] = ordinal
        details["failures"] = failures
        out.append(result(name, not failures, details))
    return out


def cmd_audit(args, cfg):
    items = _audit_items(args, cfg)
    reports = run_pool(audit_one, items, cfg.jobs)
    results = _audit_summary(reports)
    return make_report("audit", cfg, results), all(r["ok"] for r in results)


def cmd_decompose(args, cfg):
    g = load_graph(args, cfg)
    try:
        w = certify.decompose(g, args.lam)
    except TheoremViolation as exc:
        return make_report("decompose", cfg, [result("decompose", False, exc.details)], g), False
    details = w.as_dict()
    cap = certify.theorem_bound(args.lam, max(1, g.max_degree())) if args.lam > 0 else None
    details["theorem_bound"] = cap
    ok = w.ok and (cap is None or w.effective_bound <= cap or w.verdict == certify.SMALL)
    if not ok:
        details["edges"] = g.edge_list()
    return make_report("decompose", cfg, [result("decompose", ok, details)], g), ok


def cmd_bound(args, cfg):
    b = certify.theorem_bound(args.lam, args.delta)
    if cfg.json:
        details = {"lambda": args.lam, "delta": args.delta, "n_lambda": spectra.n_lambda(args.lam), "bound": b}
        return make_report("bound", cfg, [result("theorem_bound", True, details)]), True
    return f"{b}\n", True


def cmd_lines_build(args, cfg):
    seed = parse_family(args.seed_family)
    g, system = equiangular.lower_bound_construct(args.alpha, args.dim, seed, pad=args.pad)
    ok = equiangular.verify_lines(system, args.alpha, max(cfg.tol, equiangular.ANGLE_TOL))
    if cfg.json:
        details = {"alpha": args.alpha, "dim": args.dim, "lines": system.size,
                   "max_angle_residual": system.max_angle_residual,
                   "max_norm_residual": system.max_norm_residual,
                   "vectors": system.vectors.tolist()}
        return make_report("lines build", cfg, [result("lower_bound_construct", ok, details)], g), ok
    if args.lines_format == "json":
        return equiangular.lines_to_json(system), ok
    return equiangular.lines_to_csv(system), ok


def cmd_lines_verify(args, cfg):
    if cfg.input_path is None:
        raise UsageError("lines verify needs --in FILE")
    text = _read_input(cfg).decode()
    if text.lstrip().startswith("{"):
        system = equiangular.lines_from_json(text)
        alpha = args.alpha if args.alpha is not None else system.alpha
    else:
        if args.alpha is None:
            raise UsageError("--alpha is required for CSV input")
        alpha = args.alpha
        system = equiangular.lines_from_csv(text, alpha)
    ok = equiangular.verify_lines(system, alpha, cfg.tol)
    details = {"alpha": alpha, "dim": system.dim, "lines": system.size,
               "max_angle_residual": system.max_angle_residual,
               "max_norm_residual": system.max_norm_residual}
    return make_report("lines verify", cfg, [result("verify_lines", ok, details)]), ok


def cmd_grid_check(args, cfg):
    rep = certify.two_cycle_grid_check(args.p_max, args.q_max, args.l_max)
    return make_report("grid-check", cfg, [result("two_cycle_grid", rep["ok"], rep)]), rep["ok"]


def cmd_monotonicity(args, cfg):
    g = load_graph(args, cfg)
    rep = certify.monotonicity_check(g)
    if not rep["ok"]:
        rep["edges"] = g.edge_list()
    return make_report("monotonicity", cfg, [result("monotonicity", rep["ok"], rep)], g), rep["ok"]


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="global tolerance (default 1e-8)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes (default 1)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output here instead of stdout")
    common.add_argument("--in", dest="input", default=argparse.SUPPRESS, help="input file ('-' for stdin)")
    common.add_argument("--format", dest="fmt", choices=["g6", "edges"], default=argparse.SUPPRESS,
                        help="graph format for --in and family output (default edges)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="always emit a JSON report")

    parser = argparse.ArgumentParser(prog="nodalspec", parents=[common],
                                     description="Spectral checks on small graphs and equiangular line systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, graph_input=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        if graph_input:
            p.add_argument("--family", help="built-in family such as cycle:5 or theta:3,3,5")
        return p

    p = add("family", cmd_family, "build a named graph")
    p.add_argument("spec", help="KIND:PARAMS, e.g. barbell:3,3,12")

    p = add("spectrum", cmd_spectrum, "adjacency spectrum with eigenvalue groups", graph_input=True)
    p.add_argument("--method", choices=["lapack", "jacobi"], default="lapack")

    p = add("spider-radius", cmd_spider_radius, "spectral radius of T(l,l,l)")
    p.add_argument("--ell", type=int, required=True)

    p = add("n-lambda", cmd_n_lambda, "smallest l with spider_radius(l) > lambda")
    p.add_argument("--lam", type=float, required=True)

    p = add("kappa", cmd_kappa, "smallest connected graph with spectral radius lambda")
    p.add_argument("--lam", type=float, required=True)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--match-tol", type=float, default=radius_order.MATCH_TOL)

    p = add("nodal", cmd_nodal, "eigenfunction with many strong nodal domains", graph_input=True)
    p.add_argument("--k", type=int, default=2, help="eigenvalue group (>= 2)")

    p = add("audit", cmd_audit, "multiplicity and nodal-count bounds over many graphs")
    p.add_argument("--exhaustive-n", type=int, default=0, help="all connected graphs up to this order")
    p.add_argument("--random", type=int, default=0, help="number of random connected graphs")
    p.add_argument("--max-n", type=int, default=40, help="largest order for --random")
    p.add_argument("--samples", type=int, default=10, help="random eigenvectors per group")

    p = add("decompose", cmd_decompose, "witness for the second-eigenvalue multiplicity bound", graph_input=True)
    p.add_argument("--lam", type=float, required=True)

    p = add("bound", cmd_bound, "2 n_lambda Delta^(n_lambda+3) (1+Delta+Delta^2)")
    p.add_argument("--lam", type=float, required=True)
    p.add_argument("--delta", type=int, required=True)

    lines = sub.add_parser("lines", help="equiangular line systems")
    lsub = lines.add_subparsers(dest="lines_command", required=True)
    p = lsub.add_parser("build", parents=[common], help="lines from disjoint copies of a seed graph")
    p.set_defaults(func=cmd_lines_build)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed-family", required=True, help="seed graph, e.g. cycle:3")
    p.add_argument("--pad", action="store_true", help="fill spare dimensions with isolated vertices")
    p.add_argument("--lines-format", choices=["csv", "json"], default="csv")
    p = lsub.add_parser("verify", parents=[common], help="check unit norms and common angle")
    p.set_defaults(func=cmd_lines_verify)
    p.add_argument("--alpha", type=float)

    p = add("grid-check", cmd_grid_check, "spectral radius of two-cycle families vs 3/sqrt(2)")
    p.add_argument("--p-max", type=int, default=12)
    p.add_argument("--q-max", type=int, default=12)
    p.add_argument("--l-max", type=int, default=12)

    add("monotonicity", cmd_monotonicity, "deletion and subdivision behaviour of lambda_1", graph_input=True)
    return parser


def config_from_args(args) -> RunConfig:
    return RunConfig(
        tol=getattr(args, "tol", 1e-8),
        seed=getattr(args, "seed", 0),
        jobs=getattr(args, "jobs", 1),
        output_path=getattr(args, "out", None),
        input_path=getattr(args, "input", None),
        fmt=getattr(args, "fmt", "edges"),
        json=getattr(args, "json", False),
    )


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = config_from_args(args)
        out, ok = args.func(args, cfg)
    except (UsageError, NodalSpecError, ValueError, OSError) as exc:
        print(f"nodalspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(out if isinstance(out, str) else dump_report(out), cfg)
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
