"""Multiplicity bound for the second eigenvalue and its supporting checks.

``decompose`` produces a witness for the bound on ``m(lambda_2)``: remove a
ball ``S`` around a short cycle (or around a vertex carrying a long spider)
so that every remaining component has cyclomatic number at most 1.  By
interlacing, ``m(lambda_2) <= |S| + sum_i m_i`` where each component
contributes at most ``Delta + ell_i``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import BadParams, Disconnected, NotEdgeDisjoint, PreconditionViolated, TheoremViolation
from .families import barbell, dumbbell, theta
from .graph import (Graph, ball, bfs_distances, components, cyclomatic, delete_edge, delete_vertex,
                    end_path_edges, girth, induced_subgraph, is_connected, is_tree, shortest_cycle,
                    subdivide_edge)
from .spectra import SPIDER_LIMIT, adjacency_eigen, eigenvalues, lambda1, n_lambda

PRECONDITION_EPS = 1e-9
TRICHOTOMY_TOL = 1e-8
GRID_EPS = 1e-9
MONO_EPS = 1e-9

TREE, THIN, CASE1, CASE2, SMALL = "Tree", "Thin", "Case1", "Case2", "Small"


def theorem_bound(lam: float, delta: int) -> int:
    """``2 n_lambda Delta^(n_lambda + 3) (1 + Delta + Delta^2)`` as an exact integer."""
    if delta < 1:
        raise BadParams("Delta must be >= 1")
    nl = n_lambda(lam)
    return 2 * nl * delta ** (nl + 3) * (1 + delta + delta * delta)


@dataclass(frozen=True)
class DecompositionWitness:
    verdict: str
    lam: float
    lambda2: float
    removed: frozenset[int]
    components: tuple[tuple[frozenset[int], int], ...]
    effective_bound: int
    actual_multiplicity: int
    n_lambda: int | None = None
    cycle: tuple[int, ...] | None = None
    center: int | None = None

    @property
    def ok(self) -> bool:
        return (self.actual_multiplicity <= self.effective_bound
                and all(c <= 1 for _, c in self.components))

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "lambda": self.lam,
            "lambda2": self.lambda2,
            "n_lambda": self.n_lambda,
            "removed": sorted(self.removed),
            "components": [{"vertices": sorted(v), "cyclomatic": c} for v, c in self.components],
            "cycle": list(self.cycle) if self.cycle is not None else None,
            "center": self.center,
            "effective_bound": self.effective_bound,
            "actual_multiplicity": self.actual_multiplicity,
        }


def spider_center(g: Graph, depth: int) -> int | None:
    """Lowest vertex with three neighbours whose BFS branches reach ``depth``.

    Intended for girth > 2*depth, where BFS branches through distinct
    neighbours of ``x`` are disjoint paths, so they contain
    ``T(depth, depth, depth)`` centred at ``x``.
    """
    for x in range(g.n):
        if g.degree(x) < 3:
            continue
        dist = bfs_distances(g, [x])
        # branch label: the neighbour of x through which BFS reached v
        branch = {}
        order = sorted((d, v) for v, d in enumerate(dist) if 0 < d <= depth)
        parent_of = {}
        for d, v in order:
            if d == 1:
                branch[v] = v
                continue
            for u in g.neighbors(v):
                if dist[u] == d - 1:
                    parent_of[v] = u
                    break
            branch[v] = branch[parent_of[v]]
        deep = {branch[v] for d, v in order if d == depth}
        if len(deep) >= 3:
            return x
    return None


def _residual(g: Graph, removed: frozenset[int]):
    rest = [v for v in range(g.n) if v not in removed]
    sub, labels = induced_subgraph(g, rest)
    out = []
    for comp in components(sub):
        piece, _ = induced_subgraph(sub, comp)
        out.append((frozenset(labels[v] for v in comp), cyclomatic(piece)))
    return tuple(out)


def decompose(g: Graph, lam: float) -> DecompositionWitness:
    """Witness for the second-eigenvalue multiplicity bound at level ``lam``."""
    if not is_connected(g):
        raise Disconnected("decompose needs a connected graph")
    if not lam < SPIDER_LIMIT:
        raise PreconditionViolated(f"lambda={lam} must be below 3/sqrt(2)")
    summary = adjacency_eigen(g)
    if g.n >= 2:
        lam2 = float(summary.values[1])
        mult = summary.group(2).multiplicity
    else:
        lam2 = -math.inf
        mult = 0
    if lam2 > lam + PRECONDITION_EPS:
        raise PreconditionViolated(f"lambda_2 = {lam2:.12g} exceeds lambda = {lam}")
    delta = g.max_degree()
    ell = cyclomatic(g)
    everything = frozenset(range(g.n))
    if is_tree(g) or ell <= 1:
        verdict = TREE if ell == 0 else THIN
        return DecompositionWitness(verdict, lam, lam2, frozenset(), ((everything, ell),),
                                    delta + ell, mult)

    nl = n_lambda(lam)
    gir = girth(g)
    cycle = center = None
    if gir <= 2 * nl:
        verdict = CASE1
        cycle = shortest_cycle(g)
        removed = ball(g, cycle, nl + 2)
    else:
        center = spider_center(g, nl)
        if center is None:
            return DecompositionWitness(SMALL, lam, lam2, everything, (), g.n, mult, nl)
        verdict = CASE2
        removed = ball(g, [center], nl + 2)
    comps = _residual(g, removed)
    bound = len(removed) + sum(delta + c for _, c in comps)
    witness = DecompositionWitness(verdict, lam, lam2, removed, comps, bound, mult, nl, cycle, center)
    if any(c >= 2 for _, c in comps):
        raise TheoremViolation("residual component with two independent cycles",
                               {"n": g.n, "edges": g.edge_list(), **witness.as_dict()})
    return witness


def edge_disjoint_trichotomy(g: Graph, v1, v2, tol: float = TRICHOTOMY_TOL) -> dict:
    """Spectral radii of ``G[V1]``, ``G[V2]`` against ``lambda_2(G)``.

    For vertex sets with no edge between them, either one side has spectral
    radius below ``lambda_2(G)`` or both equal it.
    """
    if not is_connected(g):
        raise Disconnected("edge_disjoint_check needs a connected graph")
    s1, s2 = set(v1), set(v2)
    if not s1 or not s2:
        raise BadParams("vertex sets must be non-empty")
    if g.n < 2:
        raise BadParams("need at least two vertices")
    if s1 & s2:
        raise NotEdgeDisjoint(f"sets share vertices {sorted(s1 & s2)}")
    crossing = [(u, v) for u, v in g.edges if (u in s1 and v in s2) or (u in s2 and v in s1)]
    if crossing:
        raise NotEdgeDisjoint(f"edges between the sets: {crossing}")
    a = lambda1(induced_subgraph(g, s1)[0])
    b = lambda1(induced_subgraph(g, s2)[0])
    l2 = float(eigenvalues(g)[1])
    # Each strict comparison is granted the tolerance, so "x < lambda_2"
    # accepts x within tol of lambda_2; the equality branch is then implied.
    first = a < l2 + tol
    second = b < l2 + tol
    third = abs(a - l2) <= tol and abs(b - l2) <= tol
    return {"lambda1_v1": a, "lambda1_v2": b, "lambda2": l2,
            "first": first, "second": second, "third": third, "ok": first or second or third}


def edge_disjoint_check(g: Graph, v1, v2) -> bool:
    return edge_disjoint_trichotomy(g, v1, v2)["ok"]


def two_cycle_grid_check(p_max: int, q_max: int, l_max: int) -> dict:
    """Spectral radius of every theta, dumbbell and barbell graph in the grid vs 3/sqrt(2)."""
    if p_max < 3 or q_max < 3 or l_max < 1:
        raise BadParams("need p_max, q_max >= 3 and l_max >= 1")
    floor = SPIDER_LIMIT - GRID_EPS
    report = {"bound": SPIDER_LIMIT, "families": {}, "failures": [], "checked": 0}
    grids = {
        "theta": (theta, product(range(2, p_max + 1), range(2, q_max + 1), range(1, l_max + 1))),
        "dumbbell": (dumbbell, product(range(3, p_max + 1), range(3, q_max + 1))),
        "barbell": (barbell, product(range(3, p_max + 1), range(3, q_max + 1), range(1, l_max + 1))),
    }
    for name, (ctor, params) in grids.items():
        best = None
        for args in params:
            g = ctor(*args)
            top = lambda1(g)
            report["checked"] += 1
            if best is None or top < best[0]:
                best = (top, list(args))
            if top < floor:
                report["failures"].append({"family": name, "params": list(args), "lambda1": top,
                                           "n": g.n, "edges": g.edge_list()})
        report["families"][name] = {"min_lambda1": best[0], "argmin": best[1]}
    report["ok"] = not report["failures"]
    return report


def monotonicity_check(g: Graph) -> dict:
    """Deletion monotonicity of lambda_1 and the subdivision inequality when lambda_1 > 2."""
    if not is_connected(g):
        raise Disconnected("monotonicity_check needs a connected graph")
    top = lambda1(g)
    deletions = []
    for v in range(g.n):
        h = delete_vertex(g, v)
        if h.n and is_connected(h):
            deletions.append(("vertex", [v], lambda1(h)))
    for e in g.edges:
        h = delete_edge(g, e)
        if is_connected(h):
            deletions.append(("edge", list(e), lambda1(h)))
    failures = []
    for kind, what, val in deletions:
        if not top - val > MONO_EPS:
            failures.append({"check": f"delete_{kind}", "target": what, "lambda1": top, "after": val})
    subdivisions = []
    if top > 2.0 + MONO_EPS:
        ends = end_path_edges(g)
        for e in g.edges:
            if e in ends:
                continue
            val = lambda1(subdivide_edge(g, e))
            subdivisions.append((list(e), val))
            if val > top + MONO_EPS:
                failures.append({"check": "subdivide", "target": list(e), "lambda1": top, "after": val})
    return {
        "lambda1": top,
        "deletions_checked": len(deletions),
        "subdivisions_checked": len(subdivisions),
        "subdivision_applies": top > 2.0 + MONO_EPS,
        "failures": failures,
        "ok": not failures,
    }
