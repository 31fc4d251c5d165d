"""Strong nodal domains and eigenfunctions with many of them.

The construction behind the multiplicity bound ``m <= (k-1)*Delta + ell``:

1. Pick a root where the eigenspace does not vanish and grow a BFS tree.
2. Bring an eigenspace basis into *coordinate form*: pivot vertices
   ``v_1 .. v_m`` with ``f_i(v_j) = delta_ij``, where each ``f_i`` vanishes at
   every vertex visited before ``v_i`` in (depth, label) order.  In
   particular ``v_1`` is the root.
3. Start from ``g = f_1`` and sweep the tree level by level.  For each pivot
   ``v_j`` on the current level add ``+f_j`` if ``g(parent(v_j)) <= 0`` and
   ``-f_j`` otherwise.  Since ``f_j`` vanishes at every earlier vertex, the
   value at ``parent(v_j)`` is already final, ``g(v_j)`` ends as ``+-1`` and
   ``g(v_j) * g(parent(v_j)) <= 0``.

Cutting the m-1 tree edges ``{v_j, parent(v_j)}`` leaves m subtrees, each
holding a non-zero pivot, so ``g`` has at least m strong nodal domains on
the tree and at least ``m - ell`` on the graph.

Worked example, C4 at eigenvalue 0 (basis (1,0,-1,0), (0,1,0,-1)), root 0:
the tree has parents 1->0, 3->0, 2->1; pivots are (0, 1); ``g = f_1 =
(1,0,-1,0)``; on level 1, ``g(0) = 1 > 0`` so ``g -= f_2`` giving
``(1,-1,-1,1)``, with two nodal domains {0,3} and {1,2}.

K_{1,3} (centre 0) at eigenvalue 0 with basis (0,1,-1,0), (0,1,0,-1): the
eigenspace vanishes at 0, so the root is leaf 1.  Elimination in order
1, 0, 2, 3 pivots row one at 1 (row two becomes (0,0,1,-1)), skips 0, pivots
row two at 2 and clears it from row one: ``f = (0,1,0,-1), (0,0,1,-1)``.
Then ``g(0) = 0 <= 0`` so ``g = f_1 + f_2 = (0,1,1,-2)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadParams, Disconnected, RankDeficient, TheoremViolation
from .graph import Graph, SpanningTree, bfs_order, bfs_tree, cyclomatic, is_connected
from .spectra import SpectralSummary, adjacency_eigen

PIVOT_TOL = 1e-8
SUPPORT_TOL = 1e-9
ZERO_RTOL = 1e-9
SIGN_TOL = 1e-9
RESIDUAL_RTOL = 1e-7


def strong_nodal_count(g: Graph, f, zero_tol: float | None = None) -> int:
    """Number of strong nodal domains of ``f``.

    Vertices with ``|f| <= zero_tol`` are treated as zeros; the default is
    ``1e-9 * max|f|``.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (g.n,):
        raise BadParams(f"function has {f.size} entries, graph has {g.n} vertices")
    if zero_tol is None:
        zero_tol = ZERO_RTOL * (float(np.max(np.abs(f))) if g.n else 0.0)
    support = np.abs(f) > zero_tol
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if support[u] and support[v] and f[u] * f[v] > 0:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return len({find(v) for v in range(g.n) if support[v]})


def coordinate_basis(g: Graph, tree: SpanningTree, basis) -> tuple[list[int], np.ndarray]:
    """Gauss-Jordan reduction of an eigenspace basis along the tree.

    Vertices are scanned by (depth, label); at each vertex the remaining
    vector with the largest entry there becomes the pivot if that entry
    exceeds ``PIVOT_TOL`` (inputs are first scaled to unit max-norm).
    Entries of unpivoted vectors at scanned vertices are then set to exactly
    zero, so each returned ``f_i`` vanishes exactly at all vertices scanned
    before its pivot.  Returns the pivots and an ``n x m`` array whose
    columns are the reduced vectors, in pivot order.
    """
    rows = np.array(basis, dtype=float)
    if rows.ndim == 1:
        rows = rows[None, :]
    if rows.shape[1] != g.n:
        raise BadParams("basis vectors must have one entry per vertex")
    m = rows.shape[0]
    scale = np.max(np.abs(rows), axis=1)
    if np.any(scale == 0):
        raise RankDeficient("zero vector in basis")
    rows = rows / scale[:, None]
    remaining = list(range(m))
    pivot_of_row = {}
    for v in tree.level_order():
        if not remaining:
            break
        cand = max(remaining, key=lambda r: (abs(rows[r, v]), -r))
        if abs(rows[cand, v]) > PIVOT_TOL:
            rows[cand] /= rows[cand, v]
            rows[cand, v] = 1.0
            for r in range(m):
                if r != cand:
                    c = rows[r, v]
                    if c != 0.0:
                        rows[r] -= c * rows[cand]
                    rows[r, v] = 0.0
            remaining.remove(cand)
            pivot_of_row[cand] = v
        for r in remaining:
            rows[r, v] = 0.0
    if remaining:
        raise RankDeficient(f"basis has numerical rank {m - len(remaining)} < {m}")
    order = sorted(pivot_of_row, key=lambda r: (tree.depth[pivot_of_row[r]], pivot_of_row[r]))
    return [pivot_of_row[r] for r in order], rows[order].T.copy()


@dataclass(frozen=True)
class NodalCertificate:
    eigenvalue: float
    multiplicity: int
    group: int  # 1-based group ordinal in the descending spectrum
    index: int  # 1-based descending index of the group's first eigenvalue
    pivots: tuple[int, ...]
    tree: SpanningTree
    g: np.ndarray
    count_tree: int
    count_graph: int
    max_degree: int
    cyclomatic: int
    residual: float
    sign_ok: bool
    checks: dict = field(default_factory=dict)

    @property
    def bound(self) -> int:
        """Multiplicity bound ``(index - 1) * Delta + ell``."""
        return (self.index - 1) * self.max_degree + self.cyclomatic

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def choose_root(g: Graph, basis: np.ndarray) -> int:
    """First vertex in BFS order from 0 where the eigenspace is non-zero."""
    for v in bfs_order(g, 0):
        if np.max(np.abs(basis[v])) > SUPPORT_TOL:
            return v
    raise RankDeficient("eigenspace vanishes identically")


def nodal_maximizer(g: Graph, summary: SpectralSummary | None = None, k: int = 2) -> NodalCertificate:
    """Build an eigenfunction of group ``k`` (k >= 2) with at least m nodal domains on a BFS tree."""
    if not is_connected(g):
        raise Disconnected("nodal_maximizer needs a connected graph")
    if k < 2:
        raise BadParams("group index must be >= 2")
    if summary is None:
        summary = adjacency_eigen(g)
    grp = summary.group(k)
    root = choose_root(g, grp.basis)
    tree = bfs_tree(g, root)
    pivots, fs = coordinate_basis(g, tree, grp.basis.T)
    m = len(pivots)
    if pivots[0] != root:
        raise TheoremViolation("first pivot is not the root", {"root": root, "pivots": pivots})

    vec = fs[:, 0].copy()
    levels = {}
    for j in range(1, m):
        levels.setdefault(tree.depth[pivots[j]], []).append(j)
    for depth in sorted(levels):
        batch = levels[depth]
        snapshot = vec.copy()
        for j in batch:
            # same-level vectors vanish at every shallower vertex
            for i in batch:
                if fs[tree.parent[pivots[i]], j] != 0.0:
                    raise TheoremViolation("same-level basis vector is non-zero at a father",
                                           {"pivot": pivots[j], "father": tree.parent[pivots[i]]})
        for j in batch:
            father = tree.parent[pivots[j]]
            c = 1.0 if snapshot[father] <= 0.0 else -1.0
            vec += c * fs[:, j]

    lam = grp.value
    a = g.adjacency()
    residual = float(np.max(np.abs(a @ vec - lam * vec)))
    sign_ok = all(vec[pivots[j]] * vec[tree.parent[pivots[j]]] <= SIGN_TOL for j in range(1, m))
    count_tree = strong_nodal_count(tree.as_graph(), vec)
    count_graph = strong_nodal_count(g, vec)
    delta = g.max_degree()
    ell = cyclomatic(g)
    idx = grp.index
    checks = {
        "residual": residual <= RESIDUAL_RTOL * max(1.0, abs(lam)),
        "pivot_signs": sign_ok,
        "count_tree_ge_m": count_tree >= m,
        "count_graph_ge_m_minus_ell": count_graph >= m - ell,
        "count_graph_le_nodal_bound": count_graph <= (idx - 1) * delta,
        "multiplicity_le_bound": m <= (idx - 1) * delta + ell,
    }
    return NodalCertificate(lam, m, k, idx, tuple(pivots), tree, vec, count_tree, count_graph,
                            delta, ell, residual, sign_ok, checks)


def random_unit_vectors(basis: np.ndarray, count: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Uniformly random unit vectors in the column span of an orthonormal basis."""
    out = []
    for _ in range(count):
        c = rng.standard_normal(basis.shape[1])
        out.append(basis @ (c / np.linalg.norm(c)))
    return out


def multiplicity_audit(g: Graph, seed: int = 0, samples: int = 10) -> dict:
    """Check the multiplicity and nodal-count bounds on every group k >= 2.

    Bounds use the 1-based descending index of the first eigenvalue in the
    group.  For k = 2 this equals the group ordinal because a connected
    graph has a simple top eigenvalue.  The report also carries the
    stricter ordinal-based figure for information.
    """
    if not is_connected(g):
        raise Disconnected("multiplicity_audit needs a connected graph")
    summary = adjacency_eigen(g)
    delta = g.max_degree()
    ell = cyclomatic(g)
    rng = np.random.default_rng(seed)
    entries = []
    for k in range(2, len(summary.groups) + 1):
        grp = summary.group(k)
        bound = (grp.index - 1) * delta + ell
        cert = nodal_maximizer(g, summary, k)
        nodal_bound = (grp.index - 1) * delta
        sample_counts = [strong_nodal_count(g, f) for f in random_unit_vectors(grp.basis, samples, rng)]
        entry = {
            "group": k,
            "index": grp.index,
            "eigenvalue": grp.value,
            "multiplicity": grp.multiplicity,
            "bound": bound,
            "ordinal_bound": (k - 1) * delta + ell,
            "multiplicity_ok": grp.multiplicity <= bound,
            "certificate": {
                "pivots": list(cert.pivots),
                "root": cert.tree.root,
                "count_tree": cert.count_tree,
                "count_graph": cert.count_graph,
                "residual": cert.residual,
                "checks": cert.checks,
            },
            "certificate_ok": cert.ok,
            "sample_counts": sample_counts,
            "nodal_bound": nodal_bound,
            "samples_ok": all(c <= nodal_bound for c in sample_counts),
        }
        entry["ok"] = entry["multiplicity_ok"] and entry["certificate_ok"] and entry["samples_ok"]
        entries.append(entry)
    return {
        "n": g.n,
        "edges": g.edge_list(),
        "max_degree": delta,
        "cyclomatic": ell,
        "groups": entries,
        "ok": all(e["ok"] for e in entries),
    }
