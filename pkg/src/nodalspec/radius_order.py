"""Small connected graphs up to isomorphism and the spectral radius order.

Enumeration grows graphs one vertex at a time: every connected graph on
n >= 2 vertices has a non-cut vertex, so it arises from a connected graph on
n - 1 vertices by attaching a new vertex to a non-empty neighbour set.
Candidates are deduplicated by a canonical key: vertices are first split
into classes by colour refinement (an isomorphism invariant), then the
compiled kernel finds the lexicographically smallest upper-triangle bit
string over all orderings that keep the classes in order.  The search is
exhaustive within the classes, so the key is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .errors import BadParams
from .graph import Graph, is_connected

MAX_ENUM_N = 8
MATCH_TOL = 1e-9


def _graph_from_rows(n: int, rows, perm) -> Graph:
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    edges = []
    for u in range(n):
        r = rows[u]
        for v in range(u + 1, n):
            if r >> v & 1:
                a, b = pos[u], pos[v]
                edges.append((a, b) if a < b else (b, a))
    return Graph(n, tuple(sorted(edges)))


def canonical_form(g: Graph) -> tuple[int, Graph]:
    """Canonical key and the canonically relabelled graph (n <= 11)."""
    rows = g.bitrows()
    key, perm = _kernels.canonical_label(g.n, rows)
    return key, _graph_from_rows(g.n, rows, perm)


def canonical_key(g: Graph) -> tuple[int, int]:
    return g.n, _kernels.canonical_label(g.n, g.bitrows())[0]


def _extend(parents: Iterable[Graph]) -> Iterator[Graph]:
    seen = set()
    label = _kernels.canonical_label
    for h in parents:
        n = h.n
        base = h.bitrows()
        bit = 1 << n
        for mask in range(1, 1 << n):
            rows = [r | bit if mask >> u & 1 else r for u, r in enumerate(base)]
            rows.append(mask)
            key, perm = label(n + 1, rows)
            if key not in seen:
                seen.add(key)
                yield _graph_from_rows(n + 1, rows, perm)


_levels: dict[int, tuple[Graph, ...]] = {1: (Graph(1, ()),)}


def _level(n: int) -> tuple[Graph, ...]:
    if n not in _levels:
        _levels[n] = tuple(_extend(_level(n - 1)))
    return _levels[n]


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Each connected graph on ``n`` vertices exactly once, canonically labelled.

    Order is deterministic (first appearance while extending the previous
    level).  The top level is streamed, so consumers may stop early.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise BadParams(f"enumeration supports 1 <= n <= {MAX_ENUM_N}")
    if n in _levels:
        yield from _levels[n]
        return
    out = []
    for g in _extend(_level(n - 1)):
        out.append(g)
        yield g
    _levels[n] = tuple(out)


def enumerate_connected_upto(n_max: int) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_connected(n)


@dataclass(frozen=True)
class KappaResult:
    """Outcome of a spectral-radius-order search; verdicts are numerical only."""

    lam: float
    kappa: int | None
    certificate: Graph | None
    residual: float | None
    n_max: int | None
    scanned: int

    @property
    def found(self) -> bool:
        return self.kappa is not None

    def verdict(self) -> str:
        return f"Found({self.kappa})" if self.found else f"NotFoundUpTo({self.n_max})"


def _could_match(g: Graph, lam: float, tol: float) -> bool:
    # sqrt(Delta) <= lambda_1 <= Delta and lambda_1 >= average degree
    delta = g.max_degree()
    if lam > delta + tol or lam < math.sqrt(delta) - tol:
        return False
    return g.n == 0 or 2.0 * g.m / g.n <= lam + tol


def kappa_search(lam: float, n_max: int = 7, match_tol: float = MATCH_TOL,
                 source: Iterable[Graph] | None = None) -> KappaResult:
    """Smallest n with a connected n-vertex graph whose spectral radius is ``lam``.

    Scans the built-in enumeration for n = 1..n_max and stops at the first
    match.  With ``source`` (for example a graph6 stream from an external
    generator), every graph is scanned and the smallest match is returned.
    """
    if lam < 0:
        raise BadParams("lambda must be non-negative")
    scanned = 0
    if source is None:
        if not 1 <= n_max <= MAX_ENUM_N:
            raise BadParams(f"n_max must be in 1..{MAX_ENUM_N}")
        for n in range(1, n_max + 1):
            for g in enumerate_connected(n):
                scanned += 1
                if not _could_match(g, lam, match_tol):
                    continue
                top = float(np.linalg.eigvalsh(g.adjacency())[-1]) if g.n > 1 else 0.0
                if abs(top - lam) <= match_tol:
                    return KappaResult(lam, n, g, abs(top - lam), None, scanned)
        return KappaResult(lam, None, None, None, n_max, scanned)

    best = None
    largest = 0
    for g in source:
        scanned += 1
        largest = max(largest, g.n)
        if (best is not None and g.n >= best[0]) or not is_connected(g):
            continue
        if not _could_match(g, lam, match_tol):
            continue
        top = float(np.linalg.eigvalsh(g.adjacency())[-1]) if g.n > 1 else 0.0
        if abs(top - lam) <= match_tol:
            best = (g.n, g, abs(top - lam))
    if best is None:
        return KappaResult(lam, None, None, None, largest, scanned)
    return KappaResult(lam, best[0], best[1], best[2], None, scanned)
