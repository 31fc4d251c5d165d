"""Graphs as certificates for equiangular line systems.

With ``lambda = (1 - alpha) / (2 alpha)`` the matrix ``M = lambda I - A + J/2``
scaled by ``2 alpha`` has unit diagonal, ``-alpha`` on edges and ``+alpha``
elsewhere.  When ``M`` is positive semidefinite of rank ``r`` it factors as
the Gram matrix of N unit vectors in R^r at pairwise angle arccos(alpha).
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .certify import theorem_bound
from .errors import BadParams, DimensionMismatch, NotCertified, OutOfDomain, SeedMismatch
from .graph import Graph, disjoint_copies, disjoint_union, empty_graph, is_connected
from .spectra import eigh, lambda1

RANK_TOL = 1e-8
ANGLE_TOL = 1e-7
SEED_TOL = 1e-8
SYMMETRY_TOL = 1e-12


def lambda_of_alpha(alpha: float) -> float:
    if not 0.0 < alpha < 1.0:
        raise OutOfDomain(f"alpha must lie in (0, 1), got {alpha}")
    return (1.0 - alpha) / (2.0 * alpha)


def alpha_of_lambda(lam: float) -> float:
    if not lam > 0.0:
        raise OutOfDomain(f"lambda must be positive, got {lam}")
    return 1.0 / (2.0 * lam + 1.0)


def gram_matrix(g: Graph, lam: float) -> np.ndarray:
    """``lambda I - A_G + J / 2``."""
    return lam * np.eye(g.n) - g.adjacency() + 0.5 * np.ones((g.n, g.n))


def psd_rank(m: np.ndarray, tol: float = RANK_TOL) -> tuple[bool, int, float]:
    """PSD verdict, numerical rank and smallest eigenvalue.

    One relative threshold ``tol * max(1, |largest eigenvalue|)`` drives
    both verdicts so they cannot disagree near zero.
    """
    m = np.asarray(m, dtype=float)
    if m.size == 0:
        return True, 0, 0.0
    if np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
        raise BadParams("matrix is not symmetric")
    values = eigh(m)[0]
    cut = tol * max(1.0, abs(values[-1]))
    return bool(values[0] >= -cut), int(np.sum(values > cut)), float(values[0])


def degree_limit(alpha: float) -> int:
    """``floor(6 / alpha^4)``; the relative nudge keeps e.g. alpha = 0.2 at 3750, not 3749."""
    return math.floor(6.0 / alpha ** 4 * (1.0 + 1e-12))


@dataclass(frozen=True)
class EquiangularCertificate:
    graph: Graph
    alpha: float
    lam: float
    dim: int
    psd: bool
    rank: int
    min_eigenvalue: float
    degree_ok: bool

    @property
    def accepted(self) -> bool:
        return self.psd and self.rank <= self.dim and self.degree_ok


def certificate_check(g: Graph, alpha: float, d: int, tol: float = RANK_TOL) -> EquiangularCertificate:
    lam = lambda_of_alpha(alpha)
    if d < 1:
        raise OutOfDomain("dimension must be >= 1")
    psd, rank, low = psd_rank(gram_matrix(g, lam), tol)
    return EquiangularCertificate(g, alpha, lam, d, psd, rank, low, g.max_degree() <= degree_limit(alpha))


@dataclass(frozen=True)
class LineSystem:
    alpha: float
    dim: int
    vectors: np.ndarray  # N x dim

    @property
    def size(self) -> int:
        return self.vectors.shape[0]

    @property
    def max_norm_residual(self) -> float:
        if self.size == 0:
            return 0.0
        return float(np.max(np.abs(np.linalg.norm(self.vectors, axis=1) - 1.0)))

    @property
    def max_angle_residual(self) -> float:
        if self.size < 2:
            return 0.0
        gram = self.vectors @ self.vectors.T
        off = np.abs(gram[~np.eye(self.size, dtype=bool)])
        return float(np.max(np.abs(off - self.alpha)))


def extract_lines(g: Graph, alpha: float, dim: int | None = None) -> LineSystem:
    """Factor ``2 alpha M`` into unit vectors.

    Vectors live in R^rank, zero-padded to ``dim`` when a larger ambient
    dimension is requested.
    """
    cert = certificate_check(g, alpha, max(1, g.n))
    if not (cert.psd and cert.degree_ok):
        raise NotCertified(f"certificate rejected (psd={cert.psd}, degree_ok={cert.degree_ok}, "
                           f"min eigenvalue {cert.min_eigenvalue:.3g})")
    if g.n == 0:
        return LineSystem(alpha, dim or 0, np.zeros((0, dim or 0)))
    values, vectors = eigh(2.0 * alpha * gram_matrix(g, cert.lam))
    cut = RANK_TOL * max(1.0, abs(values[-1]))
    keep = values > cut
    # descending, so the leading coordinates carry the largest eigenvalues
    vals = values[keep][::-1]
    basis = vectors[:, keep][:, ::-1]
    coords = basis * np.sqrt(vals)[None, :]
    rank = coords.shape[1]
    if dim is None:
        dim = rank
    if dim < rank:
        raise NotCertified(f"rank {rank} exceeds requested dimension {dim}")
    if dim > rank:
        coords = np.hstack([coords, np.zeros((g.n, dim - rank))])
    return LineSystem(alpha, dim, coords)


def verify_lines(system: LineSystem, alpha: float, tol: float = ANGLE_TOL) -> bool:
    """All vectors unit length and every pair at |cosine| = alpha, within ``tol``."""
    vecs = np.asarray(system.vectors, dtype=float)
    if vecs.ndim != 2 or vecs.shape[0] == 0:
        raise DimensionMismatch("need a non-empty N x d array of vectors")
    if vecs.shape[1] != system.dim:
        raise DimensionMismatch(f"vectors have {vecs.shape[1]} coordinates, system says {system.dim}")
    norms = np.linalg.norm(vecs, axis=1)
    if np.any(np.abs(norms - 1.0) > tol):
        return False
    gram = vecs @ vecs.T
    off = np.abs(gram[~np.eye(len(vecs), dtype=bool)])
    return bool(np.all(np.abs(off - alpha) <= tol))


def graph_from_lines(vectors, alpha: float, tol: float = ANGLE_TOL) -> Graph:
    """Inverse map: edge where representatives meet at cosine ``-alpha``.

    Each line's representative is chosen with its first non-zero coordinate
    positive.  The graph is only determined up to switching.
    """
    vecs = np.array(vectors, dtype=float)
    for i, row in enumerate(vecs):
        nz = np.flatnonzero(np.abs(row) > tol)
        if nz.size and row[nz[0]] < 0:
            vecs[i] = -row
    gram = vecs @ vecs.T
    n = len(vecs)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if gram[i, j] < 0]
    return Graph(n, tuple(edges))


def lower_bound_construct(alpha: float, d: int, seed_graph: Graph, pad: bool = False):
    """Lines from ``t = floor((d-1)/(kappa-1))`` disjoint copies of a seed graph.

    The seed must be connected on ``kappa`` vertices with spectral radius
    ``lambda(alpha)``.  Gives ``t * kappa`` lines in R^d, which equals
    ``floor((d-1) kappa / (kappa-1))`` when ``kappa - 1`` divides ``d - 1``.
    With ``pad=True`` the remaining ``d - 1 - t(kappa-1)`` dimensions are
    filled by isolated vertices, reaching that count for every d.
    """
    lam = lambda_of_alpha(alpha)
    if not is_connected(seed_graph):
        raise SeedMismatch("seed graph must be connected")
    top = lambda1(seed_graph)
    if abs(top - lam) > SEED_TOL:
        raise SeedMismatch(f"seed spectral radius {top:.12g} != lambda(alpha) = {lam:.12g}")
    kappa = seed_graph.n
    if kappa < 2:
        raise SeedMismatch("seed must have at least two vertices")
    if d < kappa:
        raise BadParams(f"need d >= kappa = {kappa}")
    t = (d - 1) // (kappa - 1)
    g = disjoint_copies(seed_graph, t)
    if pad:
        extra = d - 1 - t * (kappa - 1)
        if extra:
            g = disjoint_union(g, empty_graph(extra))
    cert = certificate_check(g, alpha, d)
    if not cert.accepted:
        raise NotCertified(f"construction rejected: psd={cert.psd}, rank={cert.rank}, d={d}")
    return g, extract_lines(g, alpha, d)


@dataclass(frozen=True)
class AsymptoticForm:
    """``N_alpha(d) <= d + constant``, with the matching lower bound ``N >= d``."""

    dim: int
    constant: int

    def __str__(self):
        return f"d + O(1) with d = {self.dim} and additive constant <= {self.constant}"


def max_lines_formula(alpha: float, kappa, d: int):
    """``floor((d-1) kappa / (kappa-1))`` for finite kappa, otherwise ``d + O(1)``."""
    if d < 2:
        raise BadParams("d must be >= 2")
    if kappa is None or kappa == math.inf:
        lam = lambda_of_alpha(alpha)
        return AsymptoticForm(d, 1 + theorem_bound(lam, degree_limit(alpha)))
    kappa = int(kappa)
    if kappa < 2:
        raise BadParams("kappa must be >= 2")
    return (d - 1) * kappa // (kappa - 1)


# -- serialisation --------------------------------------------------------------

def lines_to_csv(system: LineSystem) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in system.vectors:
        writer.writerow([f"{x:.17g}" for x in row])
    return buf.getvalue()


def lines_from_csv(text: str, alpha: float) -> LineSystem:
    rows = [[float(x) for x in r] for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise DimensionMismatch("no vectors")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise DimensionMismatch(f"rows have differing lengths {sorted(widths)}")
    return LineSystem(alpha, widths.pop(), np.array(rows))


def lines_to_json(system: LineSystem) -> str:
    payload = {"header": {"alpha": system.alpha, "dim": system.dim},
               "vectors": [[float(f"{x:.17g}") for x in row] for row in system.vectors]}
    return json.dumps(payload) + "\n"


def lines_from_json(text: str) -> LineSystem:
    payload = json.loads(text)
    head = payload["header"]
    vecs = payload["vectors"]
    widths = {len(r) for r in vecs}
    if len(widths) > 1:
        raise DimensionMismatch(f"rows have differing lengths {sorted(widths)}")
    arr = np.array(vecs, dtype=float).reshape(len(vecs), int(head["dim"]) if not vecs else -1)
    return LineSystem(float(head["alpha"]), int(head["dim"]), arr)
