"""Adjacency spectra, eigenvalue clusters and the spider radius recursion.

The spider ``T(l, l, l)`` has the same spectral radius as the (l+1)x(l+1)
matrix obtained by collapsing each distance layer from the centre.  Its
characteristic polynomial obeys

    P_0(t) = t,  P_1(t) = t^2 - 3,  P_l(t) = t P_{l-1}(t) - P_{l-2}(t).

That layered matrix is diagonally similar to a symmetric tridiagonal matrix
with positive off-diagonal entries, and ``P_{l-1}`` is the characteristic
polynomial of its leading block, so the roots of consecutive polynomials
strictly interlace.  Hence the largest root ``r_{l-1}`` of ``P_{l-1}`` lies
between the two largest roots of ``P_l``: ``P_l(r_{l-1}) < 0`` and
``P_l > 0`` beyond its largest root, which makes ``[r_{l-1}, 3/sqrt(2) + 0.1]``
a valid bisection bracket for ``r_l``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import BadParams, ConvergenceFailure, Disconnected, OutOfDomain
from .graph import Graph, is_connected

SPIDER_LIMIT = 3.0 / math.sqrt(2.0)
INTERLACE_EPS = 1e-9
GROUP_RTOL = 1e-7
SPIDER_ATOL = 1e-12
MAX_SPIDER_LEG = 400


@dataclass(frozen=True)
class EigenGroup:
    value: float
    multiplicity: int
    basis: np.ndarray  # n x multiplicity, orthonormal columns
    start: int  # 0-based position of the first member in the descending list

    @property
    def index(self) -> int:
        """1-based descending index of the first eigenvalue in the group."""
        return self.start + 1


@dataclass(frozen=True)
class SpectralSummary:
    values: np.ndarray  # descending
    groups: tuple[EigenGroup, ...]
    tol: float

    @property
    def n(self) -> int:
        return len(self.values)

    def group(self, k: int) -> EigenGroup:
        """The k-th group (1-based, descending)."""
        if not 1 <= k <= len(self.groups):
            raise BadParams(f"group {k} does not exist (have {len(self.groups)})")
        return self.groups[k - 1]

    def group_of_value(self, value: float) -> EigenGroup | None:
        for grp in self.groups:
            if abs(grp.value - value) <= self.tol:
                return grp
        return None


def eigh(a: np.ndarray, method: str = "lapack") -> tuple[np.ndarray, np.ndarray]:
    """Symmetric eigendecomposition, ascending, via LAPACK or cyclic Jacobi."""
    if method == "lapack":
        try:
            return np.linalg.eigh(a)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceFailure(str(exc)) from exc
    if method == "jacobi":
        values, vectors, sweeps = _kernels.jacobi_eigh(a)
        if sweeps is None:
            raise ConvergenceFailure(f"Jacobi did not converge in {_kernels.MAX_SWEEPS} sweeps")
        return values, vectors
    raise BadParams(f"unknown eigensolver {method!r}")


def group_eigenpairs(values: np.ndarray, vectors: np.ndarray, tol: float) -> tuple[EigenGroup, ...]:
    """Split a descending spectrum wherever consecutive values differ by more than ``tol``."""
    groups = []
    start = 0
    n = len(values)
    for i in range(1, n + 1):
        if i == n or values[i - 1] - values[i] > tol:
            members = values[start:i]
            groups.append(EigenGroup(float(np.mean(members)), i - start,
                                     vectors[:, start:i].copy(), start))
            start = i
    return tuple(groups)


def adjacency_eigen(g: Graph, tol: float | None = None, method: str = "lapack") -> SpectralSummary:
    """Descending adjacency spectrum grouped into clusters.

    The default grouping tolerance is ``1e-7 * max(1, lambda_1)``.
    """
    if g.n < 1:
        raise BadParams("need at least one vertex")
    values, vectors = eigh(g.adjacency(), method)
    values = values[::-1].copy()
    vectors = vectors[:, ::-1].copy()
    if tol is None:
        tol = GROUP_RTOL * max(1.0, abs(values[0]))
    return SpectralSummary(values, group_eigenpairs(values, vectors, tol), tol)


def eigenvalues(g: Graph) -> np.ndarray:
    """Descending adjacency eigenvalues."""
    if g.n == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(g.adjacency())[::-1].copy()


def lambda1(g: Graph) -> float:
    return float(eigenvalues(g)[0]) if g.n else 0.0


def lambda2(g: Graph) -> float:
    return float(eigenvalues(g)[1])


# -- spider recursion ---------------------------------------------------------

def spider_charpoly_eval(ell: int, t: float) -> float:
    """``P_ell(t)`` evaluated by the three-term recursion."""
    if ell < 0:
        raise BadParams("ell must be >= 0")
    prev, cur = t, t * t - 3.0
    if ell == 0:
        return prev
    for _ in range(ell - 1):
        prev, cur = cur, t * cur - prev
    return cur


def theta(t: float) -> float:
    """``(t + sqrt(t^2 - 4)) / 2``, real for t >= 2."""
    return (t + math.sqrt(t * t - 4.0)) / 2.0


def spider_charpoly_closed(ell: int, t: float) -> float:
    """Closed form of ``P_ell`` in powers of theta(t); only valid for t > 2."""
    if t <= 2.0 + 1e-6:
        raise OutOfDomain("closed form requires t > 2")
    th = theta(t)
    p0, p1 = t, t * t - 3.0
    a = (th * p1 - p0) / (th * th - 1.0)
    b = (p0 - p1 / th) / (1.0 - th ** -2)
    return a * th ** ell + b * th ** -ell


def _bisect_largest_root(ell: int, lo: float, hi: float) -> float:
    flo = spider_charpoly_eval(ell, lo)
    if flo == 0.0:
        # Only possible when lo is itself a root; move just inside the bracket.
        lo = math.nextafter(lo, hi)
    while hi - lo > SPIDER_ATOL / 4:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if spider_charpoly_eval(ell, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@lru_cache(maxsize=None)
def spider_radius(ell: int) -> float:
    """Largest root of ``P_ell``, i.e. the spectral radius of ``T(ell, ell, ell)``."""
    if ell < 1:
        raise BadParams("ell must be >= 1")
    lo = 0.0 if ell == 1 else spider_radius(ell - 1)
    return _bisect_largest_root(ell, lo, SPIDER_LIMIT + 0.1)


def spider_exceeds(ell: int, lam: float) -> bool:
    """Whether ``spider_radius(ell) > lam``, decided by the sign of ``P_ell(lam)``.

    For ``lam`` at or above the previous radius, interlacing gives
    ``r_ell > lam`` iff ``P_ell(lam) < 0``; exact roots (P = 0) count as not
    exceeding.  This avoids rounding at values such as ``r_2 = 2``.
    """
    prev = 0.0 if ell == 1 else spider_radius(ell - 1)
    if lam < prev - 1e-9:
        return True
    if lam > SPIDER_LIMIT:
        return False
    return spider_charpoly_eval(ell, lam) < 0.0


def n_lambda(lam: float) -> int:
    """Smallest ell with ``spider_radius(ell) > lam``; needs 0 < lam < 3/sqrt(2)."""
    if not 0.0 < lam < SPIDER_LIMIT - 1e-12:
        raise OutOfDomain(f"n_lambda needs 0 < lambda < 3/sqrt(2), got {lam}")
    for ell in range(1, MAX_SPIDER_LEG + 1):
        if spider_exceeds(ell, lam):
            return ell
    raise OutOfDomain(f"lambda={lam} is numerically indistinguishable from 3/sqrt(2)")


# -- Perron vector --------------------------------------------------------------

def spectral_radius(g: Graph) -> tuple[float, np.ndarray]:
    """Spectral radius and the unit, entrywise non-negative Perron vector."""
    if not is_connected(g):
        raise Disconnected("spectral_radius needs a connected graph")
    if g.n == 1:
        return 0.0, np.ones(1)
    values, vectors = eigh(g.adjacency())
    v = vectors[:, -1]
    if v.sum() < 0:
        v = -v
    v = np.abs(v)
    return float(values[-1]), v / np.linalg.norm(v)


# -- interlacing ----------------------------------------------------------------

def interlacing_check(parent_values, sub_values, eps: float = INTERLACE_EPS) -> bool:
    """Cauchy interlacing for a principal m x m submatrix of an n x n matrix.

    Checks ``lambda_k(A) >= lambda_k(B) >= lambda_{k+n-m}(A)`` for k = 1..m.
    """
    a = np.asarray(parent_values, dtype=float)
    b = np.asarray(sub_values, dtype=float)
    n, m = len(a), len(b)
    if m > n:
        raise BadParams("submatrix cannot be larger than the matrix")
    for k in range(m):
        if not (a[k] + eps >= b[k] >= a[k + n - m] - eps):
            return False
    return True
