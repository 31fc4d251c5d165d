"""Pure-Python implementations of the hot kernels.

These are the reference versions.  ``_core.pyx`` mirrors them: the canonical
search returns identical keys and permutations, the Jacobi sweep agrees to
rounding (summation order differs).
"""
import math

import numpy as np

MAX_SWEEPS = 100
MAX_CANON_N = 11  # n(n-1)/2 bits must fit in a 64-bit key


def refine(n, rows):
    """Colour refinement from degrees.

    A vertex's signature is its colour followed by the histogram of its
    neighbours' colours; new colours are ranks of the sorted distinct
    signatures.  Stops once the number of colours no longer grows.
    """
    colors = [bin(rows[v]).count("1") for v in range(n)]
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            hist = [0] * n
            r = rows[v]
            for u in range(n):
                if r >> u & 1:
                    hist[colors[u]] += 1
            sigs.append((colors[v], *hist))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return colors
        ncolors = len(ranks)


def canonical_search(n, rows, cells):
    """Minimal upper-triangle adjacency key over cell-respecting orderings.

    ``rows[v]`` is the neighbour bitmask of ``v``; ``cells`` lists vertex
    classes in the order they occupy positions.  Returns ``(key, perm)`` with
    ``perm[i]`` the original vertex placed at position ``i``.  Bits are read
    column by column (j = 1..n-1, i = 0..j-1), first bit most significant.

    Twins (vertices with the same neighbours apart from each other) are
    swapped by an automorphism, so only the first of each twin class is
    tried at a given position.
    """
    if n > MAX_CANON_N:
        raise ValueError(f"canonical_search supports n <= {MAX_CANON_N}")
    if n <= 1:
        return 0, list(range(n))
    total = n * (n - 1) // 2
    cell_at = []
    for c, cell in enumerate(cells):
        cell_at.extend([c] * len(cell))
    used = [False] * n
    perm = [0] * n
    best = [None, None]

    def descend(j, prefix):
        if j == n:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
                best[1] = perm[:]
            return
        used_bits = j * (j + 1) // 2
        tried = []
        for v in cells[cell_at[j]]:
            if used[v]:
                continue
            row = rows[v]
            if any(row & ~(1 << u) == rows[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            col = 0
            for i in range(j):
                col = (col << 1) | ((row >> perm[i]) & 1)
            key = (prefix << j) | col
            if best[0] is not None and key > (best[0] >> (total - used_bits)):
                continue
            used[v] = True
            perm[j] = v
            descend(j + 1, key)
            used[v] = False

    descend(0, 0)
    return best[0], best[1]


def canonical_label(n, rows):
    """Canonical key and ordering: refinement classes, then exhaustive search."""
    colors = refine(n, rows)
    cells = [[v for v in range(n) if colors[v] == c] for c in range(max(colors, default=-1) + 1)]
    return canonical_search(n, rows, cells)


def jacobi_eigh(a, max_sweeps=MAX_SWEEPS):
    """Cyclic Jacobi diagonalisation of a symmetric matrix.

    Returns ``(values, vectors, sweeps)`` with values ascending and the
    eigenvectors as columns, or ``None`` for ``sweeps`` if the cap was hit.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    fro = math.sqrt(float(np.sum(a * a)))
    threshold = n * 2.220446049250313e-16 * fro
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off <= threshold:
            order = np.argsort(np.diag(a), kind="stable")
            return np.diag(a)[order].copy(), v[:, order].copy(), sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # theta^2 would overflow
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    order = np.argsort(np.diag(a), kind="stable")
    return np.diag(a)[order].copy(), v[:, order].copy(), None
