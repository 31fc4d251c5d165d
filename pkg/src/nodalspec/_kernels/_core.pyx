# cython: language_level=3
"""Compiled kernels: branch-and-bound canonical labelling and cyclic Jacobi."""
from libc.math cimport sqrt, fabs
from libc.stdint cimport uint64_t

import numpy as np
cimport numpy as cnp

cnp.import_array()

DEF MAXN = 11

MAX_SWEEPS = 100
MAX_CANON_N = MAXN


cdef struct Search:
    int n
    int total
    uint64_t rows[MAXN]
    int cell_start[MAXN]
    int cell_end[MAXN]
    int order[MAXN]
    int used[MAXN]
    int perm[MAXN]
    int best_perm[MAXN]
    uint64_t best
    int have_best


cdef void _descend(Search* s, int j, uint64_t prefix) nogil:
    cdef int k, v, i, t, ntried, twin
    cdef int tried[MAXN]
    cdef uint64_t col, key, row, one = 1
    cdef int used_bits
    if j == s.n:
        if not s.have_best or prefix < s.best:
            s.best = prefix
            s.have_best = 1
            for i in range(s.n):
                s.best_perm[i] = s.perm[i]
        return
    used_bits = j * (j + 1) // 2
    ntried = 0
    for k in range(s.cell_start[j], s.cell_end[j]):
        v = s.order[k]
        if s.used[v]:
            continue
        row = s.rows[v]
        # twins are exchanged by an automorphism; try one per class
        twin = 0
        for t in range(ntried):
            if (row & ~(one << tried[t])) == (s.rows[tried[t]] & ~(one << v)):
                twin = 1
                break
        if twin:
            continue
        tried[ntried] = v
        ntried += 1
        col = 0
        for i in range(j):
            col = (col << 1) | ((row >> s.perm[i]) & 1)
        key = (prefix << j) | col
        if s.have_best and key > (s.best >> (s.total - used_bits)):
            continue
        s.used[v] = 1
        s.perm[j] = v
        _descend(s, j + 1, key)
        s.used[v] = 0


def canonical_search(int n, rows, cells):
    """Same contract as ``_pure.canonical_search``."""
    cdef Search s
    cdef int i, pos, start, c
    if n > MAXN:
        raise ValueError(f"canonical_search supports n <= {MAXN}")
    if n <= 1:
        return 0, list(range(n))
    s.n = n
    s.total = n * (n - 1) // 2
    s.have_best = 0
    s.best = 0
    for i in range(n):
        s.rows[i] = <uint64_t>rows[i]
        s.used[i] = 0
    pos = 0
    for cell in cells:
        start = pos
        for v in cell:
            s.order[pos] = v
            pos += 1
        for c in range(start, pos):
            s.cell_start[c] = start
            s.cell_end[c] = pos
    if pos != n:
        raise ValueError("cells must partition the vertex set")
    with nogil:
        _descend(&s, 0, 0)
    return int(s.best), [s.best_perm[i] for i in range(n)]


cdef void _refine(int n, uint64_t* rows, int* colors) nogil:
    cdef int sig[MAXN][MAXN + 1]
    cdef int order[MAXN]
    cdef int v, u, c, i, j, k, tmp, ncolors, newcount, cmp
    cdef int rank[MAXN]
    for v in range(n):
        c = 0
        for u in range(n):
            if (rows[v] >> u) & 1:
                c += 1
        colors[v] = c
    # number of distinct degrees
    ncolors = 0
    for v in range(n):
        k = 1
        for u in range(v):
            if colors[u] == colors[v]:
                k = 0
                break
        ncolors += k
    while True:
        for v in range(n):
            sig[v][0] = colors[v]
            for c in range(n):
                sig[v][c + 1] = 0
            for u in range(n):
                if (rows[v] >> u) & 1:
                    sig[v][colors[u] + 1] += 1
            order[v] = v
        # insertion sort of vertices by signature
        for i in range(1, n):
            tmp = order[i]
            j = i - 1
            while j >= 0 and _sigcmp(sig[order[j]], sig[tmp], n + 1) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = tmp
        newcount = 0
        for i in range(n):
            if i > 0 and _sigcmp(sig[order[i - 1]], sig[order[i]], n + 1) != 0:
                newcount += 1
            rank[order[i]] = newcount
        newcount += 1
        for v in range(n):
            colors[v] = rank[v]
        if newcount == ncolors:
            return
        ncolors = newcount


cdef inline int _sigcmp(int* a, int* b, int length) nogil:
    cdef int i
    for i in range(length):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


def canonical_label(int n, rows):
    """Same contract as ``_pure.canonical_label``."""
    cdef Search s
    cdef int colors[MAXN]
    cdef int i, c, pos, start
    if n > MAXN:
        raise ValueError(f"canonical_label supports n <= {MAXN}")
    if n <= 1:
        return 0, list(range(n))
    s.n = n
    s.total = n * (n - 1) // 2
    s.have_best = 0
    s.best = 0
    for i in range(n):
        s.rows[i] = <uint64_t>rows[i]
        s.used[i] = 0
    with nogil:
        _refine(n, s.rows, colors)
        pos = 0
        for c in range(n):
            start = pos
            for i in range(n):
                if colors[i] == c:
                    s.order[pos] = i
                    pos += 1
            for i in range(start, pos):
                s.cell_start[i] = start
                s.cell_end[i] = pos
        _descend(&s, 0, 0)
    return int(s.best), [s.best_perm[i] for i in range(n)]


def refine(int n, rows):
    """Same contract as ``_pure.refine``."""
    cdef uint64_t r[MAXN]
    cdef int colors[MAXN]
    cdef int i
    if n > MAXN:
        raise ValueError(f"refine supports n <= {MAXN}")
    for i in range(n):
        r[i] = <uint64_t>rows[i]
    _refine(n, r, colors)
    return [colors[i] for i in range(n)]


def jacobi_eigh(a, int max_sweeps=MAX_SWEEPS):
    """Same contract as ``_pure.jacobi_eigh``."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] arr = np.array(a, dtype=np.float64, copy=True, order="C")
    cdef int n = arr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] vec = np.eye(n)
    cdef double[:, ::1] A = arr
    cdef double[:, ::1] V = vec
    cdef int p, q, k, sweep
    cdef double apq, theta, t, c, s, x, y, off, fro, threshold
    fro = 0.0
    for p in range(n):
        for q in range(n):
            fro += A[p, q] * A[p, q]
    fro = sqrt(fro)
    threshold = n * 2.220446049250313e-16 * fro
    converged = None
    with nogil:
        sweep = 0
        while True:
            off = 0.0
            for p in range(n):
                for q in range(n):
                    if p != q:
                        off += A[p, q] * A[p, q]
            off = sqrt(off)
            if off <= threshold or sweep == max_sweeps:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = A[p, q]
                    if apq == 0.0:
                        continue
                    theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = (1.0 if theta >= 0 else -1.0) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        x = A[k, p]
                        y = A[k, q]
                        A[k, p] = c * x - s * y
                        A[k, q] = s * x + c * y
                    for k in range(n):
                        x = A[p, k]
                        y = A[q, k]
                        A[p, k] = c * x - s * y
                        A[q, k] = s * x + c * y
                    A[p, q] = 0.0
                    A[q, p] = 0.0
                    for k in range(n):
                        x = V[k, p]
                        y = V[k, q]
                        V[k, p] = c * x - s * y
                        V[k, q] = s * x + c * y
            sweep += 1
    if off <= threshold:
        converged = sweep
    diag = np.diag(arr).copy()
    order = np.argsort(diag, kind="stable")
    return diag[order].copy(), vec[:, order].copy(), converged
