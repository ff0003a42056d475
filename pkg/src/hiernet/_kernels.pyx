# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled bulk kernels: CSR breadth-first search and closed-form distance
sweeps over a digit matrix. Mirrors the pure module `_kernels_py`."""

import numpy as np

NAME = "compiled"


cdef void _alt_rows(const int[:, ::1] d, int[::1] out) noexcept nogil:
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t k = d.shape[1]
    cdef Py_ssize_t i, j
    cdef int t, prev, cur
    for i in range(n):
        t = 0
        prev = 1 if d[i, 0] != 0 else 0
        for j in range(1, k):
            cur = 1 if d[i, j] != 0 else 0
            if cur != prev:
                t += 1
            prev = cur
        if prev:
            t += 1
        out[i] = t


def alt_values(digits):
    """Alternating number of every row of a digit matrix."""
    d = np.ascontiguousarray(digits, dtype=np.int32)
    out = np.empty(d.shape[0], dtype=np.int32)
    cdef const int[:, ::1] dv = d
    cdef int[::1] ov = out
    with nogil:
        _alt_rows(dv, ov)
    return out


cdef inline int _alt_prefix(const int[:, ::1] d, Py_ssize_t row, int m) noexcept nogil:
    cdef int t = 0
    cdef int prev, cur, j
    if m == 0:
        return 0
    prev = 1 if d[row, 0] != 0 else 0
    for j in range(1, m):
        cur = 1 if d[row, j] != 0 else 0
        if cur != prev:
            t += 1
        prev = cur
    if prev:
        t += 1
    return t


cdef inline int _uniform_suffix(const int[:, ::1] d, Py_ssize_t row, int m) noexcept nogil:
    cdef int cls = 1 if d[row, m - 1] != 0 else 0
    cdef int t = 1
    cdef int j = m - 2
    while j >= 0 and (1 if d[row, j] != 0 else 0) == cls:
        t += 1
        j -= 1
    return t


cdef int _pair_distance(const int[:, ::1] d, Py_ssize_t a, Py_ssize_t b, int k) noexcept nogil:
    cdef int s = 0
    cdef int m, xl, yl
    while s < k and d[a, k - 1 - s] == d[b, k - 1 - s]:
        s += 1
    m = k - s
    if m == 0:
        return 0
    xl = d[a, m - 1]
    yl = d[b, m - 1]
    if xl == 0 or yl == 0:
        return _alt_prefix(d, a, m) + _alt_prefix(d, b, m)
    if _uniform_suffix(d, a, m) > 1 and _uniform_suffix(d, b, m) > 1:
        return _alt_prefix(d, a, m) + _alt_prefix(d, b, m)
    return _alt_prefix(d, a, m - 1) + _alt_prefix(d, b, m - 1) + 1


cdef class DistanceKernel:
    """Closed-form pairwise distances over a digit matrix."""

    cdef object _arr
    cdef const int[:, ::1] digits
    cdef Py_ssize_t n
    cdef int k

    def __init__(self, digits):
        self._arr = np.ascontiguousarray(digits, dtype=np.int32)
        self.digits = self._arr
        self.n = self._arr.shape[0]
        self.k = <int> self._arr.shape[1]

    def row(self, src, out):
        """Distances from one row to every row."""
        cdef int[::1] o = out
        cdef Py_ssize_t i
        cdef Py_ssize_t s = src
        cdef const int[:, ::1] d = self.digits
        cdef int k = self.k
        with nogil:
            for i in range(self.n):
                o[i] = _pair_distance(d, s, i, k)

    def eccentricities(self, out):
        """Max distance per vertex, by a full pair sweep."""
        cdef int[::1] o = out
        cdef Py_ssize_t i, j
        cdef int best, v
        cdef const int[:, ::1] d = self.digits
        cdef int k = self.k
        with nogil:
            for i in range(self.n):
                best = 0
                for j in range(self.n):
                    v = _pair_distance(d, i, j, k)
                    if v > best:
                        best = v
                o[i] = best


cdef void _bfs(const int[::1] indptr, const int[::1] indices, int source,
               int[::1] dist, int[::1] queue) noexcept nogil:
    cdef Py_ssize_t n = dist.shape[0]
    cdef Py_ssize_t head = 0, tail = 0
    cdef Py_ssize_t i, e
    cdef int v, w
    for i in range(n):
        dist[i] = -1
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue[tail] = w
                tail += 1


def bfs_distances(indptr, indices, source, dist):
    """Unweighted BFS over CSR adjacency; unreached entries stay -1."""
    queue = np.empty(dist.shape[0], dtype=np.int32)
    cdef const int[::1] ip = indptr
    cdef const int[::1] ix = indices
    cdef int[::1] dv = dist
    cdef int[::1] qv = queue
    cdef int src = source
    with nogil:
        _bfs(ip, ix, src, dv, qv)
