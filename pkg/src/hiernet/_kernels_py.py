"""Pure NumPy fallback for the bulk kernels.

Same call surface as the compiled extension module; selected automatically
when the extension is not built. Vectorized where it pays, but expect
roughly an order of magnitude less throughput on large sweeps (see
benchmarks/bench_kernels.py).
"""

from __future__ import annotations

import numpy as np

NAME = "pure"


def alt_values(digits: np.ndarray) -> np.ndarray:
    """Alternating number of every row of a digit matrix."""
    d = np.asarray(digits)
    nz = d != 0
    if d.shape[1] == 1:
        return nz[:, 0].astype(np.int32)
    trans = (nz[:, 1:] != nz[:, :-1]).sum(axis=1)
    return (trans + nz[:, -1]).astype(np.int32)


def bfs_distances(indptr: np.ndarray, indices: np.ndarray, source: int, dist: np.ndarray) -> None:
    """Unweighted BFS over CSR adjacency; unreached entries stay -1."""
    dist[:] = -1
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        starts = indptr[frontier].astype(np.int64)
        counts = indptr[frontier + 1].astype(np.int64) - starts
        total = int(counts.sum())
        if total == 0:
            break
        ends = counts.cumsum()
        gather = np.repeat(starts - (ends - counts), counts) + np.arange(total)
        nbrs = indices[gather]
        nbrs = nbrs[dist[nbrs] < 0]
        if nbrs.size == 0:
            break
        frontier = np.unique(nbrs).astype(np.int64)
        level += 1
        dist[frontier] = level


class DistanceKernel:
    """Closed-form pairwise distances over a digit matrix.

    Precomputes, per row, the alternating number of every prefix and the
    maximal uniform suffix length of every prefix, then resolves each pair
    by stripping the common suffix and branching on the digit classes at
    the right end of what remains.
    """

    def __init__(self, digits: np.ndarray):
        d = np.ascontiguousarray(digits, dtype=np.int32)
        self.digits = d
        self.n, self.k = d.shape
        nz = d != 0
        k = self.k
        altp = np.zeros((self.n, k + 1), dtype=np.int32)
        altp[:, 1] = nz[:, 0]
        usuf = np.zeros((self.n, k + 1), dtype=np.int32)
        usuf[:, 1] = 1
        if k > 1:
            bound = nz[:, 1:] != nz[:, :-1]
            cb = np.cumsum(bound, axis=1, dtype=np.int32)
            altp[:, 2:] = cb + nz[:, 1:]
            pos = np.where(bound, np.arange(k - 1, dtype=np.int32), np.int32(-1))
            last = np.maximum.accumulate(pos, axis=1)
            ms = np.arange(2, k + 1, dtype=np.int32)
            usuf[:, 2:] = ms[None, :] - 1 - last
        self._altp = altp
        self._usuf = usuf

    def row(self, src: int, out: np.ndarray) -> None:
        """Distances from one row to every row."""
        d = self.digits
        k = self.k
        eqrev = (d == d[src])[:, ::-1]
        suffix = eqrev.cumprod(axis=1).sum(axis=1)
        m = (k - suffix).astype(np.int64)
        out[:] = 0
        pick = np.nonzero(m > 0)[0]
        if pick.size == 0:
            return
        mi = m[pick]
        xl = d[src][mi - 1]
        yl = d[pick, mi - 1]
        altp = self._altp
        through_root = (xl == 0) | (yl == 0)
        through_root |= (self._usuf[src, mi] > 1) & (self._usuf[pick, mi] > 1)
        res = np.where(
            through_root,
            altp[src, mi] + altp[pick, mi],
            altp[src, mi - 1] + altp[pick, mi - 1] + 1,
        )
        out[pick] = res.astype(out.dtype)

    def eccentricities(self, out: np.ndarray) -> None:
        """Max distance per vertex, by a full row sweep."""
        buf = np.empty(self.n, dtype=np.int32)
        for i in range(self.n):
            self.row(i, buf)
            out[i] = buf.max()
