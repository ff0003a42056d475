"""Dense array materialization used by the bulk kernels.

Row i of the digit matrix holds the digits of the vertex with
lexicographic rank i, so `RadixSpec.index_of` and `digits_at` convert
between labels and row indices without any lookup table.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .labels import RadixSpec
from .topology import neighbor_digits

_MATRIX_CACHE: dict[tuple[int, ...], np.ndarray] = {}
_MATRIX_CACHE_SLOTS = 4


def digit_matrix(spec: RadixSpec) -> np.ndarray:
    """All vertex digit rows in lexicographic order, shape (order, k)."""
    spec.check_enumerable()
    cached = _MATRIX_CACHE.get(spec.radices)
    if cached is not None:
        return cached
    grids = np.meshgrid(
        *(np.arange(n, dtype=np.int32) for n in spec.radices), indexing="ij"
    )
    mat = np.ascontiguousarray(
        np.stack(grids, axis=-1).reshape(spec.order(), spec.k), dtype=np.int32
    )
    mat.setflags(write=False)
    while len(_MATRIX_CACHE) >= _MATRIX_CACHE_SLOTS:
        _MATRIX_CACHE.pop(next(iter(_MATRIX_CACHE)))
    _MATRIX_CACHE[spec.radices] = mat
    return mat


def csr_adjacency(spec: RadixSpec) -> tuple[np.ndarray, np.ndarray]:
    """CSR neighbor structure (indptr, indices) over lexicographic indices.

    Neighbor lists are sorted per vertex, so the structure is canonical.
    """
    spec.check_enumerable()
    radices = spec.radices
    n = spec.order()
    indptr = np.zeros(n + 1, dtype=np.int32)
    flat: list[int] = []
    for i, digits in enumerate(product(*(range(r) for r in radices))):
        row = sorted(spec.index_of(nd) for nd, _ in neighbor_digits(digits, radices))
        flat.extend(row)
        indptr[i + 1] = len(flat)
    return indptr, np.asarray(flat, dtype=np.int32)
