"""Exact distance parameters from label arithmetic.

No pairwise query needs a graph search: strip the longest common suffix,
then branch on the digit classes at the right end of what remains. Either
the shortest path runs through the global root, so the two alternating
numbers add, or both labels end nonzero and one of them has a length-1
uniform suffix, in which case the path crosses directly between the
adjacent roots of the two sibling copies and saves one hop.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._arrays import digit_matrix
from ._backend import kernels
from .labels import (
    Label,
    RadixSpec,
    alt,
    alt_digits,
    common_suffix_len,
    conjugate,
    require_same_spec,
    uniform_suffix_len,
)


class DistanceCase(Enum):
    SAME = "same"
    THROUGH_ROOT_I = "through_root_i"
    THROUGH_ROOT_II = "through_root_ii"
    COPY_ROOTS_III = "copy_roots_iii"


@dataclass(frozen=True)
class DistanceResult:
    """Hop count plus the reduction case that produced it."""

    value: int
    case: DistanceCase
    common_suffix_len: int


def dist_to_root(x: Label) -> int:
    """Hop count from a label to the all-zero root: its alternating number."""
    return alt(x)


def distance(x: Label, y: Label) -> DistanceResult:
    """Exact hop count between two labels of the same member."""
    require_same_spec(x, y)
    k = x.spec.k
    s = common_suffix_len(x, y)
    if s == k:
        return DistanceResult(0, DistanceCase.SAME, s)
    m = k - s
    a = x.digits[:m]
    b = y.digits[:m]
    if a[-1] == 0 or b[-1] == 0:
        return DistanceResult(alt_digits(a) + alt_digits(b), DistanceCase.THROUGH_ROOT_I, s)
    if uniform_suffix_len(a) > 1 and uniform_suffix_len(b) > 1:
        return DistanceResult(alt_digits(a) + alt_digits(b), DistanceCase.THROUGH_ROOT_II, s)
    return DistanceResult(
        alt_digits(a[:-1]) + alt_digits(b[:-1]) + 1, DistanceCase.COPY_ROOTS_III, s
    )


def eccentricity(x: Label) -> int:
    """Largest distance from x to any vertex, by a full closed-form sweep.

    Enumerates the member (cap enforced); trust in the sweep rests on the
    closed-form distance being verified pair-by-pair against breadth-first
    search in the oracle battery.
    """
    mat = digit_matrix(x.spec)
    kern = kernels.DistanceKernel(mat)
    out = np.empty(mat.shape[0], dtype=np.int32)
    kern.row(x.spec.index_of(x.digits), out)
    return int(out.max())


def eccentricity_formula(x: Label) -> int:
    """The closed-form eccentricity as classically stated, verbatim.

    Exact on all-radix-2 members. On other members the "otherwise" branch
    overshoots for some vertices (label 11 on radices 2,3 is the smallest
    case: stated 3, true 2); `eccentricity_discrepancies` collects every
    vertex where this value differs from the true sweep, and the sweep is
    the value to trust.
    """
    k = x.spec.k
    if all(n == 2 for n in x.spec.radices):
        if x.digits[-1] == 0:
            return alt(x) + k
        return alt(conjugate(x)) + k
    if x.digits[-1] != 0 and uniform_suffix_len(x.digits) == 1:
        return alt(x) + k - 1
    return alt(x) + k


@dataclass(frozen=True)
class EccDiscrepancy:
    label: Label
    formula: int
    actual: int


def eccentricity_discrepancies(spec: RadixSpec) -> list[EccDiscrepancy]:
    """Vertices where the stated closed form disagrees with the true sweep."""
    mat = digit_matrix(spec)
    kern = kernels.DistanceKernel(mat)
    actual = np.empty(mat.shape[0], dtype=np.int32)
    kern.eccentricities(actual)
    out = []
    for idx, lab in enumerate(spec.labels()):
        stated = eccentricity_formula(lab)
        if stated != int(actual[idx]):
            out.append(EccDiscrepancy(lab, stated, int(actual[idx])))
    return out


def radius(spec: RadixSpec) -> int:
    """Closed-form radius: the depth k, attained at the root.

    A depth-1 member is a complete graph, where this is simply 1.
    """
    return spec.k


def diameter(spec: RadixSpec) -> int:
    """Closed-form diameter 2k - 1 (which is 1 for a complete graph)."""
    return 2 * spec.k - 1


def radius_diameter_scan(spec: RadixSpec) -> tuple[int, int]:
    """Radius and diameter recomputed from a full eccentricity sweep."""
    mat = digit_matrix(spec)
    kern = kernels.DistanceKernel(mat)
    ecc = np.empty(mat.shape[0], dtype=np.int32)
    kern.eccentricities(ecc)
    return int(ecc.min()), int(ecc.max())


@dataclass(frozen=True)
class LayerHistogram:
    """Vertex counts by distance from the root, indices 0..k."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]


def layer_counts(spec: RadixSpec) -> LayerHistogram:
    """Counts of vertices at each root distance, by a digit-position DP.

    Walks positions left to right tracking the running digit class and the
    transition count of the extended string; a zero digit carries weight 1
    and a nonzero digit weight n_j - 1. No enumeration happens, so this
    works above the order cap.
    """
    k = spec.k
    # state: (last class is nonzero, transitions so far) -> label count
    state: dict[tuple[bool, int], int] = {
        (False, 0): 1,
        (True, 0): spec.radices[0] - 1,
    }
    for n in spec.radices[1:]:
        nxt: dict[tuple[bool, int], int] = {}
        for (cls, t), w in state.items():
            for new_cls in (False, True):
                weight = w * (n - 1 if new_cls else 1)
                key = (new_cls, t + (new_cls != cls))
                nxt[key] = nxt.get(key, 0) + weight
        state = nxt
    counts = [0] * (k + 1)
    for (cls, t), w in state.items():
        counts[t + (1 if cls else 0)] += w
    return LayerHistogram(tuple(counts))
