"""Label-local shortest-path construction.

Descent to the root is the single primitive: flip the maximal uniform
prefix (a nonzero prefix zeroes out, a zero prefix fills with ones). One
flip is always a single edge and lowers the alternating number by exactly
one, so iterating it reaches the root in the fewest possible hops.

Routes stitch descents together. After stripping the common suffix, the
source descends to the reduced root and the tail of the path is the
destination's own descent run backwards; when both reduced labels end
nonzero and one has a length-1 uniform suffix, the route instead descends
inside each copy and crosses the single edge between the two copy roots,
saving the transit through the global root. Ascending as a reversed
descent keeps every hop a real edge and makes routes deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .labels import (
    FILLER,
    Label,
    alt,
    common_suffix_len,
    require_same_spec,
    uniform_prefix_len,
)
from .metrics import DistanceCase, distance
from .topology import is_adjacent


@dataclass(frozen=True)
class Path:
    """Non-empty vertex sequence whose consecutive entries should be edges."""

    labels: tuple[Label, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("a path needs at least one vertex")

    @property
    def edge_count(self) -> int:
        return len(self.labels) - 1

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.labels)

    def __getitem__(self, i):
        return self.labels[i]


def swap_toward_root(x: Label) -> Label:
    """One descent step: flip the maximal uniform prefix.

    A nonzero prefix becomes zeros; a zero prefix becomes filler ones. The
    result is adjacent to x and its alternating number is one smaller.
    """
    if alt(x) == 0:
        raise ValueError("the root has no descent step")
    p = uniform_prefix_len(x.digits)
    fill = 0 if x.digits[0] != 0 else FILLER
    return Label((fill,) * p + x.digits[p:], x.spec)


def descent(x: Label) -> Path:
    """The deterministic walk from x down to the root, one flip per hop."""
    steps = [x]
    cur = x
    while alt(cur) > 0:
        cur = swap_toward_root(cur)
        steps.append(cur)
    return Path(tuple(steps))


def route(x: Label, y: Label) -> Path:
    """A shortest path from x to y; deterministic in its filler choices."""
    require_same_spec(x, y)
    spec = x.spec
    k = spec.k
    s = common_suffix_len(x, y)
    if s == k:
        return Path((x,))
    m = k - s
    tail = x.digits[m:]
    reduced = spec.prefix(m)
    a = Label(x.digits[:m], reduced)
    b = Label(y.digits[:m], reduced)
    case = distance(x, y).case
    if case in (DistanceCase.THROUGH_ROOT_I, DistanceCase.THROUGH_ROOT_II):
        down = [lab.digits + tail for lab in descent(a)]
        up = [lab.digits + tail for lab in descent(b)]
        seq = down + up[-2::-1]
    elif m == 1:
        # both reduced digits nonzero: the pair is a first-digit edge
        seq = [x.digits, y.digits]
    else:
        inner = spec.prefix(m - 1)
        pin_a = (a.digits[-1],) + tail
        pin_b = (b.digits[-1],) + tail
        down = [lab.digits + pin_a for lab in descent(Label(a.digits[:-1], inner))]
        bridge = (0,) * (m - 1) + pin_b
        up = [lab.digits + pin_b for lab in descent(Label(b.digits[:-1], inner))]
        seq = down + [bridge] + up[-2::-1]
    return Path(tuple(Label(d, spec) for d in seq))


def next_hop(x: Label, y: Label) -> Label:
    """The neighbor to forward to, computed from the two labels alone.

    Iterating this from x walks the same hops as `route(x, y)` and reaches
    y in exactly the distance between them.
    """
    require_same_spec(x, y)
    if x.digits == y.digits:
        raise ValueError("already at the destination")
    return route(x, y).labels[1]


def validate_path(path: Path | Sequence[Label]) -> int | None:
    """None when every consecutive pair is an edge, else the first bad index."""
    labs = tuple(path)
    for i in range(len(labs) - 1):
        u, v = labs[i], labs[i + 1]
        if u.digits == v.digits or is_adjacent(u, v) is None:
            return i
    return None
