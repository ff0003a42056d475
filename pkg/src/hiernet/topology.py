"""Adjacency rules, edge enumeration, size formulas, and structural views.

Three edge kinds make up a family member:

* first-digit edges inside the complete graph obtained by varying
  position 1;
* zero-block flips joining an all-zero prefix of length >= 2 to an
  all-nonzero prefix of the same length over a shared tail (the length-1
  case coincides with a first-digit edge and is reported as such);
* root cliques joining labels that are zero before some position i >= 2
  and carry distinct nonzero digits at i, agreeing afterwards.

`edges` enumerates rule by rule; `build_recursive` grows the same edge set
by nesting copies level by level, which keeps the two constructions
independent of each other for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from math import comb, prod
from typing import Iterator, Sequence

from .labels import (
    Label,
    LabelError,
    RadixSpec,
    SpecError,
    format_label,
    require_same_spec,
)


class EdgeKind(Enum):
    FIRST_DIGIT = "first_digit"
    ZERO_BLOCK_FLIP = "zero_block_flip"
    ROOT_CLIQUE = "root_clique"


Edge = tuple[Label, Label, EdgeKind]
DigitEdge = tuple[tuple[int, ...], tuple[int, ...], EdgeKind]


def is_adjacent(x: Label, y: Label) -> EdgeKind | None:
    """Classify the edge between two distinct labels, or return None.

    Symmetric in its arguments. The classification keys on the last
    position where the labels differ: a lone difference at position 1 is a
    first-digit edge; matching all-zero/all-nonzero prefixes up to the
    difference form a zero-block flip; a shared zero prefix with two
    nonzero digits at the difference forms a root-clique edge.
    """
    require_same_spec(x, y)
    if x.digits == y.digits:
        raise ValueError("adjacency is only defined for distinct labels")
    k = x.spec.k
    s = 0
    while s < k and x.digits[k - 1 - s] == y.digits[k - 1 - s]:
        s += 1
    m = k - s  # last differing position, 1-based
    if m == 1:
        return EdgeKind.FIRST_DIGIT
    a = x.digits[:m]
    b = y.digits[:m]
    if (
        a[m - 1] != 0
        and b[m - 1] != 0
        and all(d == 0 for d in a[: m - 1])
        and all(d == 0 for d in b[: m - 1])
    ):
        return EdgeKind.ROOT_CLIQUE
    if all(d == 0 for d in a) and all(d != 0 for d in b):
        return EdgeKind.ZERO_BLOCK_FLIP
    if all(d != 0 for d in a) and all(d == 0 for d in b):
        return EdgeKind.ZERO_BLOCK_FLIP
    return None


def neighbor_digits(
    digits: Sequence[int], radices: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], EdgeKind]]:
    """Neighbor digit sequences with their edge kinds, duplicate-free.

    The three kinds touch disjoint neighbor sets: first-digit partners
    differ in exactly one position (the first), zero-block partners differ
    in at least two, and root-clique partners differ in exactly one
    position past the first.
    """
    k = len(radices)
    digits = tuple(digits)
    tail = digits[1:]
    for d in range(radices[0]):
        if d != digits[0]:
            yield (d,) + tail, EdgeKind.FIRST_DIGIT
    zero_run = 0
    while zero_run < k and digits[zero_run] == 0:
        zero_run += 1
    nonzero_run = 0
    while nonzero_run < k and digits[nonzero_run] != 0:
        nonzero_run += 1
    for ln in range(2, zero_run + 1):
        rest = digits[ln:]
        for head in product(*(range(1, radices[j]) for j in range(ln))):
            yield head + rest, EdgeKind.ZERO_BLOCK_FLIP
    for ln in range(2, nonzero_run + 1):
        yield (0,) * ln + digits[ln:], EdgeKind.ZERO_BLOCK_FLIP
    if 1 <= zero_run < k:
        # first nonzero digit sits at position zero_run + 1 (1-based) >= 2
        head = (0,) * zero_run
        rest = digits[zero_run + 1 :]
        for d in range(1, radices[zero_run]):
            if d != digits[zero_run]:
                yield head + (d,) + rest, EdgeKind.ROOT_CLIQUE


def neighbors(x: Label) -> list[tuple[Label, EdgeKind]]:
    """All adjacent labels with their edge kinds, in label order."""
    spec = x.spec
    out = [(Label(d, spec), kind) for d, kind in neighbor_digits(x.digits, spec.radices)]
    out.sort(key=lambda pair: pair[0].digits)
    return out


@dataclass(frozen=True)
class EdgeStream:
    """Canonically ordered edge sequence.

    Each edge appears once, with the lexicographically smaller endpoint
    first, and the whole stream sorted; exports are therefore
    byte-identical across runs.
    """

    spec: RadixSpec
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def count_by_kind(self) -> dict[EdgeKind, int]:
        counts = {kind: 0 for kind in EdgeKind}
        for _, _, kind in self.edges:
            counts[kind] += 1
        return counts

    def pair_set(self) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
        return {(u.digits, v.digits) for u, v, _ in self.edges}


def _canonical_stream(spec: RadixSpec, raw: list[DigitEdge]) -> EdgeStream:
    ordered = [(u, v, kind) if u < v else (v, u, kind) for u, v, kind in raw]
    ordered.sort(key=lambda e: (e[0], e[1]))
    return EdgeStream(spec, tuple((Label(u, spec), Label(v, spec), kind) for u, v, kind in ordered))


def edges(spec: RadixSpec) -> EdgeStream:
    """Every edge of the member, enumerated rule by rule."""
    spec.check_enumerable()
    radices = spec.radices
    k = spec.k
    raw: list[DigitEdge] = []
    for tail in product(*(range(n) for n in radices[1:])):
        for a, b in combinations(range(radices[0]), 2):
            raw.append(((a,) + tail, (b,) + tail, EdgeKind.FIRST_DIGIT))
    for ln in range(2, k + 1):
        zero_head = (0,) * ln
        for tail in product(*(range(n) for n in radices[ln:])):
            for head in product(*(range(1, n) for n in radices[:ln])):
                raw.append((zero_head + tail, head + tail, EdgeKind.ZERO_BLOCK_FLIP))
    for i in range(2, k + 1):
        head = (0,) * (i - 1)
        for tail in product(*(range(n) for n in radices[i:])):
            for a, b in combinations(range(1, radices[i - 1]), 2):
                raw.append((head + (a,) + tail, head + (b,) + tail, EdgeKind.ROOT_CLIQUE))
    return _canonical_stream(spec, raw)


def size_closed_form(spec: RadixSpec) -> tuple[int, tuple[int, int, int]]:
    """Total edge count with the per-kind triple, by arithmetic alone.

    The three terms count first-digit cliques, zero-block flips of length
    >= 2, and root cliques, in that order.
    """
    n = spec.radices
    k = spec.k
    t1 = comb(n[0], 2) * prod(n[1:])
    t2 = sum(prod(r - 1 for r in n[:i]) * prod(n[i:]) for i in range(2, k + 1))
    t3 = sum(comb(n[i - 1] - 1, 2) * prod(n[i:]) for i in range(2, k + 1))
    return t1 + t2 + t3, (t1, t2, t3)


def size_recursive(spec: RadixSpec) -> int:
    """Edge count by the level recursion over nested copies.

    Level 1 is a complete graph. Each further level replicates the
    previous one n_h times, then adds the root-to-peripheral edges and the
    clique on the nonzero copies' roots.
    """
    n = spec.radices
    m = comb(n[0], 2)
    for h in range(2, spec.k + 1):
        m = n[h - 1] * m + prod(r - 1 for r in n[:h]) + comb(n[h - 1] - 1, 2)
    return m


def build_recursive(spec: RadixSpec) -> EdgeStream:
    """Edges grown by the literal level recursion.

    Independent of the rule-by-rule enumeration in `edges`: the two must
    produce identical streams, which the verification battery asserts.
    """
    spec.check_enumerable()
    n = spec.radices
    current: list[DigitEdge] = [
        ((a,), (b,), EdgeKind.FIRST_DIGIT) for a, b in combinations(range(n[0]), 2)
    ]
    for h in range(2, spec.k + 1):
        grown: list[DigitEdge] = []
        for copy in range(n[h - 1]):
            grown.extend((u + (copy,), v + (copy,), kind) for u, v, kind in current)
        # the level root joins every all-nonzero label of the level
        for head in product(*(range(1, r) for r in n[:h])):
            grown.append(((0,) * h, head, EdgeKind.ZERO_BLOCK_FLIP))
        # the nonzero copies' roots form a clique
        zero = (0,) * (h - 1)
        for a, b in combinations(range(1, n[h - 1]), 2):
            grown.append((zero + (a,), zero + (b,), EdgeKind.ROOT_CLIQUE))
        current = grown
    return _canonical_stream(spec, current)


def clique_of(x: Label) -> list[Label]:
    """The complete graph through x obtained by varying position 1."""
    return [Label((d,) + x.digits[1:], x.spec) for d in range(x.spec.radices[0])]


def _parse_suffix(
    spec: RadixSpec, suffix: str | Sequence[int], expected_len: int | None = None
) -> tuple[int, ...]:
    if isinstance(suffix, str):
        if suffix == "":
            sfx: tuple[int, ...] = ()
        elif "," in suffix:
            try:
                sfx = tuple(int(p) for p in suffix.split(","))
            except ValueError as exc:
                raise LabelError(f"bad suffix text {suffix!r}") from exc
        elif spec.compact_ok:
            if not suffix.isdigit():
                raise LabelError(f"bad suffix text {suffix!r}")
            sfx = tuple(int(c) for c in suffix)
        else:
            try:
                sfx = (int(suffix),)
            except ValueError as exc:
                raise LabelError(f"bad suffix text {suffix!r}") from exc
    else:
        sfx = tuple(suffix)
    if expected_len is not None and len(sfx) != expected_len:
        raise LabelError(f"expected a suffix of length {expected_len}, got {len(sfx)}")
    if len(sfx) > spec.k:
        raise LabelError(f"suffix longer than the label length {spec.k}")
    offset = spec.k - len(sfx)
    for pos, (d, n) in enumerate(zip(sfx, spec.radices[offset:]), start=offset + 1):
        if not 0 <= d < n:
            raise LabelError(f"suffix digit {d} at position {pos} out of range 0..{n - 1}")
    return sfx


@dataclass(frozen=True)
class CopyView:
    """The sub-member formed by all labels sharing a fixed suffix.

    Its root is the zero-prefix label and its peripherals are the
    all-nonzero-prefix labels; under suffix stripping the induced subgraph
    is the member on the remaining prefix radices.
    """

    spec: RadixSpec
    suffix: tuple[int, ...]
    vertices: tuple[Label, ...]
    root: Label
    peripherals: tuple[Label, ...]


def copy_vertices(spec: RadixSpec, suffix: str | Sequence[int]) -> CopyView:
    """Materialize the copy with the given suffix (length 1..k)."""
    sfx = _parse_suffix(spec, suffix)
    if not 1 <= len(sfx) <= spec.k:
        raise LabelError(f"suffix length must be 1..{spec.k}, got {len(sfx)}")
    head_len = spec.k - len(sfx)
    head_radices = spec.radices[:head_len]
    if head_radices:
        RadixSpec(head_radices, spec.order_cap).check_enumerable()
    vertices = tuple(
        Label(head + sfx, spec) for head in product(*(range(n) for n in head_radices))
    )
    root = Label((0,) * head_len + sfx, spec)
    peripherals = tuple(v for v in vertices if all(d != 0 for d in v.digits[:head_len]))
    return CopyView(spec, sfx, vertices, root, peripherals)


def root_clique(
    spec: RadixSpec, position: int, suffix: str | Sequence[int] = ()
) -> list[Label]:
    """The mutually adjacent copy roots at a position >= 2.

    These are the labels that are zero before `position`, carry each
    nonzero digit there, and share the given suffix after it; they induce
    a complete graph on n_i - 1 vertices.
    """
    if not 2 <= position <= spec.k:
        raise SpecError(f"position {position} out of range 2..{spec.k}")
    sfx = _parse_suffix(spec, suffix, expected_len=spec.k - position)
    head = (0,) * (position - 1)
    return [Label(head + (d,) + sfx, spec) for d in range(1, spec.radices[position - 1])]


def quotient(spec: RadixSpec, level: int) -> EdgeStream:
    """Collapse every fixed-suffix copy on the first `level` positions.

    Each copy becomes a single vertex named by its suffix and parallel
    edges merge; the simple graph left over is exactly the member on the
    remaining radices (n_{level+1}, ..., n_k).
    """
    if not 1 <= level <= spec.k - 1:
        raise SpecError(f"level {level} out of range 1..{spec.k - 1}")
    spec.check_enumerable()
    qspec = RadixSpec(spec.radices[level:], spec.order_cap)
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    raw: list[DigitEdge] = []
    for u, v, _ in edges(spec):
        a, b = u.digits[level:], v.digits[level:]
        if a == b:
            continue
        if b < a:
            a, b = b, a
        if (a, b) in seen:
            continue
        seen.add((a, b))
        kind = is_adjacent(Label(a, qspec), Label(b, qspec))
        if kind is None:
            raise RuntimeError("quotient produced a pair outside the family rules")
        raw.append((a, b, kind))
    return _canonical_stream(qspec, raw)


def to_edgelist(stream: EdgeStream) -> str:
    """One edge per line: smaller label, TAB, larger label, LF."""
    return "".join(f"{format_label(u)}\t{format_label(v)}\n" for u, v, _ in stream)


def to_dot(stream: EdgeStream) -> str:
    """Undirected DOT text with quoted label strings as node ids."""
    lines = ["graph {\n"]
    lines.extend(f'  "{format_label(u)}" -- "{format_label(v)}";\n' for u, v, _ in stream)
    lines.append("}\n")
    return "".join(lines)
