"""Mixed-radix label algebra.

Vertices of a hierarchical graph are digit strings x_1 ... x_k where the
digit at position i ranges over 0 .. n_i - 1. Position 1 is written
leftmost and is the finest coordinate; the right end is the coarsest, and
every "suffix" below refers to the right end. The radix sequence
(n_1, ..., n_k) fixes the family member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterator, Sequence

DEFAULT_ORDER_CAP = 10_000_000

# Deterministic stand-in used wherever any nonzero digit would do (descent
# steps, conjugation). Valid for every position since all radices are >= 2.
FILLER = 1


class SpecError(ValueError):
    """Invalid radix sequence."""


class LabelError(ValueError):
    """Invalid label text or digit sequence."""


class SpecMismatchError(ValueError):
    """Two labels bound to different radix sequences were combined."""


class OrderCapError(ValueError):
    """Enumeration was requested for a member above the configured order cap."""


@dataclass(frozen=True)
class RadixSpec:
    """Radix sequence (n_1, ..., n_k) of one family member.

    The order cap guards enumeration: operations that materialize all
    vertices or edges refuse to run above it, while purely arithmetic
    results (sizes, radius, diameter, layer counts) stay available for
    arbitrarily large members. The cap does not take part in equality:
    labels of equal radix sequences are always interoperable.
    """

    radices: tuple[int, ...]
    order_cap: int = field(default=DEFAULT_ORDER_CAP, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "radices", tuple(self.radices))
        if len(self.radices) < 1:
            raise SpecError("a radix sequence needs at least one entry")
        for n in self.radices:
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                raise SpecError(f"radices must be integers >= 2, got {n!r}")
        if self.order_cap < 1:
            raise SpecError("order cap must be positive")

    @property
    def k(self) -> int:
        """Number of digit positions."""
        return len(self.radices)

    def order(self) -> int:
        """Exact vertex count: the product of all radices."""
        result = 1
        for n in self.radices:
            result *= n
        return result

    def check_enumerable(self, limit: int | None = None) -> None:
        """Raise OrderCapError when the member is too large to materialize."""
        cap = self.order_cap if limit is None else limit
        if self.order() > cap:
            raise OrderCapError(f"order {self.order()} exceeds enumeration cap {cap}")

    @property
    def compact_ok(self) -> bool:
        """True when one character per digit is unambiguous (all n_i <= 10)."""
        return all(n <= 10 for n in self.radices)

    def label(self, digits: Sequence[int]) -> Label:
        return Label(tuple(digits), self)

    def root(self) -> Label:
        return Label((0,) * self.k, self)

    def labels(self) -> Iterator[Label]:
        """All vertices in lexicographic digit order (cap enforced)."""
        self.check_enumerable()
        for digits in product(*(range(n) for n in self.radices)):
            yield Label(digits, self)

    def index_of(self, digits: Sequence[int]) -> int:
        """Rank of a digit sequence in lexicographic order."""
        idx = 0
        for x, n in zip(digits, self.radices):
            idx = idx * n + x
        return idx

    def digits_at(self, index: int) -> tuple[int, ...]:
        """Inverse of index_of."""
        out = []
        for n in reversed(self.radices):
            out.append(index % n)
            index //= n
        return tuple(reversed(out))

    def prefix(self, m: int) -> RadixSpec:
        """Sub-member on the first m positions."""
        if not 1 <= m <= self.k:
            raise SpecError(f"prefix length {m} out of range 1..{self.k}")
        return RadixSpec(self.radices[:m], self.order_cap)

    def __str__(self) -> str:
        return format_spec(self)

    def __repr__(self) -> str:
        return f"RadixSpec({format_spec(self)})"


def parse_spec(text: str, order_cap: int = DEFAULT_ORDER_CAP) -> RadixSpec:
    """Parse a comma-separated radix sequence such as "2,3,4"."""
    try:
        radices = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise SpecError(f"bad radix sequence {text!r}") from exc
    return RadixSpec(radices, order_cap)


def format_spec(spec: RadixSpec) -> str:
    return ",".join(str(n) for n in spec.radices)


@dataclass(frozen=True, repr=False)
class Label:
    """One vertex: a digit string bound to its radix sequence."""

    digits: tuple[int, ...]
    spec: RadixSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(self.digits))
        if len(self.digits) != self.spec.k:
            raise LabelError(f"expected {self.spec.k} digits, got {len(self.digits)}")
        for pos, (x, n) in enumerate(zip(self.digits, self.spec.radices), start=1):
            if not isinstance(x, int) or not 0 <= x < n:
                raise LabelError(f"digit {x!r} at position {pos} out of range 0..{n - 1}")

    def __str__(self) -> str:
        return format_label(self)

    def __repr__(self) -> str:
        return f"Label({format_label(self)!r}, {format_spec(self.spec)})"


def require_same_spec(x: Label, y: Label) -> None:
    if x.spec.radices != y.spec.radices:
        raise SpecMismatchError(
            f"labels from different families: {format_spec(x.spec)} vs {format_spec(y.spec)}"
        )


def parse_label(text: str, spec: RadixSpec) -> Label:
    """Parse comma-separated digits, or the compact one-char-per-digit form.

    The compact form is only accepted when every radix fits a single
    decimal digit (n_i <= 10). A single position never needs a separator,
    so for k = 1 any bare number is read as that one digit.
    """
    if "," in text:
        try:
            digits = tuple(int(p) for p in text.split(","))
        except ValueError as exc:
            raise LabelError(f"bad label text {text!r}") from exc
        return Label(digits, spec)
    if spec.k == 1:
        try:
            return Label((int(text),), spec)
        except ValueError as exc:
            raise LabelError(f"bad label text {text!r}") from exc
    if not spec.compact_ok:
        raise LabelError("compact label form needs every radix <= 10; use comma-separated digits")
    if not text.isdigit():
        raise LabelError(f"bad label text {text!r}")
    return Label(tuple(int(c) for c in text), spec)


def format_label(x: Label, form: str = "auto") -> str:
    """Render a label; form is "auto", "compact", or "comma".

    "auto" picks the compact form whenever it is unambiguous, matching the
    style used for small radices throughout.
    """
    if form not in ("auto", "compact", "comma"):
        raise ValueError(f"unknown form {form!r}")
    if form == "compact" and not x.spec.compact_ok:
        raise LabelError("compact form needs every radix <= 10")
    if form == "comma" or (form == "auto" and not x.spec.compact_ok):
        return ",".join(str(d) for d in x.digits)
    return "".join(str(d) for d in x.digits)


def alt_digits(digits: Sequence[int]) -> int:
    """Alternating number of a raw digit sequence.

    Counts zero/nonzero class changes in the sequence extended by one
    trailing zero, so a nonzero final digit contributes a closing change.
    The empty sequence has alternating number 0.
    """
    count = 0
    prev: bool | None = None
    for d in digits:
        cur = d != 0
        if prev is not None and cur != prev:
            count += 1
        prev = cur
    if prev:
        count += 1
    return count


def alt(x: Label) -> int:
    """Alternating number of a label; equals its hop distance to the root."""
    return alt_digits(x.digits)


def uniform_prefix_len(digits: Sequence[int]) -> int:
    """Length of the maximal leading run of one digit class."""
    head = digits[0] != 0
    n = 1
    while n < len(digits) and (digits[n] != 0) == head:
        n += 1
    return n


def uniform_suffix_len(digits: Sequence[int]) -> int:
    """Length of the maximal trailing run of one digit class."""
    tail = digits[-1] != 0
    n = 1
    i = len(digits) - 2
    while i >= 0 and (digits[i] != 0) == tail:
        n += 1
        i -= 1
    return n


class BlockKind(Enum):
    ZERO = "zero"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    start: int  # 1-based position of the first digit in the run
    length: int


@dataclass(frozen=True)
class BlockView:
    """Maximal uniform runs of a label, left to right.

    Runs are non-empty, contiguous, cover all positions, and alternate in
    kind. The alternating number falls out of the run count: it equals the
    number of runs when the last run is nonzero, one less otherwise (and 0
    for the all-zero label).
    """

    blocks: tuple[Block, ...]

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def blocks(x: Label) -> BlockView:
    """Decompose a label into maximal all-zero / all-nonzero runs."""
    out: list[Block] = []
    pos = 0
    k = x.spec.k
    while pos < k:
        nonzero = x.digits[pos] != 0
        run = pos
        while run < k and (x.digits[run] != 0) == nonzero:
            run += 1
        out.append(Block(BlockKind.NONZERO if nonzero else BlockKind.ZERO, pos + 1, run - pos))
        pos = run
    return BlockView(tuple(out))


def common_suffix_len(x: Label, y: Label) -> int:
    """Length of the longest shared right end of two labels."""
    require_same_spec(x, y)
    k = x.spec.k
    n = 0
    while n < k and x.digits[k - 1 - n] == y.digits[k - 1 - n]:
        n += 1
    return n


def conjugate(x: Label) -> Label:
    """Swap digit classes: zeros become the filler 1, nonzeros become 0.

    With all radices equal to 2 this is the bitwise complement and an
    involution; in general it only inverts the zero pattern.
    """
    return Label(tuple(0 if d != 0 else FILLER for d in x.digits), x.spec)


@dataclass(frozen=True)
class LabelClass:
    is_root: bool
    is_peripheral: bool
    is_uniform: bool
    first_nonzero_position: int | None  # 1-based, None for the root


def classify(x: Label) -> LabelClass:
    """Root / peripheral / uniform flags and the first nonzero position."""
    nonzero = [d != 0 for d in x.digits]
    first = next((i + 1 for i, nz in enumerate(nonzero) if nz), None)
    return LabelClass(
        is_root=first is None,
        is_peripheral=all(nonzero),
        is_uniform=len(set(nonzero)) == 1,
        first_nonzero_position=first,
    )


def binomial_spec(k: int, order_cap: int = DEFAULT_ORDER_CAP) -> RadixSpec:
    """The all-radix-2 member of depth k: a binomial tree on 2**k vertices."""
    if k < 1:
        raise SpecError(f"depth must be >= 1, got {k}")
    return RadixSpec((2,) * k, order_cap)
