"""Core types: interval unions, integer sets, and Sidon verification.

Two verification modes are supported everywhere:

* ``strict``: all pairwise differences of distinct elements are distinct
  (equivalently, all sums a+b with a <= b are distinct).  This is the
  classical B2 property and the default.
* ``weak``: all sums a+b with a < b are distinct.  Strictly weaker.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Iterator

# Element ceiling keeping every pairwise sum inside 64-bit range.
MAX_ELEMENT = 2**62

# Largest supported element for membership bitmaps (~16 MiB of flags).
BITMAP_LIMIT = 1 << 24

MODES = ("strict", "weak")


class PreconditionError(ValueError):
    """Raised when an input violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """Raised when a configured size or time budget would be exceeded."""


@dataclass(frozen=True)
class IntegerSet:
    """Strictly increasing tuple of nonnegative integers."""

    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        prev = -1
        for x in self.elements:
            if not isinstance(x, int):
                raise PreconditionError(f"non-integer element {x!r}")
            if x < 0:
                raise PreconditionError(f"negative element {x}")
            if x > MAX_ELEMENT:
                raise ResourceLimitError(f"element {x} exceeds ceiling {MAX_ELEMENT}")
            if x <= prev:
                raise PreconditionError(
                    "elements must be strictly increasing with no duplicates"
                )
            prev = x

    @classmethod
    def from_iterable(cls, xs: Iterable[int]) -> "IntegerSet":
        """Sorted construction; duplicate elements are rejected."""
        return cls(tuple(sorted(xs)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __contains__(self, x: int) -> bool:
        i = bisect.bisect_left(self.elements, x)
        return i < len(self.elements) and self.elements[i] == x

    def shift(self, offset: int) -> "IntegerSet":
        return IntegerSet(tuple(x + offset for x in self.elements))


@dataclass(frozen=True)
class IntervalUnion:
    """Disjoint, sorted, inclusive integer intervals with gaps between them."""

    intervals: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "intervals", tuple((int(a), int(b)) for a, b in self.intervals)
        )
        prev_hi = None
        for lo, hi in self.intervals:
            if lo < 1:
                raise PreconditionError(f"interval ({lo},{hi}) must start at 1 or later")
            if lo > hi:
                raise PreconditionError(f"interval ({lo},{hi}) has lo > hi")
            if prev_hi is not None and lo <= prev_hi + 1:
                raise PreconditionError(
                    f"intervals must be sorted and separated by gaps near ({lo},{hi})"
                )
            prev_hi = hi

    @classmethod
    def normalize(cls, pairs: Iterable[tuple[int, int]]) -> "IntervalUnion":
        """Sort and merge touching intervals; overlapping input is rejected."""
        ordered = sorted((int(a), int(b)) for a, b in pairs)
        merged: list[list[int]] = []
        for lo, hi in ordered:
            if lo > hi or lo < 1:
                raise PreconditionError(f"bad interval ({lo},{hi})")
            if merged and lo <= merged[-1][1]:
                raise PreconditionError(
                    f"interval ({lo},{hi}) overlaps ({merged[-1][0]},{merged[-1][1]})"
                )
            if merged and lo == merged[-1][1] + 1:
                merged[-1][1] = hi
            else:
                merged.append([lo, hi])
        return cls(tuple((lo, hi) for lo, hi in merged))

    @classmethod
    def union_of(cls, pairs: Iterable[tuple[int, int]]) -> "IntervalUnion":
        """Set-theoretic union: overlapping and touching intervals merge."""
        ordered = sorted((int(a), int(b)) for a, b in pairs)
        merged: list[list[int]] = []
        for lo, hi in ordered:
            if lo > hi or lo < 1:
                raise PreconditionError(f"bad interval ({lo},{hi})")
            if merged and lo <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        return cls(tuple((lo, hi) for lo, hi in merged))

    @property
    def cardinality(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.intervals)

    @property
    def count(self) -> int:
        """Number of maximal intervals."""
        return len(self.intervals)

    @property
    def min_element(self) -> int:
        if not self.intervals:
            raise PreconditionError("empty interval union has no minimum")
        return self.intervals[0][0]

    @property
    def max_element(self) -> int:
        if not self.intervals:
            raise PreconditionError("empty interval union has no maximum")
        return self.intervals[-1][1]

    def __contains__(self, x: int) -> bool:
        i = bisect.bisect_right(self.intervals, (x, MAX_ELEMENT)) - 1
        return i >= 0 and self.intervals[i][0] <= x <= self.intervals[i][1]

    def members(self) -> Iterator[int]:
        return chain.from_iterable(range(lo, hi + 1) for lo, hi in self.intervals)

    def to_integer_set(self) -> IntegerSet:
        return IntegerSet(tuple(self.members()))

    def issuperset(self, xs: Iterable[int]) -> bool:
        return all(x in self for x in xs)


@dataclass(frozen=True)
class SidonCheck:
    """Verdict of a Sidon verification.

    ``witness`` is the lexicographically smallest quadruple (a, b, c, d) with
    a + b = c + d and {a, b} != {c, d}; it is present exactly when the check
    fails.  In weak mode the witness additionally satisfies a != b and c != d.
    """

    is_sidon: bool
    mode: str
    witness: tuple[int, int, int, int] | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise PreconditionError(f"unknown mode {self.mode!r}")
        if self.is_sidon != (self.witness is None):
            raise PreconditionError("witness present iff the check fails")
        if self.witness is not None:
            a, b, c, d = self.witness
            if a + b != c + d or sorted((a, b)) == sorted((c, d)):
                raise PreconditionError(f"invalid witness {self.witness}")
            if self.mode == "weak" and (a == b or c == d):
                raise PreconditionError("weak witness needs distinct summands")


def as_integer_set(s) -> IntegerSet:
    if isinstance(s, IntegerSet):
        return s
    if isinstance(s, IntervalUnion):
        return s.to_integer_set()
    return IntegerSet.from_iterable(s)


def is_sidon(s, mode: str = "strict") -> SidonCheck:
    """Check the Sidon property, reporting the smallest violating quadruple.

    Strict mode scans sums a+b over a <= b (a repeated summand encodes a
    repeated difference); weak mode scans a < b only.  O(|s|^2).
    """
    if mode not in MODES:
        raise PreconditionError(f"unknown mode {mode!r}")
    elems = as_integer_set(s).elements
    n = len(elems)
    same_ok = mode == "strict"
    first: dict[int, tuple[int, int]] = {}
    best: tuple[int, int, int, int] | None = None
    for i in range(n):
        a = elems[i]
        for j in range(i if same_ok else i + 1, n):
            b = elems[j]
            total = a + b
            prev = first.get(total)
            if prev is None:
                first[total] = (a, b)
            else:
                cand = (prev[0], prev[1], a, b)
                if best is None or cand < best:
                    best = cand
    return SidonCheck(best is None, mode, best)


def membership_bitmap(a: IntervalUnion, limit: int = BITMAP_LIMIT) -> bytearray:
    """Flag array b with b[i] truthy iff i is in ``a``, for 0 <= i <= max(a)."""
    if not a.intervals:
        return bytearray(1)
    top = a.max_element
    if top > limit:
        raise ResourceLimitError(f"bitmap for max element {top} exceeds limit {limit}")
    bits = bytearray(top + 1)
    for lo, hi in a.intervals:
        bits[lo : hi + 1] = b"\x01" * (hi - lo + 1)
    return bits


def parse_set(text: str) -> IntegerSet:
    """Parse a comma-separated integer set literal like ``1,2,5,7``."""
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise PreconditionError(f"bad set literal {text!r}") from exc
    if not values:
        raise PreconditionError("empty set literal")
    return IntegerSet.from_iterable(values)


def parse_interval(text: str) -> tuple[int, int]:
    """Parse one inclusive interval literal ``lo:hi``."""
    parts = text.split(":")
    if len(parts) != 2:
        raise PreconditionError(f"bad interval literal {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise PreconditionError(f"bad interval literal {text!r}") from exc
    return lo, hi


def parse_intervals(text: str) -> IntervalUnion:
    """Parse a comma-separated union of interval literals like ``1:3,5:9``."""
    parts = [p for p in text.split(",") if p.strip() != ""]
    if not parts:
        raise PreconditionError("empty interval literal")
    return IntervalUnion.normalize([parse_interval(p) for p in parts])


def format_intervals(a: IntervalUnion) -> str:
    return ",".join(f"{lo}:{hi}" for lo, hi in a.intervals)
