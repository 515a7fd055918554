"""Doubling-spaced point family in n blocks of n consecutive integers.

For a base b >= 2 the family is {b^(k+1) : k=1..n} together with
{b^(k+1)+k : k=1..n-1}, always 2n-1 points inside the blocks
[b^(k+1), b^(k+1)+n-1].  Whether it is actually Sidon is left entirely to
the checker; base is a knob so failures and successes can be mapped
empirically.  For base 2 adjacent blocks touch at n = 4 and overlap from
n = 5 on, so the covering union below can have fewer than n maximal
intervals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    MAX_ELEMENT,
    IntegerSet,
    IntervalUnion,
    PreconditionError,
    ResourceLimitError,
    SidonCheck,
    is_sidon,
)


@dataclass(frozen=True)
class GeometricFamily:
    n: int
    base: int
    powers: IntegerSet  # b^(k+1), k = 1..n
    offsets: IntegerSet  # b^(k+1)+k, k = 1..n-1
    blocks: tuple[tuple[int, int], ...]  # raw per-k blocks, may overlap
    intervals: IntervalUnion  # merged covering union

    @property
    def elements(self) -> IntegerSet:
        return IntegerSet(tuple(sorted(self.powers.elements + self.offsets.elements)))


def build_family(n: int, base: int = 2, ceiling: int = MAX_ELEMENT) -> GeometricFamily:
    """Build the family; no Sidon verification is performed here."""
    if n < 1:
        raise PreconditionError("n must be positive")
    if base < 2:
        raise PreconditionError("base must be at least 2")
    if base ** (n + 1) > ceiling:
        raise ResourceLimitError(f"base**{n + 1} exceeds ceiling {ceiling}")
    powers = IntegerSet(tuple(base ** (k + 1) for k in range(1, n + 1)))
    offsets = IntegerSet(tuple(base ** (k + 1) + k for k in range(1, n)))
    blocks = tuple((base ** (k + 1), base ** (k + 1) + n - 1) for k in range(1, n + 1))
    return GeometricFamily(
        n=n,
        base=base,
        powers=powers,
        offsets=offsets,
        blocks=blocks,
        intervals=IntervalUnion.union_of(blocks),
    )


def verify_family(family: GeometricFamily, mode: str = "strict") -> SidonCheck:
    return is_sidon(family.elements, mode)


def first_failing_n(base: int, mode: str, n_max: int = 16) -> tuple[int, tuple[int, int, int, int]] | None:
    """Smallest n in [1, n_max] whose family fails the check, with witness."""
    for n in range(1, n_max + 1):
        check = verify_family(build_family(n, base), mode)
        if not check.is_sidon:
            assert check.witness is not None
            return n, check.witness
    return None
