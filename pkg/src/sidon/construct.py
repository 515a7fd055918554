"""Constructions of large Sidon sets in a union of two intervals.

Instances are normalized so the first interval is [1, n1] with n2 <= n1 and
the second starts at ``gap_start > n1``.  The shape parameters are
alpha = n2/n1 and beta = (gap_start - n1)/n1; note the exact integer
identities (1+beta)*n1 = gap_start and (1+alpha+beta)*n1 = gap_start + n2,
which the split points below use verbatim.

Five constructions are provided: a dense set in the first interval alone, a
difference-set translate dodging the gap, and three split-and-shift schemes
for well separated, moderately separated, and barely separated intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Callable, Sequence

from .core import (
    IntegerSet,
    IntervalUnion,
    PreconditionError,
    is_sidon,
)
from .singer import dense_sidon_in, largest_prime_with_q_at_most, singer_family

METHODS = (
    "case_i",
    "case_ii",
    "case_iii_a",
    "case_iii_b",
    "case_iii_c",
    "dense_in_I2",
)


@dataclass(frozen=True)
class TwoIntervalInstance:
    """Two-interval ambient set [1, n1] | [gap_start, gap_start + n2 - 1]."""

    n1: int
    n2: int
    gap_start: int

    def __post_init__(self) -> None:
        if self.n1 < 1 or self.n2 < 1:
            raise PreconditionError("interval sizes must be positive")
        if self.n2 > self.n1:
            raise PreconditionError(
                "need n2 <= n1; mirror the instance first (see build_in)"
            )
        if self.gap_start <= self.n1:
            raise PreconditionError("second interval must start beyond the first")

    @property
    def alpha(self) -> float:
        return self.n2 / self.n1

    @property
    def beta(self) -> float:
        return (self.gap_start - self.n1) / self.n1

    @property
    def total(self) -> int:
        return self.n1 + self.n2

    @property
    def max_a(self) -> int:
        return self.gap_start + self.n2 - 1

    @property
    def ambient(self) -> IntervalUnion:
        return IntervalUnion.union_of(
            [(1, self.n1), (self.gap_start, self.max_a)]
        )


@dataclass(frozen=True)
class ConstructionReport:
    method: str
    elements: IntegerSet
    size: int
    ratio: float
    verified: bool
    dropped: int = 0


def classify(inst: TwoIntervalInstance, alpha0: float, beta0: float) -> str:
    """Case label for an instance at thresholds; boundary ties go to the
    earlier-listed case."""
    if not 0 < alpha0 <= 1 or beta0 < 0:
        raise PreconditionError("need alpha0 in (0,1] and beta0 >= 0")
    if inst.alpha <= alpha0:
        return "case_i"
    if inst.beta <= beta0:
        return "case_ii"
    if inst.gap_start >= 2 * inst.n1:  # beta >= 1
        return "case_iii_a"
    if inst.gap_start > 2 * inst.n2:  # beta > 2*alpha - 1, with beta < 1 here
        return "case_iii_b"
    return "case_iii_c"


def split_shift(
    s, cut: int, shift: int, clamp_hi: int
) -> tuple[tuple[int, ...], int]:
    """Keep elements <= cut, move the rest up by ``shift``; drop past clamp_hi.

    Returns the new elements and the dropped count.  The two halves stay
    disjoint because shifted elements exceed cut.
    """
    lower: list[int] = []
    upper: list[int] = []
    dropped = 0
    for x in s:
        if x <= cut:
            lower.append(x)
        elif x + shift <= clamp_hi:
            upper.append(x + shift)
        else:
            dropped += 1
    return tuple(lower + upper), dropped


def _report(
    inst: TwoIntervalInstance, method: str, elements, dropped: int = 0
) -> ConstructionReport:
    chosen = IntegerSet(tuple(elements))
    verified = is_sidon(chosen).is_sidon and inst.ambient.issuperset(chosen)
    if not verified:
        raise RuntimeError(f"{method} produced an invalid set on {inst}")
    return ConstructionReport(
        method=method,
        elements=chosen,
        size=len(chosen),
        ratio=len(chosen) / sqrt(inst.total),
        verified=verified,
        dropped=dropped,
    )


def construct_case_i(inst: TwoIntervalInstance) -> ConstructionReport:
    """Dense Sidon set in the first interval alone; always applicable."""
    return _report(inst, "case_i", dense_sidon_in(inst.n1))


def construct_dense_in_i2(inst: TwoIntervalInstance) -> ConstructionReport:
    """Dense Sidon set in the second interval alone."""
    base = dense_sidon_in(inst.n2)
    return _report(inst, "dense_in_I2", base.shift(inst.gap_start - 1))


def construct_case_ii(inst: TwoIntervalInstance) -> ConstructionReport:
    """Difference-set translate with the fewest elements inside the gap.

    Needs a prime p with gap_start <= p^2+p+1 <= max A; the largest such p is
    used.  Gap elements are spread one-per-translate across the family, so
    the best translate loses at most gap_size/(p+1) elements.
    """
    p = largest_prime_with_q_at_most(inst.max_a)
    if p is None or p * p + p + 1 < inst.gap_start:
        raise PreconditionError(
            f"no prime with q in [{inst.gap_start}, {inst.max_a}]"
        )
    family = singer_family(p)
    gap_lo, gap_hi = inst.n1 + 1, inst.gap_start - 1
    best_idx, best_hits = 0, p + 2
    for idx, tr in enumerate(family.translates):
        hits = sum(1 for x in tr if gap_lo <= x <= gap_hi)
        if hits < best_hits:
            best_idx, best_hits = idx, hits
    chosen = [
        x
        for x in family.translates[best_idx]
        if not gap_lo <= x <= gap_hi and x <= inst.max_a
    ]
    return _report(inst, "case_ii", chosen, dropped=p + 1 - len(chosen))


def construct_case_iii_a(inst: TwoIntervalInstance) -> ConstructionReport:
    """Well separated intervals: split a dense set in [1, n1+n2] at n1 and
    shift the upper part into the second interval."""
    if inst.gap_start < 2 * inst.n1:  # beta < 1
        raise PreconditionError("needs beta >= 1 (gap_start >= 2*n1)")
    base = dense_sidon_in(inst.total)
    elements, dropped = split_shift(
        base, cut=inst.n1, shift=inst.gap_start - inst.n1, clamp_hi=inst.max_a
    )
    return _report(inst, "case_iii_a", elements, dropped)


def construct_case_iii_b(inst: TwoIntervalInstance) -> ConstructionReport:
    """Moderate separation: split at floor(gap_start/2) = floor((1+beta)n1/2).

    Applies when beta < 1 and beta > 2*alpha - 1 (gap_start > 2*n2), which
    keeps the three sum ranges (both-low, mixed, both-high) disjoint.
    """
    if inst.gap_start >= 2 * inst.n1:
        raise PreconditionError("needs beta < 1 (gap_start < 2*n1)")
    if inst.gap_start <= 2 * inst.n2:
        raise PreconditionError("needs beta > 2*alpha - 1 (gap_start > 2*n2)")
    cut = inst.gap_start // 2
    base = dense_sidon_in(cut + inst.n2)
    elements, dropped = split_shift(
        base, cut=cut, shift=(inst.gap_start + 1) // 2, clamp_hi=inst.max_a
    )
    return _report(inst, "case_iii_b", elements, dropped)


def construct_case_iii_c(inst: TwoIntervalInstance) -> ConstructionReport:
    """Barely separated intervals: work inside [1, floor(2T/3)] where
    T = gap_start + n2 = (1+alpha+beta)n1, splitting at floor(T/3)."""
    if inst.gap_start >= 2 * inst.n1:
        raise PreconditionError("needs beta < 1 (gap_start < 2*n1)")
    if inst.gap_start > 2 * inst.n2:
        raise PreconditionError("needs beta <= 2*alpha - 1 (gap_start <= 2*n2)")
    t = inst.gap_start + inst.n2
    base = dense_sidon_in(2 * t // 3)
    elements, dropped = split_shift(
        base, cut=t // 3, shift=(t + 2) // 3, clamp_hi=inst.max_a
    )
    return _report(inst, "case_iii_c", elements, dropped)


_BUILDERS: dict[str, Callable[[TwoIntervalInstance], ConstructionReport]] = {
    "case_i": construct_case_i,
    "case_ii": construct_case_ii,
    "case_iii_a": construct_case_iii_a,
    "case_iii_b": construct_case_iii_b,
    "case_iii_c": construct_case_iii_c,
    "dense_in_I2": construct_dense_in_i2,
}


def best_construction(
    inst: TwoIntervalInstance, methods: Sequence[str] | None = None
) -> ConstructionReport:
    """Run every applicable construction and keep the largest verified set.

    Ties go to the earlier method label.  ``case_i`` always applies, so a
    report is always returned.
    """
    labels = METHODS if methods is None else tuple(methods)
    for label in labels:
        if label not in _BUILDERS:
            raise PreconditionError(f"unknown method {label!r}")
    best: ConstructionReport | None = None
    for label in METHODS:
        if label not in labels:
            continue
        try:
            report = _BUILDERS[label](inst)
        except PreconditionError:
            continue
        if best is None or report.size > best.size:
            best = report
    if best is None:
        raise PreconditionError("no applicable construction among requested methods")
    return best


def normalize_two_intervals(
    i1: tuple[int, int], i2: tuple[int, int]
) -> tuple[TwoIntervalInstance, Callable[[int], int]]:
    """Normalize arbitrary disjoint intervals to an instance plus the map
    sending normalized elements back to original coordinates.

    The intervals are ordered, translated so the first starts at 1, and
    mirrored (x -> max A - x + 1) when the second interval is the larger one.
    """
    (lo1, hi1), (lo2, hi2) = sorted([tuple(i1), tuple(i2)])
    if lo1 > hi1 or lo2 > hi2 or lo1 < 1:
        raise PreconditionError("bad interval bounds")
    if hi1 >= lo2:
        raise PreconditionError("intervals must be disjoint")
    n1 = hi1 - lo1 + 1
    n2 = hi2 - lo2 + 1
    if n2 <= n1:
        shift = lo1 - 1
        inst = TwoIntervalInstance(n1, n2, lo2 - shift)
        return inst, lambda x: x + shift
    inst = TwoIntervalInstance(n2, n1, hi2 - hi1 + 1)
    return inst, lambda x: hi2 + 1 - x


def build_in(
    i1: tuple[int, int],
    i2: tuple[int, int],
    method: str = "auto",
) -> tuple[ConstructionReport, TwoIntervalInstance]:
    """Construct in arbitrary two-interval coordinates; the report's elements
    are mapped back to the original frame."""
    inst, back = normalize_two_intervals(i1, i2)
    if method == "auto":
        report = best_construction(inst)
    elif method in _BUILDERS:
        report = _BUILDERS[method](inst)
    else:
        raise PreconditionError(f"unknown method {method!r}")
    mapped = IntegerSet(tuple(sorted(back(x) for x in report.elements)))
    original = IntervalUnion.union_of([tuple(i1), tuple(i2)])
    if not (is_sidon(mapped).is_sidon and original.issuperset(mapped)):
        raise RuntimeError("mapped construction failed verification")
    report = ConstructionReport(
        method=report.method,
        elements=mapped,
        size=report.size,
        ratio=report.ratio,
        verified=True,
        dropped=report.dropped,
    )
    return report, inst
