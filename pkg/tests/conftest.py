"""Shared brute-force oracles, independent of the library code paths."""

from collections import Counter
from itertools import combinations, combinations_with_replacement

import pytest


def brute_strict_verdict(elems) -> bool:
    """All sums with repetition distinct (same as: all differences distinct)."""
    sums = [a + b for a, b in combinations_with_replacement(sorted(elems), 2)]
    return len(sums) == len(set(sums))


def brute_weak_verdict(elems) -> bool:
    """All sums of distinct pairs distinct."""
    sums = [a + b for a, b in combinations(sorted(elems), 2)]
    return len(sums) == len(set(sums))


def brute_smallest_witness(elems, mode):
    """Lexicographically smallest colliding quadruple by full enumeration."""
    elems = sorted(elems)
    pick = combinations_with_replacement if mode == "strict" else combinations
    pairs = list(pick(elems, 2))
    best = None
    for (p, q) in combinations(range(len(pairs)), 2):
        a, b = pairs[p]
        c, d = pairs[q]
        if a + b == c + d:
            cand = min((a, b, c, d), (c, d, a, b))
            if best is None or cand < best:
                best = cand
    return best


def is_perfect_difference_set(elems, q) -> bool:
    counts = Counter((a - b) % q for a in elems for b in elems if a != b)
    return all(counts.get(r, 0) == 1 for r in range(1, q))


@pytest.fixture
def pds_predicate():
    return is_perfect_difference_set
