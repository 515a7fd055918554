"""Exact maximum-Sidon-subset solvers.

``max_sidon_naive`` walks the full tree of Sidon subsets (every feasible
subset is visited once, no size-based pruning) and serves as the reference
oracle.  ``max_sidon_bb`` prunes with remaining-element counts and
interval-hull caps from the window-counting bound.  Both extend subsets by
elements in increasing order, so the first optimum found, and hence the
reported witness, is the lexicographically smallest one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import IntegerSet, PreconditionError, as_integer_set, is_sidon
from .bound import hull_bound

NAIVE_CAP = 25
BB_CAP = 80

_TICK = 4096  # nodes between timeout checks


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness_set: IntegerSet
    nodes_explored: int
    elapsed: float
    complete: bool = True


class _Timeout(Exception):
    pass


class _Search:
    def __init__(self, elems: tuple[int, ...], timeout: float | None):
        self.elems = elems
        self.n = len(elems)
        span = (elems[-1] - elems[0]) if elems else 0
        self.diff_used = bytearray(span + 1)
        self.current: list[int] = []
        self.best: list[int] = []
        self.nodes = 0
        self.timeout = timeout
        self.t0 = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        if self.timeout is not None and self.nodes % _TICK == 0:
            if time.monotonic() - self.t0 > self.timeout:
                raise _Timeout

    def can_add(self, x: int) -> bool:
        used = self.diff_used
        for y in self.current:
            if used[x - y]:
                return False
        return True

    def push(self, x: int) -> None:
        used = self.diff_used
        for y in self.current:
            used[x - y] = 1
        self.current.append(x)

    def pop(self) -> None:
        x = self.current.pop()
        used = self.diff_used
        for y in self.current:
            used[x - y] = 0


def _enumerate(s: _Search, start: int) -> None:
    """Visit every Sidon subset whose next element index is >= start."""
    s.tick()
    if len(s.current) > len(s.best):
        s.best = s.current.copy()
    for i in range(start, s.n):
        x = s.elems[i]
        if s.can_add(x):
            s.push(x)
            _enumerate(s, i + 1)
            s.pop()


def _branch_and_bound(s: _Search, start: int, caps: list[int]) -> None:
    s.tick()
    if len(s.current) > len(s.best):
        s.best = s.current.copy()
    depth = len(s.current)
    best = len(s.best)
    for i in range(start, s.n):
        # caps is non-increasing, so no later index can help either
        if depth + min(s.n - i, caps[i]) <= best:
            break
        x = s.elems[i]
        if s.can_add(x):
            s.push(x)
            _branch_and_bound(s, i + 1, caps)
            s.pop()
            best = len(s.best)


def _run(elems: tuple[int, ...], caps: list[int] | None, timeout: float | None) -> SolveResult:
    s = _Search(elems, timeout)
    complete = True
    try:
        if caps is None:
            _enumerate(s, 0)
        else:
            _branch_and_bound(s, 0, caps)
    except _Timeout:
        complete = False
    witness = IntegerSet(tuple(s.best))
    check = is_sidon(witness)
    if not check.is_sidon:
        raise RuntimeError(f"solver produced a non-Sidon witness {witness.elements}")
    return SolveResult(
        optimum=len(witness),
        witness_set=witness,
        nodes_explored=s.nodes,
        elapsed=time.monotonic() - s.t0,
        complete=complete,
    )


def max_sidon_naive(a, cap: int = NAIVE_CAP) -> SolveResult:
    """Exhaustive reference oracle; every Sidon subset is visited."""
    elems = as_integer_set(a).elements
    if len(elems) > cap:
        raise PreconditionError(f"naive solver capped at {cap} elements")
    return _run(elems, caps=None, timeout=None)


def max_sidon_bb(a, cap: int = BB_CAP, timeout: float | None = None) -> SolveResult:
    """Branch-and-bound solver; on timeout the best-so-far is flagged incomplete."""
    elems = as_integer_set(a).elements
    if len(elems) > cap:
        raise PreconditionError(f"branch-and-bound solver capped at {cap} elements")
    n = len(elems)
    caps = [0] * n
    for idx in range(n):
        hull = elems[-1] - elems[idx] + 1
        caps[idx] = min(n - idx, hull_bound(hull))
    for idx in range(1, n):
        # a suffix is contained in every earlier suffix, so earlier caps apply
        caps[idx] = min(caps[idx], caps[idx - 1])
    return _run(elems, caps=caps, timeout=timeout)
