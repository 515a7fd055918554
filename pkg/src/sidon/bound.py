"""Window-counting upper bounds for Sidon sets in a union of k intervals.

For a ground set E of cardinality n split into k intervals and a window
length u < n, any Sidon subset has size at most

    sqrt((u-1)/u * (n+ku) + (n+ku)^2 / (4u^2)) + (n+ku)/(2u).

The counting behind it: sliding windows I_m = [m-u, m-1] over M = E + [1, u]
hit every element exactly u times, and a Sidon set admits at most one pair
per difference d, each co-occurring in u-d windows.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from math import ceil, isqrt, sqrt

from .core import IntegerSet, IntervalUnion, PreconditionError, as_integer_set

REGIMES = (
    "explicit_u",
    "case_i",
    "case_ii",
    "case_iii",
    "optimal_scan",
    "remark_refined",
)

# Cutover between the dense-interval-count u-choice and the sparse one.
CASE_I_THRESHOLD = 0.5

_GOLDEN = (sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class BoundQuery:
    n: int
    k: int
    u: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise PreconditionError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if not 1 <= self.u < self.n:
            raise PreconditionError(f"need 1 <= u < n, got u={self.u}, n={self.n}")


@dataclass(frozen=True)
class BoundReport:
    bound: float
    u_used: int
    regime: str


def _evaluate(n: int, k: int, u: int) -> float:
    m = n + k * u
    return sqrt((u - 1) / u * m + m * m / (4 * u * u)) + m / (2 * u)


def bound_given_u(n: int, k: int, u: int) -> BoundReport:
    """Evaluate the closed-form bound at an explicit window length."""
    BoundQuery(n, k, u)
    return BoundReport(_evaluate(n, k, u), u, "explicit_u")


def bound_theorem(n: int, k: int) -> BoundReport:
    """Bound with the window length chosen by the k-versus-sqrt(n) regime.

    Many intervals (k >= sqrt(n)/2): u = ceil(n/k), giving coefficient
    alpha + sqrt(2 + alpha^2) at alpha = k/sqrt(n).  Fewer intervals:
    u = ceil(n^(3/4)/sqrt(k)), approaching sqrt(n) + sqrt(k) n^(1/4).
    """
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if not 1 <= k < n:
        raise PreconditionError(f"need 1 <= k < n, got k={k}")
    rn = sqrt(n)
    if k >= CASE_I_THRESHOLD * rn:
        u = -(-n // k)
        regime = "case_i"
    else:
        u = ceil(n**0.75 / sqrt(k))
        regime = "case_iii" if k < n**0.25 else "case_ii"
    u = min(max(u, 1), n - 1)
    return BoundReport(_evaluate(n, k, u), u, regime)


def bound_optimal_u(n: int, k: int, u_max: int) -> BoundReport:
    """Scan every u in [1, u_max] and keep the smallest bound (ties: smallest u)."""
    BoundQuery(n, k, min(u_max, n - 1))
    if u_max >= n:
        raise PreconditionError(f"need u_max < n, got u_max={u_max}")
    best_u, best_val = 1, _evaluate(n, k, 1)
    for u in range(2, u_max + 1):
        val = _evaluate(n, k, u)
        if val < best_val:
            best_u, best_val = u, val
    return BoundReport(best_val, best_u, "optimal_scan")


def remark_coefficient(alpha: float, beta: float) -> float:
    """Asymptotic bound coefficient for k ~ alpha*sqrt(n), u ~ beta*sqrt(n)."""
    if alpha <= 0 or beta <= 0:
        raise PreconditionError("alpha and beta must be positive")
    t = 1 + alpha * beta
    return sqrt(t + t * t / (4 * beta * beta)) + t / (2 * beta)


def minimize_remark_beta(
    alpha: float, lo: float = 1e-3, hi: float = 64.0, tol: float = 1e-6
) -> tuple[float, float]:
    """Golden-section minimum of the coefficient over beta; (beta, value)."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = remark_coefficient(alpha, c), remark_coefficient(alpha, d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = remark_coefficient(alpha, c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = remark_coefficient(alpha, d)
    beta = (a + b) / 2
    return beta, remark_coefficient(alpha, beta)


def windows(e: IntervalUnion, u: int) -> IntervalUnion:
    """The window index set E + [1, u] (merged where blocks collide)."""
    if u < 1:
        raise PreconditionError("u must be positive")
    return IntervalUnion.union_of([(lo + 1, hi + u) for lo, hi in e.intervals])


def count_window_pairs(e: IntervalUnion, s, u: int) -> tuple[int, int]:
    """Per-window incidence sum and co-occurring pair count for S inside E.

    Returns (sum over windows of |I_m ∩ S|, sum over windows of C(|I_m ∩ S|, 2)).
    The first is always |S|*u; for a strict Sidon set the second is at most
    u(u-1)/2.
    """
    elems = as_integer_set(s).elements
    if u >= e.cardinality:
        raise PreconditionError("need u < |E|")
    if not e.issuperset(elems):
        raise PreconditionError("S must be a subset of E")
    incidence = 0
    pairs = 0
    for m in windows(e, u).members():
        c = bisect.bisect_left(elems, m) - bisect.bisect_left(elems, m - u)
        incidence += c
        pairs += c * (c - 1) // 2
    return incidence, pairs


def hull_bound(size: int) -> int:
    """Integer Sidon-size cap for any set inside an interval of ``size`` points.

    Uses the single-interval bound at window lengths near sqrt(size), which is
    sound for every window length.
    """
    if size < 3:
        return max(size, 0)
    u_max = min(size - 1, 4 * isqrt(size) + 8)
    return int(bound_optimal_u(size, 1, u_max).bound)
