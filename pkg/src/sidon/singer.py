"""Perfect difference sets mod q = p^2+p+1 and dense Sidon sets in [1, N].

The difference set collects the exponents i (mod q) for which generator^i
falls in the plane spanned by {1, x} inside GF(p^3).  Its p+1 translates are
each Sidon, cover [1, q] jointly, and pairwise intersect in the single shared
element q.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from math import isqrt

from .core import IntegerSet, PreconditionError
from .fields import ONE, CubicExtension, build_extension
from .primes import largest_prime_at_most

# Above this prime the full exponent scan (p^3 steps) is replaced by
# baby-step giant-step logarithms in the order-q subgroup (~p^2 steps).
ONE_PASS_MAX = 50

DENSE_METHODS = ("singer", "erdos_turan", "best")


@dataclass(frozen=True)
class SingerSystem:
    """A perfect difference set and, once filled, its covering translates."""

    p: int
    q: int
    difference_set: IntegerSet
    translates: tuple[IntegerSet, ...] = ()


def _subspace_logs_scan(ext: CubicExtension, q: int) -> set[int]:
    """One pass over all powers of the generator, keeping plane members."""
    logs: set[int] = set()
    acc = ONE
    g = ext.generator
    for i in range(ext.size - 1):
        if acc[2] == 0:
            logs.add(i % q)
        acc = ext.mul(acc, g)
    return logs


def _subspace_logs_bsgs(ext: CubicExtension, q: int) -> set[int]:
    """Logs mod q of the plane's projective points, via the order-q subgroup.

    For y = g^d, raising to the p-1 power lands in the subgroup generated by
    G = g^(p-1), which has order exactly q, and the exponent becomes d mod q.
    Scalar multiples of y share d mod q, so one representative per projective
    point suffices: 1 and c + x for c in GF(p).
    """
    p = ext.p
    g1 = ext.pow(ext.generator, p - 1)
    m = isqrt(q) + 1
    baby: dict[tuple[int, int, int], int] = {}
    acc = ONE
    for j in range(m):
        baby.setdefault(acc, j)
        acc = ext.mul(acc, g1)
    giant = ext.pow(g1, q - m)  # g1^(-m)
    reps = [ONE] + [(c, 1, 0) for c in range(p)]
    logs: set[int] = set()
    for y in reps:
        walk = ext.pow(y, p - 1)
        for i in range(m + 1):
            j = baby.get(walk)
            if j is not None:
                logs.add((i * m + j) % q)
                break
            walk = ext.mul(walk, giant)
        else:
            raise RuntimeError("discrete log walk failed")  # unreachable
    return logs


@lru_cache(maxsize=None)
def singer_difference_set(p: int) -> SingerSystem:
    """Perfect difference set of size p+1 mod q = p^2+p+1, minimum shifted to 0."""
    ext = build_extension(p)
    q = p * p + p + 1
    if p <= ONE_PASS_MAX:
        logs = _subspace_logs_scan(ext, q)
    else:
        logs = _subspace_logs_bsgs(ext, q)
    if len(logs) != p + 1:
        raise RuntimeError(f"difference set for p={p} has size {len(logs)}")
    base = min(logs)
    d = IntegerSet(tuple(sorted(v - base for v in logs)))
    return SingerSystem(p, q, d)


@lru_cache(maxsize=None)
def singer_family(p: int) -> SingerSystem:
    return translate_family(singer_difference_set(p))


def translate_family(sys: SingerSystem) -> SingerSystem:
    """Fill in the p+1 translates (d - d_i mod q), residue 0 written as q."""
    q = sys.q
    d = sys.difference_set.elements
    translates = tuple(
        IntegerSet(tuple(sorted(((x - di) % q) or q for x in d))) for di in d
    )
    return replace(sys, translates=translates)


def largest_prime_with_q_at_most(n: int) -> int | None:
    """Largest prime p with p^2+p+1 <= n, or None (smallest q is 7)."""
    m = isqrt(n)
    while m >= 2:
        p = largest_prime_at_most(m)
        if p is None:
            return None
        if p * p + p + 1 <= n:
            return p
        m = p - 1
    return None


def _quadratic_sidon(p: int) -> IntegerSet:
    """p-element Sidon set {2p*i + (i^2 mod p) + 1 : i = 0..p-1} in [1, 2p^2)."""
    return IntegerSet(tuple(2 * p * i + (i * i) % p + 1 for i in range(p)))


def _small_case(n: int) -> IntegerSet:
    # No admissible prime: fall back to the exact solver on [1, n] (n <= 7).
    from .solver import max_sidon_naive

    return max_sidon_naive(range(1, n + 1)).witness_set


@lru_cache(maxsize=512)
def dense_sidon_in(n: int, method: str = "best") -> IntegerSet:
    """A large Sidon subset of [1, n] by the requested construction.

    ``singer`` shifts the difference set of the largest prime with q <= n;
    ``erdos_turan`` uses the quadratic construction for the largest prime
    with 2p^2 <= n; ``best`` returns the larger of the two (ties to singer).
    Inputs too small for either prime fall back to exhaustive small cases.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    if method not in DENSE_METHODS:
        raise PreconditionError(f"unknown method {method!r}")
    if method == "best":
        a = dense_sidon_in(n, "singer")
        b = dense_sidon_in(n, "erdos_turan")
        return a if len(a) >= len(b) else b
    if method == "singer":
        p = largest_prime_with_q_at_most(n)
        if p is None:
            return _small_case(n)
        return singer_difference_set(p).difference_set.shift(1)
    p = largest_prime_at_most(isqrt(n // 2))
    if p is None:
        return _small_case(n)
    return _quadratic_sidon(p)
