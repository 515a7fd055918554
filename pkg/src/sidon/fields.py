"""GF(p^3) arithmetic on coefficient triples.

Elements are tuples ``(a0, a1, a2)`` meaning ``a0 + a1*x + a2*x^2`` modulo a
monic irreducible cubic ``x^3 + m2*x^2 + m1*x + m0`` over GF(p).  Just enough
machinery to locate a primitive element and take discrete logarithms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import PreconditionError, ResourceLimitError
from .primes import is_prime, prime_factors

# Default ceiling on the base prime; q = p^2+p+1 stays near 10^6.
PRIME_CEILING = 1000

Triple = tuple[int, int, int]

ONE: Triple = (1, 0, 0)


@dataclass(frozen=True)
class CubicExtension:
    """GF(p^3) with a fixed modulus polynomial and primitive element."""

    p: int
    modulus: Triple  # (m0, m1, m2): constant, linear, quadratic coefficient
    generator: Triple

    @property
    def size(self) -> int:
        return self.p**3

    def mul(self, a: Triple, b: Triple) -> Triple:
        p = self.p
        m0, m1, m2 = self.modulus
        a0, a1, a2 = a
        b0, b1, b2 = b
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a1 * b2 + a2 * b1
        c4 = a2 * b2
        # fold x^4, then x^3, via x^3 = -(m2 x^2 + m1 x + m0)
        c1 -= c4 * m0
        c2 -= c4 * m1
        c3 -= c4 * m2
        c0 -= c3 * m0
        c1 -= c3 * m1
        c2 -= c3 * m2
        return (c0 % p, c1 % p, c2 % p)

    def pow(self, a: Triple, e: int) -> Triple:
        if e < 0:
            raise PreconditionError("negative exponent")
        result = ONE
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def _smallest_irreducible_cubic(p: int) -> Triple:
    # A cubic is reducible over GF(p) iff it has a root there.
    for m0 in range(p):
        for m1 in range(p):
            for m2 in range(p):
                if all((t * t * t + m2 * t * t + m1 * t + m0) % p for t in range(p)):
                    return (m0, m1, m2)
    raise RuntimeError(f"no irreducible cubic over GF({p})")  # unreachable


def _smallest_primitive(p: int, modulus: Triple) -> Triple:
    probe = CubicExtension(p, modulus, ONE)
    n = p**3 - 1
    checks = [n // ell for ell in prime_factors(n)]
    for a0 in range(p):
        for a1 in range(p):
            for a2 in range(p):
                g = (a0, a1, a2)
                if g == (0, 0, 0):
                    continue
                if all(probe.pow(g, c) != ONE for c in checks):
                    return g
    raise RuntimeError(f"no primitive element in GF({p}^3)")  # unreachable


@lru_cache(maxsize=None)
def build_extension(p: int, ceiling: int = PRIME_CEILING) -> CubicExtension:
    """Deterministic GF(p^3): lexicographically smallest modulus and generator.

    Coefficient triples are ordered constant-term first.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if p > ceiling:
        raise ResourceLimitError(f"prime {p} exceeds ceiling {ceiling}")
    modulus = _smallest_irreducible_cubic(p)
    generator = _smallest_primitive(p, modulus)
    return CubicExtension(p, modulus, generator)
