"""Integer number theory: primality, multiplicative orders, cyclotomic values.

Everything here is exact integer arithmetic.  No floats, no probabilistic
answers: the Miller-Rabin witness set below is deterministic for every
64-bit integer, and inputs beyond that range fall back to trial division
of the witnesses' span (we never need numbers that large).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "is_prime",
    "mult_order",
    "cyclotomic_value",
    "cyclotomic_poly",
    "min_k_order_appears",
    "factorize",
    "euler_phi",
    "PrimePair",
]

# Deterministic for n < 3.3 * 10^24 (Sorenson-Webster witness set).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test for the integer sizes used here."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; {prime: exponent}."""
    if n <= 0:
        raise ValueError("factorize wants a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of a modulo n.  Requires gcd(a, n) = 1."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    # The order divides phi(n); strip prime factors while the power stays 1.
    e = euler_phi(n)
    for p in factorize(e):
        while e % p == 0 and pow(a, e // p, n) == 1:
            e //= p
    return e


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Coefficients of the d-th cyclotomic polynomial, constant term first."""
    if d < 1:
        raise ValueError("index must be positive")
    # x^d - 1 divided by the product of all lower cyclotomic factors.
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _polydiv_exact(num, list(cyclotomic_poly(e)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials, den monic.
    assert den[-1] == 1
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert all(c == 0 for c in num[: len(den) - 1])
    return q


def cyclotomic_value(d: int, q: int) -> int:
    """Value of the d-th cyclotomic polynomial at the integer q."""
    acc = 0
    for c in reversed(cyclotomic_poly(d)):
        acc = acc * q + c
    return acc


def min_k_order_appears(ell: int, n: int, p: int) -> int:
    """Least k such that p divides prod_{i<=n} (ell^{2ki} - 1).

    That product is, up to the ell-part, the number of points of a split
    odd orthogonal group of rank n over the field with ell^k elements, so
    this is the first field power whose group order picks up the prime p.
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if not is_prime(ell):
        raise ValueError("ell must be prime")
    if p == ell:
        raise ValueError("p and ell must be distinct")
    f = mult_order(ell, p)
    # p | ell^{2ki} - 1  iff  f | 2ki  iff  (f / gcd(f, 2i)) | k.
    return min(f // math.gcd(f, 2 * i) for i in range(1, n + 1))


@dataclass(frozen=True)
class PrimePair:
    """Pair of odd primes p, q with q of multiplicative order m modulo p."""

    p: int
    q: int
    m: int

    def __post_init__(self) -> None:
        if not (is_prime(self.p) and self.p > 2):
            raise ValueError(f"p = {self.p} is not an odd prime")
        if not (is_prime(self.q) and self.q > 2):
            raise ValueError(f"q = {self.q} is not an odd prime")
        if self.p == self.q:
            raise ValueError("p and q must be distinct")
        if mult_order(self.q, self.p) != self.m:
            raise ValueError(
                f"order of {self.q} mod {self.p} is not {self.m}"
            )
