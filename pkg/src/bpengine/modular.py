"""Arithmetic in F_p and the coefficients of the Adem-type relations.

Coefficients are plain ``int`` residues in ``range(p)``.
"""
from __future__ import annotations

from functools import lru_cache

__all__ = [
    "check_prime",
    "binom_mod_p",
    "adem_coeff",
    "adem_coeff_beta",
    "sign",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def check_prime(p) -> int:
    """Return ``p`` as an int, raising ``ValueError`` unless it is an odd prime."""
    if isinstance(p, bool) or int(p) != p:
        raise ValueError(f"prime must be an integer, got {p!r}")
    p = int(p)
    if p < 3 or not _is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


def sign(e: int, p: int) -> int:
    """(-1)**e as a residue mod p."""
    return 1 if e % 2 == 0 else p - 1


@lru_cache(maxsize=None)
def _small_binom(n: int, k: int, p: int) -> int:
    # 0 <= k <= n < p, so the factorials involved are units mod p
    num = den = 1
    for i in range(k):
        num = num * (n - i) % p
        den = den * (i + 1) % p
    return num * pow(den, -1, p) % p


@lru_cache(maxsize=65536)
def binom_mod_p(p: int, n: int, k: int) -> int:
    """Binomial coefficient C(n, k) mod p via Lucas' theorem.

    Out-of-range indices (``k < 0``, ``k > n`` or ``n < 0``) give 0.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        out = out * _small_binom(nd, kd, p) % p
        n //= p
        k //= p
    return out


def adem_coeff(p: int, k: int, r: int, j: int) -> int:
    """(-1)^(r+j) C((p-1)(k-j) - 1, r - pj) mod p.

    Used by both the P^a P^b relation and the second sum of the
    P^a b P^b relation.
    """
    return sign(r + j, p) * binom_mod_p(p, (p - 1) * (k - j) - 1, r - p * j) % p


def adem_coeff_beta(p: int, k: int, r: int, j: int) -> int:
    """(-1)^(r+j) C((p-1)(k-j), r - pj) mod p, the coefficient of b P^(a+b-j) P^j."""
    return sign(r + j, p) * binom_mod_p(p, (p - 1) * (k - j), r - p * j) % p
